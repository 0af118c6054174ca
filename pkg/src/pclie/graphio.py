"""Reading and writing commutation graph documents.

A graph document is YAML (JSON is accepted too)::

    generators: [x, y, z]
    edges: [[x, y]]

Errors carry the line and column of the offending node.
"""
from __future__ import annotations

import json
import re

import yaml

from .errors import GraphError, ParseError
from .graph import CommutationGraph


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _where(node):
    mark = node.start_mark
    return mark.line + 1, mark.column + 1


def _fail(message, node):
    line, col = _where(node)
    raise ParseError(message, position=col, line=line)


def _scalar(node, what):
    if not isinstance(node, yaml.ScalarNode) or not node.value:
        _fail(f"{what} must be a generator name", node)
    return node.value


def parse_graph(data) -> CommutationGraph:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        root = yaml.compose(data, Loader=yaml.SafeLoader)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        reason = getattr(exc, "problem", None) or str(exc)
        raise ParseError(f"malformed graph document: {reason}",
                         position=mark.column + 1 if mark else None,
                         line=mark.line + 1 if mark else None) from None
    if not isinstance(root, yaml.MappingNode):
        if root is None:
            raise ParseError("empty graph document", line=1)
        _fail("graph document must be a mapping with 'generators' and 'edges'", root)
    fields = {}
    for key, value in root.value:
        name = _scalar(key, "field name")
        if name not in ("generators", "edges"):
            _fail(f"unknown field {name!r}", key)
        fields[name] = value
    if "generators" not in fields:
        _fail("missing field 'generators'", root)
    gens_node = fields["generators"]
    if not isinstance(gens_node, yaml.SequenceNode):
        _fail("'generators' must be a list", gens_node)
    names, seen = [], set()
    for node in gens_node.value:
        name = _scalar(node, "generator")
        if not _NAME.match(name):
            _fail(f"generator name {name!r} is not an identifier", node)
        if name in seen:
            _fail(f"duplicate generator {name}", node)
        seen.add(name)
        names.append(name)
    edges = []
    edges_node = fields.get("edges")
    if edges_node is not None and not (isinstance(edges_node, yaml.ScalarNode)
                                       and edges_node.tag.endswith(":null")):
        if not isinstance(edges_node, yaml.SequenceNode):
            _fail("'edges' must be a list", edges_node)
        for node in edges_node.value:
            if not isinstance(node, yaml.SequenceNode) or len(node.value) != 2:
                _fail("an edge must be a list of two generator names", node)
            a, b = (_scalar(v, "edge endpoint") for v in node.value)
            for v, end in zip((a, b), node.value):
                if v not in seen:
                    _fail(f"unknown generator {v}", end)
            if a == b:
                _fail(f"loop at generator {a}", node)
            edges.append((a, b))
    try:
        return CommutationGraph(names, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def load_graph(path) -> CommutationGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def dump_graph(G: CommutationGraph) -> str:
    return json.dumps({"generators": list(G.names),
                       "edges": [list(e) for e in G.edge_list()]})
