"""Commutation graphs.

A commutation graph is a finite loop-free undirected graph whose vertices are
the generators of a partially commutative Lie algebra; an edge ``{a, b}``
imposes the relation ``[a, b] = 0``.

Generators are addressed either by name or by their 0-based declaration index.
All functions return plain ``frozenset`` objects of indices for generator sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

import networkx as nx

from .errors import GraphError, UnknownGeneratorError


@dataclass(frozen=True)
class Generator:
    index: int
    name: str


class CommutationGraph:
    """Immutable graph on an ordered list of named generators."""

    def __init__(self, names: Iterable[str], edges: Iterable = ()):
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if name in index:
                raise GraphError(f"duplicate generator {name}")
            index[name] = i
        self.names = names
        self._index = index
        adj = [set() for _ in names]
        edge_set = set()
        for edge in edges:
            a, b = (self.resolve(v) for v in edge)
            if a == b:
                raise GraphError(f"loop at generator {names[a]}")
            adj[a].add(b)
            adj[b].add(a)
            edge_set.add(frozenset((a, b)))
        self._adj = tuple(frozenset(s) for s in adj)
        self.edges = frozenset(edge_set)
        self._hash = hash((names, self.edges))

    # -- lookup ---------------------------------------------------------
    def resolve(self, a) -> int:
        """Index of a generator given by name, index or `Generator`."""
        if isinstance(a, Generator):
            a = a.name
        if isinstance(a, str):
            try:
                return self._index[a]
            except KeyError:
                raise UnknownGeneratorError(a) from None
        if isinstance(a, int) and 0 <= a < len(self.names):
            return a
        raise UnknownGeneratorError(a)

    def resolve_set(self, S) -> frozenset:
        return frozenset(self.resolve(a) for a in S)

    @property
    def generators(self) -> tuple[Generator, ...]:
        return tuple(Generator(i, n) for i, n in enumerate(self.names))

    def __len__(self):
        return len(self.names)

    def neighbors(self, a) -> frozenset:
        return self._adj[self.resolve(a)]

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as name pairs, sorted by declaration index."""
        pairs = sorted(tuple(sorted(e)) for e in self.edges)
        return [(self.names[a], self.names[b]) for a, b in pairs]

    @cached_property
    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.names)))
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def __eq__(self, other):
        if not isinstance(other, CommutationGraph):
            return NotImplemented
        return self.names == other.names and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CommutationGraph({list(self.names)!r}, {self.edge_list()!r})"

    def format_set(self, S) -> str:
        return "{" + ",".join(self.names[i] for i in sorted(S)) + "}"


def adjacent(G: CommutationGraph, a, b) -> bool:
    a, b = G.resolve(a), G.resolve(b)
    return b in G._adj[a]


def adjacent_to_all(G: CommutationGraph, a, S) -> bool:
    """True iff `a` is joined to every member of `S` (vacuously true for empty S)."""
    a = G.resolve(a)
    return G.resolve_set(S) <= G._adj[a]


def sets_adjacent(G: CommutationGraph, S, T) -> bool:
    """Every member of `S` is joined to every member of `T`."""
    T = G.resolve_set(T)
    return all(T <= G._adj[a] for a in G.resolve_set(S))


def induced(G: CommutationGraph, S) -> CommutationGraph:
    """Subgraph on `S`; generators keep their names and relative order."""
    keep = sorted(G.resolve_set(S))
    kept = set(keep)
    edges = [(G.names[a], G.names[b]) for a, b in (tuple(e) for e in G.edges)
             if a in kept and b in kept]
    return CommutationGraph([G.names[i] for i in keep], edges)


def complement(G: CommutationGraph) -> CommutationGraph:
    n = len(G)
    edges = [(a, b) for a, b in combinations(range(n), 2)
             if frozenset((a, b)) not in G.edges]
    return CommutationGraph(G.names, edges)


def components(G: CommutationGraph) -> list[frozenset]:
    """Connected components, ordered by their smallest generator index."""
    comps = [frozenset(c) for c in nx.connected_components(G.nx)]
    return sorted(comps, key=min)


def complete_graph(names) -> CommutationGraph:
    names = list(names)
    return CommutationGraph(names, combinations(names, 2))


def edgeless_graph(names) -> CommutationGraph:
    return CommutationGraph(names, ())


def all_labeled_graphs(names) -> list[CommutationGraph]:
    """Every loop-free graph on the given vertex names (2**C(n,2) of them)."""
    names = list(names)
    pairs = list(combinations(names, 2))
    graphs = []
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        graphs.append(CommutationGraph(names, edges))
    return graphs
