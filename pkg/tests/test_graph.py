import itertools

import pytest

from pclie.errors import GraphError, UnknownGeneratorError
from pclie.graph import (CommutationGraph, adjacent, adjacent_to_all,
                         all_labeled_graphs, complement, complete_graph,
                         components, edgeless_graph, induced)


def test_adjacent(G1):
    assert adjacent(G1, "x", "y")
    assert adjacent(G1, "y", "x")
    assert not adjacent(G1, "x", "x")
    assert not adjacent(G1, "x", "z")


def test_unknown_generator_named(G1):
    with pytest.raises(UnknownGeneratorError, match="w"):
        adjacent(G1, "x", "w")
    with pytest.raises(UnknownGeneratorError):
        adjacent_to_all(G1, "x", {"w"})


def test_adjacent_to_all(G3):
    assert adjacent_to_all(G3, "x", {"y", "z"})
    assert not adjacent_to_all(G3, "y", {"x", "z"})
    for a in "xyz":
        assert adjacent_to_all(G3, a, set())


def test_construction_rejects_loops_and_duplicates():
    with pytest.raises(GraphError, match="loop"):
        CommutationGraph("xy", [("x", "x")])
    with pytest.raises(GraphError, match="duplicate"):
        CommutationGraph(["x", "x"], [])
    with pytest.raises(UnknownGeneratorError):
        CommutationGraph("xy", [("x", "w")])


def test_induced(G1):
    H = induced(G1, {"x", "y"})
    assert H.names == ("x", "y") and H.edge_list() == [("x", "y")]
    H = induced(G1, {"z", "x"})
    assert H.names == ("x", "z") and not H.edges
    H = induced(G1, set())
    assert len(H) == 0


def test_complement(G1):
    assert complement(edgeless_graph("xy")).edge_list() == [("x", "y")]
    assert complement(G1).edge_list() == [("x", "z"), ("y", "z")]
    assert not complement(complete_graph("xyz")).edges


def test_components(G1):
    c = components(complement(induced(G1, {"x", "y"})))
    assert c == [frozenset({0}), frozenset({1})]
    assert components(edgeless_graph("xyz")) == [frozenset({i}) for i in range(3)]
    path = CommutationGraph("xyz", [("x", "y"), ("y", "z")])
    assert components(path) == [frozenset({0, 1, 2})]


@pytest.mark.parametrize("G", all_labeled_graphs("abcd"))
def test_graph_invariants(G):
    assert complement(complement(G)) == G
    comps = components(G)
    assert sorted(i for c in comps for i in c) == list(range(4))
    for ci, cj in itertools.combinations(comps, 2):
        assert not any(adjacent(G, a, b) for a in ci for b in cj)
    for a in range(4):
        for r in range(5):
            for S in itertools.combinations(range(4), r):
                if adjacent_to_all(G, a, S):
                    assert a not in S
