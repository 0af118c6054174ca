import itertools
import random
from collections import defaultdict
from fractions import Fraction

import pytest
import sympy

from pclie.algebra import (LieElement, bracket, build_reduction, component_split,
                           element, free_bracket, homogeneous_parts, normal_form)
from pclie.errors import DegreeBoundError, PCLieError, WordError
from pclie.expr import parse_expr
from pclie.graph import CommutationGraph, all_labeled_graphs
from pclie.sampling import random_element, random_homogeneous
from pclie.words import (GeneratorOrder, enumerate_pcls, leaf, ls_monomials,
                         multidegree, pair)

from oracles import assoc, assoc_commutator, assoc_element, trace_image

x, y, z = leaf(0), leaf(1), leaf(2)
ORDERS3 = [GeneratorOrder.from_names("xyz", p) for p in itertools.permutations("xyz")]


def terms(g):
    return {m.format(g.order.names): c for m, c in g.terms.items()}


# -- free brackets --------------------------------------------------------------

def test_free_bracket_examples(O3):
    assert terms(free_bracket(O3, x, y)) == {"[x,y]": 1}
    assert terms(free_bracket(O3, y, x)) == {"[x,y]": -1}
    assert terms(free_bracket(O3, pair(x, pair(x, y)), y)) == {"[x,[[x,y],y]]": 1}
    assert not free_bracket(O3, x, x)


def test_free_bracket_rejects_non_ls(O3):
    with pytest.raises(WordError):
        free_bracket(O3, pair(y, x), x)


@pytest.mark.parametrize("O", ORDERS3, ids=repr)
def test_free_bracket_against_associative_expansion(O):
    """Structure constants agree with the commutator in the free associative
    algebra, are integers, and have leading term [uv] when u > v."""
    ls = [m for n in range(1, 5) for m in ls_monomials(O, n)]
    for a in ls:
        for b in ls:
            if a.degree + b.degree > 5:
                continue
            got = free_bracket(O, a, b)
            assert all(c.denominator == 1 for _, c in got)
            assert assoc_element(got) == assoc_commutator(assoc(a), assoc(b))
            if O.key(a.word) > O.key(b.word):
                lead, coeff = got.leading()
                assert lead.word == a.word + b.word and coeff == 1
                assert all(O.key(m.word) < O.key(lead.word) for m, _ in list(got)[1:])


# -- reduction tables -----------------------------------------------------------

def rules_as_text(T):
    return {m.format(T.order.names): terms(LieElement(T.order, r)) for m, r in T.rules.items()}


def test_reduction_free_is_empty(G2, O3):
    for d in (2, 4):
        assert len(build_reduction(O3, G2, d)) == 0


def test_reduction_examples(G1, O3):
    assert rules_as_text(build_reduction(O3, G1, 2)) == {"[x,y]": {}}
    assert rules_as_text(build_reduction(O3, G1, 3)) == {
        "[x,y]": {}, "[x,[x,y]]": {}, "[[x,y],y]": {},
        "[x,[y,z]]": {"[[x,z],y]": -1},
    }


def _check_table(T):
    G, O = T.graph, T.order
    key = O.key
    for m, image in T.rules.items():
        assert all(T.is_basis(p) for p in image)
        assert all(c.denominator == 1 for c in image.values())
        assert all(key(p.word) < key(m.word) for p in image)
        img = trace_image(assoc_element(LieElement(O, image)), G)
        assert img == trace_image(assoc(m), G), m.format(O.names)
    # PCLS monomials stay independent in the partially commutative associative algebra
    n = len(O.names)
    groups = defaultdict(list)
    for m in T.basis():
        groups[multidegree(m, n)].append(trace_image(assoc(m), G))
    for polys in groups.values():
        words = sorted({w for p in polys for w in p})
        M = sympy.Matrix([[p.get(w, 0) for w in words] for p in polys])
        assert M.rank() == len(polys)


@pytest.mark.parametrize("G", all_labeled_graphs("xyz"), ids=repr)
def test_rules_preserve_associative_image_3(G):
    for O in ORDERS3:
        _check_table(build_reduction(O, G, 5))


@pytest.mark.parametrize("edges", [
    [("a", "b"), ("b", "c"), ("c", "d")],
    [("a", "b"), ("c", "d")],
    [("a", "b"), ("a", "c"), ("a", "d")],
    [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
    [("a", "b"), ("b", "c"), ("a", "c")],
])
def test_rules_preserve_associative_image_4(edges):
    G = CommutationGraph("abcd", edges)
    for p in ("abcd", "dbca"):
        _check_table(build_reduction(GeneratorOrder.from_names("abcd", p), G, 5))


def test_table_pcls_matches_enumeration(T1, G1, O3):
    assert T1.pcls == enumerate_pcls(O3, G1, 5)


# -- normal forms and brackets ---------------------------------------------------

def test_normal_form_examples(T1):
    assert element(T1, "[x,y]") == 0
    assert str(element(T1, "[x,[y,z]]")) == "-1*[[x,z],y]"
    assert str(element(T1, "x + 2x")) == "3*x"
    assert str(normal_form(T1, LieElement.monomial(T1.order, pair(y, x), form="ls"))) == "0"


def test_normal_form_of_non_ls_monomial(T2):
    m = LieElement.monomial(T2.order, pair(z, x), form="ls")
    assert str(normal_form(T2, m)) == "-1*[x,z]"


def test_normal_form_degree_overflow(G1, O3):
    T = build_reduction(O3, G1, 3)
    with pytest.raises(DegreeBoundError, match="at least 4"):
        normal_form(T, parse_expr("[x,[x,[y,z]]]"))
    g = element(T, "[[x,z],y]")
    with pytest.raises(DegreeBoundError):
        bracket(T, g, g)


def test_bracket_examples(T1, T2):
    X1, Y1 = element(T1, "x"), element(T1, "y")
    assert bracket(T1, X1, Y1) == 0
    assert str(bracket(T2, element(T2, "x"), element(T2, "y"))) == "1*[x,y]"
    assert bracket(T1, X1 + Y1, 5 * X1 - Y1) == 0


@pytest.mark.parametrize("seed", range(5))
def test_normal_form_is_linear_projection(T1, seed):
    rng = random.Random(seed)
    O = T1.order
    # arbitrary LS-form combinations, including non-PCLS monomials
    pool = [m for n in range(1, 5) for m in ls_monomials(O, n)]
    for _ in range(30):
        e1 = LieElement(O, {m: rng.randint(-3, 3) for m in rng.sample(pool, 3)}, "ls")
        e2 = LieElement(O, {m: rng.randint(-3, 3) for m in rng.sample(pool, 3)}, "ls")
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        n1, n2 = normal_form(T1, e1), normal_form(T1, e2)
        assert normal_form(T1, n1) == n1
        assert normal_form(T1, a * e1 + e2) == a * n1 + n2
        assert all(T1.is_basis(m) for m, _ in n1)
        assert trace_image(assoc_element(n1), T1.graph) == trace_image(assoc_element(e1), T1.graph)


def test_relators_vanish(T3):
    for a, b in T3.graph.edge_list():
        assert element(T3, f"[{a},{b}]") == 0
        assert element(T3, f"[[{a},z],[{a},{b}]]") == 0


@pytest.mark.parametrize("seed", range(3))
def test_bracket_is_multihomogeneous(T1, seed):
    rng = random.Random(seed)
    for _ in range(50):
        g = random_homogeneous(T1, rng, 1, 2)
        h = random_homogeneous(T1, rng, 1, 3)
        gh = bracket(T1, g, h)
        if gh:
            assert gh.mdeg() == tuple(a + b for a, b in zip(g.mdeg(), h.mdeg()))


def test_ordering_of_terms(T1):
    g = element(T1, "[[y,z],z] + x + [x,z] + 2[y,[y,z]]")
    assert str(g) == "1*x + 1*[x,z] + 2*[y,[y,z]] + 1*[[y,z],z]"


# -- decompositions -------------------------------------------------------------

def test_homogeneous_parts(T1):
    parts = homogeneous_parts(element(T1, "x + [x,z]"))
    assert [(d, str(p)) for d, p in parts] == [((1, 0, 0), "1*x"), ((1, 0, 1), "1*[x,z]")]
    assert homogeneous_parts(element(T1, "0")) == []
    assert len(homogeneous_parts(element(T1, "2x + 3y"))) == 2


def test_support_and_homogeneity(T1):
    g = element(T1, "2[x,z] + [y,z]")
    assert g.support() == {0, 1, 2} and not g.is_homogeneous()
    h = element(T1, "[x,z]")
    assert h.is_homogeneous() and h.mdeg() == (1, 0, 1)
    assert element(T1, "0").support() == frozenset()
    with pytest.raises(PCLieError):
        g.mdeg()


def test_component_split(T1, T2, G1, G2):
    split = component_split(G1, element(T1, "x + y"))
    assert [(set(v), str(p)) for v, p in split] == [({0}, "1*x"), ({1}, "1*y")]
    split = component_split(G2, element(T2, "x + y"))
    assert [(set(v), str(p)) for v, p in split] == [({0, 1}, "1*x + 1*y")]
    g = element(T1, "[[x,z],y]")
    split = component_split(G1, g)
    assert len(split) == 1 and split[0][0] == g.support()
    with pytest.raises(PCLieError):
        component_split(G1, element(T1, "0"))


@pytest.mark.parametrize("seed", range(3))
def test_component_split_sums_back(T3, seed):
    rng = random.Random(seed)
    for _ in range(40):
        g = random_element(T3, rng, 3)
        split = component_split(T3.graph, g)
        total = LieElement.zero(T3.order)
        for verts, part in split:
            assert part.support() <= verts
            total = total + part
        assert total == g
