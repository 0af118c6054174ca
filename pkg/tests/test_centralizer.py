import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pclie.algebra import LieElement, bracket, build_reduction, element
from pclie.centralizer import (ProportionalityWitness, centralizer_in_commutant,
                               centralizer_membership, centralizer_of, commutes,
                               homogeneous_commutes_criterion, proportional)
from pclie.errors import OrderMismatchError, PCLieError
from pclie.graph import all_labeled_graphs
from pclie.sampling import random_element
from pclie.words import GeneratorOrder

ORDERS3 = [GeneratorOrder.from_names("xyz", p) for p in itertools.permutations("xyz")]


def names(G, S):
    return {G.names[i] for i in S}


def test_commutes_examples(T1, T2):
    assert commutes(T1, element(T1, "x"), element(T1, "y"))
    assert not commutes(T2, element(T2, "x"), element(T2, "y"))
    g = element(T2, "[x,z] + 3[y,z]")
    assert commutes(T2, g, g)


def test_proportional_examples(T1):
    w = proportional(element(T1, "2x + 4[x,z]"), element(T1, "3x + 6[x,z]"))
    assert w == ProportionalityWitness(Fraction(3), Fraction(2))
    assert proportional(element(T1, "x"), element(T1, "y")) is None
    assert proportional(element(T1, "x + [y,z]"), element(T1, "0")) == ProportionalityWitness(0, 1)


def test_proportional_order_mismatch(T1):
    other = LieElement.generator(GeneratorOrder.from_names("xyz", "zyx"), 0)
    with pytest.raises(OrderMismatchError):
        proportional(element(T1, "x"), other)


coeff_vectors = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(coeff_vectors, coeff_vectors)
def test_proportional_agrees_with_rank(a, b):
    O = GeneratorOrder.canonical("xyz")
    g = LieElement(O, {LieElement.generator(O, i).leading()[0]: c for i, c in enumerate(a) if c})
    h = LieElement(O, {LieElement.generator(O, i).leading()[0]: c for i, c in enumerate(b) if c})
    w = proportional(g, h)
    assert (w is not None) == (sympy.Matrix([a, b]).rank() <= 1)
    if w is not None:
        assert (w.lambda_, w.mu) != (0, 0)
        assert w.lambda_ * g == w.mu * h


def test_homogeneous_criterion_examples(T1, T2, G1, G2):
    assert homogeneous_commutes_criterion(G1, element(T1, "x"), element(T1, "y"))
    assert not homogeneous_commutes_criterion(G2, element(T2, "x"), element(T2, "y"))
    assert homogeneous_commutes_criterion(G2, element(T2, "[x,z]"), element(T2, "5[x,z]"))


def test_homogeneous_criterion_rejects(T1, G1):
    with pytest.raises(PCLieError):
        homogeneous_commutes_criterion(G1, element(T1, "0"), element(T1, "x"))
    with pytest.raises(PCLieError):
        homogeneous_commutes_criterion(G1, element(T1, "x + z"), element(T1, "x"))


def describe(T, text):
    D = centralizer_of(T, element(T, text))
    D.check()
    return [str(p) for p in D.parts], names(T.graph, D.common_neighbors)


def test_centralizer_of_examples(T1, T2, T3):
    assert describe(T3, "y") == (["1*y"], {"x"})
    assert describe(T1, "x + y") == (["1*x", "1*y"], set())
    assert describe(T2, "x + y") == (["1*x + 1*y"], set())


def test_centralizer_of_zero(T1):
    with pytest.raises(PCLieError, match="centralizer of zero is the whole algebra"):
        centralizer_of(T1, element(T1, "0"))


def test_membership_examples(T1, T2):
    D = centralizer_of(T1, element(T1, "x"))
    assert centralizer_membership(T1, D, element(T1, "3x + 2y"))
    assert not centralizer_membership(T1, D, element(T1, "z"))
    D = centralizer_of(T2, element(T2, "x + y"))
    assert not centralizer_membership(T2, D, element(T2, "x"))
    assert centralizer_membership(T2, D, element(T2, "-2x - 2y"))
    assert centralizer_membership(T2, D, element(T2, "0"))


@pytest.mark.parametrize("G", all_labeled_graphs("xyz"), ids=repr)
def test_membership_matches_bracket(G):
    """Structural membership agrees with a computed bracket, and is stable
    under rescaling h."""
    for O in ORDERS3:
        T = build_reduction(O, G, 5)
        rng = random.Random(f"{G!r}{O!r}")
        for _ in range(15):
            g = random_element(T, rng, 2)
            D = centralizer_of(T, g)
            D.check()
            for _ in range(6):
                if rng.random() < 0.5:
                    # bias towards members so both outcomes are exercised
                    h = Fraction(rng.randint(1, 3)) * g
                    for y in D.common_neighbors:
                        h = h + LieElement.generator(O, y, rng.randint(-2, 2))
                else:
                    h = random_element(T, rng, 3)
                ok = centralizer_membership(T, D, h)
                assert ok == commutes(T, g, h)
                assert centralizer_membership(T, D, Fraction(-7, 3) * h) == ok


def test_centralizer_in_commutant_examples(T1, T3):
    assert names(T3.graph, centralizer_in_commutant(T3, [("x", 1)])) == {"y", "z"}
    assert names(T1.graph, centralizer_in_commutant(T1, [("x", 1)])) == {"y"}
    assert names(T3.graph, centralizer_in_commutant(T3, [("y", 1), ("z", 1)])) == {"x"}
    # (y,z) is PCLS and commutes with x in G3
    assert commutes(T3, element(T3, "x"), element(T3, "[y,z]"))
    assert element(T3, "[y,z]")


def test_centralizer_in_commutant_errors(T1):
    with pytest.raises(PCLieError):
        centralizer_in_commutant(T1, [("x", 0)])
    with pytest.raises(PCLieError):
        centralizer_in_commutant(T1, [("x", 1), ("x", 2)])


@pytest.mark.parametrize("G", all_labeled_graphs("xyz"), ids=repr)
def test_commutant_closure(G):
    """Every PCLS monomial of length >= 2 on neighbours of x commutes with x."""
    O = GeneratorOrder.canonical("xyz")
    T = build_reduction(O, G, 5)
    for x in range(3):
        Yp = centralizer_in_commutant(T, [(G.names[x], 1)])
        gx = LieElement.generator(O, x)
        for m in T.basis(4):
            if m.degree >= 2 and set(m.word) <= Yp:
                assert not bracket(T, LieElement.monomial(O, m), gx)
