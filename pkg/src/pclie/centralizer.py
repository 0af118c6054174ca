"""Commutation tests and centralizer descriptions.

For a nonzero element g, let H be the complement of the subgraph spanned by
supp(g), with components H_1..H_p, and split g = g_1 + ... + g_p accordingly.
Then h commutes with g exactly when h = h_1 + ... + h_p + h' where each h_i
is proportional to g_i and every generator of supp(h') is adjacent to every
generator of supp(g).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieElement, ReductionTable, bracket, component_split
from .errors import OrderMismatchError, PCLieError
from .graph import CommutationGraph, adjacent_to_all, sets_adjacent


@dataclass(frozen=True)
class ProportionalityWitness:
    """Scalars, not both zero, with lambda_ * g == mu * h."""
    lambda_: Fraction
    mu: Fraction


@dataclass(frozen=True)
class CentralizerDescription:
    g: LieElement
    components: tuple          # ((vertex set, g_i), ...)
    common_neighbors: frozenset

    @property
    def parts(self) -> list:
        return [part for _, part in self.components]

    def check(self):
        total = LieElement.zero(self.g.order)
        seen = set()
        for verts, part in self.components:
            total = total + part
            if seen & part.support():
                raise PCLieError("component supports overlap")
            seen |= part.support()
        if total != self.g or self.common_neighbors & self.g.support():
            raise PCLieError("inconsistent centralizer description")


def commutes(T: ReductionTable, g: LieElement, h: LieElement) -> bool:
    return not bracket(T, g, h)


def proportional(g: LieElement, h: LieElement):
    """Witness (lambda, mu) with lambda*g == mu*h, or None.

    Uses the pivot criterion: with alpha_s the coefficient of the leading
    monomial of g, the coefficient vectors are proportional iff
    alpha_s*beta_i == alpha_i*beta_s for every monomial i.
    """
    if g.order != h.order:
        raise OrderMismatchError("proportionality needs a common basis order")
    if not h:
        return ProportionalityWitness(Fraction(0), Fraction(1))
    if not g:
        return ProportionalityWitness(Fraction(1), Fraction(0))
    s, alpha_s = g.leading()
    beta_s = h.coefficient(s)
    for m in g.terms.keys() | h.terms.keys():
        if alpha_s * h.coefficient(m) != g.coefficient(m) * beta_s:
            return None
    return ProportionalityWitness(beta_s, alpha_s)


def homogeneous_commutes_criterion(G: CommutationGraph, g: LieElement, h: LieElement) -> bool:
    """Decide [g, h] == 0 for nonzero homogeneous g, h from supports alone:
    proportionality when the supports meet, full adjacency when they don't."""
    for e in (g, h):
        if not e or not e.is_homogeneous():
            raise PCLieError("criterion requires nonzero homogeneous elements")
    sg, sh = g.support(), h.support()
    if sg & sh:
        return proportional(g, h) is not None
    return sets_adjacent(G, sg, sh)


def common_neighbors(G: CommutationGraph, S) -> frozenset:
    """Generators adjacent to every member of S."""
    return frozenset(x for x in range(len(G)) if adjacent_to_all(G, x, S))


def centralizer_of(T: ReductionTable, g: LieElement) -> CentralizerDescription:
    if not g:
        raise PCLieError("centralizer of zero is the whole algebra")
    if g.order != T.order:
        raise OrderMismatchError("element and table orders differ")
    split = component_split(T.graph, g)
    Y = common_neighbors(T.graph, g.support())
    return CentralizerDescription(g, tuple(split), Y)


def centralizer_membership(T: ReductionTable, D: CentralizerDescription, h: LieElement) -> bool:
    """Structural test of h in C(g), without computing any bracket."""
    supp_g = D.g.support()
    buckets = [dict() for _ in D.components]
    for m, c in h.terms.items():
        s = frozenset(m.word)
        if s <= supp_g:
            # a monomial on supp(g) lives in exactly one component of the
            # complement graph: generators in different components commute
            k = next(i for i, (verts, _) in enumerate(D.components) if s <= verts)
            buckets[k][m] = c
        elif s & supp_g:
            return False
        elif not s <= D.common_neighbors:
            return False
    for (_, part), bucket in zip(D.components, buckets):
        if proportional(part, LieElement(h.order, bucket)) is None:
            return False
    return True


def centralizer_in_commutant(T: ReductionTable, coeffs) -> frozenset:
    """Generator set Y' such that the centralizer of sum(alpha_j x_j) inside
    the derived algebra is spanned by PCLS monomials of length >= 2 on Y'."""
    G = T.graph
    idx = [G.resolve(a) for a, _ in coeffs]
    if len(set(idx)) != len(idx):
        raise PCLieError("generators in a linear combination must be distinct")
    if any(Fraction(c) == 0 for _, c in coeffs):
        raise PCLieError("coefficients must be nonzero")
    return common_neighbors(G, idx)

