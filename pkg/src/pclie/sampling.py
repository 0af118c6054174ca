"""Random NF elements for property checks."""
from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction

from .algebra import LieElement, ReductionTable
from .words import multidegree


def random_coefficient(rng: random.Random, rational=False) -> Fraction:
    c = 0
    while c == 0:
        c = rng.randint(-4, 4)
    if rational and rng.random() < 0.25:
        return Fraction(c, rng.randint(1, 3))
    return Fraction(c)


def random_element(T: ReductionTable, rng: random.Random, max_degree: int,
                   max_terms: int = 3, min_degree: int = 1, rational=False) -> LieElement:
    """Nonzero element with 1..max_terms PCLS terms of degree in [min_degree, max_degree]."""
    pool = [m for m in T.basis(max_degree) if m.degree >= min_degree]
    k = rng.randint(1, min(max_terms, len(pool)))
    monos = rng.sample(pool, k)
    return LieElement(T.order, {m: random_coefficient(rng, rational) for m in monos})


def homogeneous_pools(T: ReductionTable, min_degree: int, max_degree: int) -> dict:
    n = len(T.order.names)
    pools = defaultdict(list)
    for m in T.basis(max_degree):
        if m.degree >= min_degree:
            pools[multidegree(m, n)].append(m)
    return dict(pools)


def random_homogeneous(T: ReductionTable, rng: random.Random, min_degree: int,
                       max_degree: int, max_terms: int = 3, pools=None):
    """Nonzero homogeneous element, or None if no PCLS monomial fits."""
    pools = pools if pools is not None else homogeneous_pools(T, min_degree, max_degree)
    if not pools:
        return None
    delta = rng.choice(sorted(pools))
    monos = pools[delta]
    k = rng.randint(1, min(max_terms, len(monos)))
    return LieElement(T.order, {m: random_coefficient(rng) for m in rng.sample(monos, k)})


def random_combination(T: ReductionTable, rng: random.Random, elements) -> LieElement:
    """Random linear combination of the given elements (possibly zero)."""
    out = LieElement.zero(T.order)
    for e in elements:
        if rng.random() < 0.6:
            out = out + random_coefficient(rng) * e
    return out
