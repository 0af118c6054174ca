"""Randomized and exhaustive verification suites.

Each check returns a `CheckResult`; the command line prints them as
tab-delimited report lines and the acceptance tests assert on them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import LieElement, ReductionTable, bracket, component_split
from .centralizer import (centralizer_in_commutant, centralizer_membership,
                          centralizer_of, commutes, homogeneous_commutes_criterion)
from .graph import CommutationGraph, adjacent_to_all
from .linalg import Echelon, kernel
from .oracle import (brute_force_centralizer, dimension_check, kernels_equal,
                     structural_kernel, witt_dimension)
from .sampling import (homogeneous_pools, random_coefficient, random_combination,
                       random_element, random_homogeneous)
from .words import GeneratorOrder, bracket_word, enumerate_pcls, leaf

REPORT_FIELDS = ("suite", "check", "cases", "failures", "status", "example")


@dataclass
class CheckResult:
    suite: str
    name: str
    cases: int = 0
    failures: int = 0
    example: str = ""
    skipped: bool = field(default=False)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and (self.cases > 0 or self.skipped)

    def record(self, ok: bool, example=""):
        self.cases += 1
        if not ok:
            self.failures += 1
            if not self.example:
                self.example = str(example() if callable(example) else example)

    def merge(self, other: "CheckResult") -> "CheckResult":
        self.cases += other.cases
        self.failures += other.failures
        if not self.example and other.example:
            self.example = other.example
        return self

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "FAIL"

    def as_dict(self) -> dict:
        return {"suite": self.suite, "check": self.name, "cases": self.cases,
                "failures": self.failures, "status": self.status, "example": self.example}

    def line(self) -> str:
        return "\t".join(str(self.as_dict()[k]) for k in REPORT_FIELDS)


def graph_label(T: ReductionTable) -> str:
    edges = ",".join(a + b for a, b in T.graph.edge_list())
    return f"G={{{edges}}} O={'>'.join(T.order.names[i] for i in T.order.letters)}"


# -- identities ---------------------------------------------------------------

def _split_degree(rng, total):
    """Three positive degrees summing to `total`."""
    a = rng.randint(1, total - 2)
    b = rng.randint(1, total - a - 1)
    return a, b, total - a - b


def check_identities(T: ReductionTable, rng: random.Random, samples: int,
                     max_degree: int | None = None) -> list:
    """Anticommutativity, bilinearity and Jacobi on random NF triples."""
    max_degree = T.degree if max_degree is None else min(max_degree, T.degree)
    anti = CheckResult("identities", "anticommutativity")
    bilin = CheckResult("identities", "bilinearity")
    jacobi = CheckResult("identities", "jacobi")
    if max_degree < 3:
        for r in (anti, bilin, jacobi):
            r.skipped = True
        return [anti, bilin, jacobi]
    for _ in range(samples):
        d1, d2, d3 = _split_degree(rng, rng.randint(3, max_degree))
        g = random_element(T, rng, d1, rational=True)
        h = random_element(T, rng, d2, rational=True)
        k = random_element(T, rng, d3, rational=True)
        gh = bracket(T, g, h)
        small = min((g, h, k), key=lambda e: e.degree)
        anti.record(not bracket(T, small, small) and gh == -bracket(T, h, g),
                    lambda: f"g={g} h={h}")
        a = random_coefficient(rng, rational=True)
        g2 = random_element(T, rng, d1)
        bilin.record(bracket(T, a * g + g2, h) == a * gh + bracket(T, g2, h)
                     and bracket(T, h, a * g + g2) == a * bracket(T, h, g) + bracket(T, h, g2),
                     lambda: f"a={a} g={g} g2={g2} h={h}")
        lhs = bracket(T, g, bracket(T, h, k))
        rhs = bracket(T, gh, k) + bracket(T, h, bracket(T, g, k))
        jacobi.record(lhs == rhs, lambda: f"g={g} h={h} k={k}")
    return [anti, bilin, jacobi]


def nonzero_pairs(T: ReductionTable, max_degree: int) -> list:
    """All pairs (u, v) of distinct PCLS monomials with a common first
    letter, u > v, deg u + deg v <= max_degree."""
    basis = T.basis(max_degree - 1)
    key = T.order.key
    out = []
    for u in basis:
        for v in basis:
            if (u.first == v.first and u.degree + v.degree <= max_degree
                    and key(u.word) > key(v.word)):
                out.append((u, v))
    return out


def check_leading_term(T: ReductionTable, rng: random.Random, samples: int,
                       max_degree: int | None = None) -> CheckResult:
    """[u, v] = [uv] + smaller terms for PCLS u > v with equal first letters."""
    res = CheckResult("identities", "leading_term")
    max_degree = T.degree if max_degree is None else min(max_degree, T.degree)
    pairs = nonzero_pairs(T, max_degree)
    if len(pairs) > samples:
        pairs = rng.sample(pairs, samples)
    O = T.order
    for u, v in pairs:
        prod = bracket(T, LieElement.monomial(O, u), LieElement.monomial(O, v))
        uv = bracket_word(O, u.word + v.word)
        lead = prod.leading()
        ok = lead is not None and lead[0] == uv and lead[1] == 1
        res.record(ok, lambda: f"u={u.format(O.names)} v={v.format(O.names)} -> {prod}")
    if not pairs:
        res.skipped = True
    return res


# -- centralizers -------------------------------------------------------------

def check_structure_kernel(T: ReductionTable, rng: random.Random, samples: int,
                  g_degree: int = 2, max_terms: int = 3, d: int = 3) -> CheckResult:
    """Brute-force kernel equals the structural description."""
    res = CheckResult("centralizers", "structure_kernel")
    d = min(d, T.degree - g_degree)
    if d < 1:
        res.skipped = True
        return res
    for _ in range(samples):
        g = random_element(T, rng, g_degree, max_terms)
        D = centralizer_of(T, g)
        ok = kernels_equal(brute_force_centralizer(T, g, d), structural_kernel(T, D, d))
        res.record(ok, lambda: f"{graph_label(T)} g={g}")
    return res


def check_membership(T: ReductionTable, rng: random.Random, samples: int,
                     g_degree: int = 2) -> list:
    """Structural membership agrees with the bracket test, and is scale invariant."""
    agree = CheckResult("centralizers", "membership_vs_bracket")
    scale = CheckResult("centralizers", "membership_scaling")
    room = T.degree - g_degree
    if room < 1:
        agree.skipped = scale.skipped = True
        return [agree, scale]
    for _ in range(samples):
        g = random_element(T, rng, g_degree)
        D = centralizer_of(T, g)
        if rng.random() < 0.5:
            inside = structural_kernel(T, D, room).elements
            h = random_combination(T, rng, inside)
            if rng.random() < 0.3:
                h = h + random_element(T, rng, room, max_terms=1)
        else:
            h = random_element(T, rng, room)
        member = centralizer_membership(T, D, h)
        agree.record(member == commutes(T, g, h), lambda: f"{graph_label(T)} g={g} h={h}")
        c = random_coefficient(rng, rational=True)
        scale.record(centralizer_membership(T, D, c * h) == member, lambda: f"g={g} h={h} c={c}")
    return [agree, scale]


def check_homogeneous_criterion(T: ReductionTable, rng: random.Random, samples: int) -> CheckResult:
    res = CheckResult("centralizers", "homogeneous_criterion")
    if T.degree < 2:
        res.skipped = True
        return res
    pools = homogeneous_pools(T, 1, T.degree - 1)
    n = len(T.order.names)
    for _ in range(samples):
        g = random_homogeneous(T, rng, 1, T.degree - 1, pools=pools)
        room = T.degree - g.degree
        mode = rng.random()
        if mode < 0.3:
            h = random_coefficient(rng, rational=True) * g if g.degree <= room else None
        elif mode < 0.65:
            # restrict to generators off supp(g) to exercise the disjoint case
            off = set(range(n)) - g.support()
            sub = {k: v for k, v in homogeneous_pools(T, 1, room).items()
                   if all(k[i] == 0 for i in range(n) if i not in off)}
            h = random_homogeneous(T, rng, 1, room, pools=sub)
        else:
            h = random_homogeneous(T, rng, 1, room)
        if h is None:
            h = random_homogeneous(T, rng, 1, room)
        res.record(homogeneous_commutes_criterion(T.graph, g, h) == commutes(T, g, h),
                   lambda: f"{graph_label(T)} g={g} h={h}")
    return res


def check_generator_nonvanishing(T: ReductionTable, rng: random.Random, samples: int,
                           min_degree: int = 2, max_degree: int = 4) -> list:
    """[g, x] != 0 for homogeneous g when x is in supp(g), or when x is off
    supp(g) and not adjacent to all of it."""
    inside = CheckResult("centralizers", "x_in_support")
    outside = CheckResult("centralizers", "x_off_support")
    max_degree = min(max_degree, T.degree - 1)
    pools = homogeneous_pools(T, min_degree, max_degree)
    if not pools:
        inside.skipped = outside.skipped = True
        return [inside, outside]
    O, G = T.order, T.graph
    out_pools = {k: v for k, v in pools.items()
                 if any(k[x] == 0 and not adjacent_to_all(G, x, {i for i in range(len(k)) if k[i]})
                        for x in range(len(k)))}
    for _ in range(samples):
        g = random_homogeneous(T, rng, min_degree, max_degree, pools=pools)
        x = rng.choice(sorted(g.support()))
        gx = bracket(T, g, LieElement.generator(O, x))
        inside.record(bool(gx), lambda: f"{graph_label(T)} g={g} x={O.names[x]}")
        if out_pools:
            g = random_homogeneous(T, rng, min_degree, max_degree, pools=out_pools)
            s = g.support()
            xs = [x for x in range(len(O.names)) if x not in s and not adjacent_to_all(G, x, s)]
            x = rng.choice(xs)
            gx = bracket(T, g, LieElement.generator(O, x))
            outside.record(bool(gx), lambda: f"{graph_label(T)} g={g} x={O.names[x]}")
    if not out_pools:
        outside.skipped = True
    return [inside, outside]


def _kernel_span(T, g, degrees, extra=()):
    """Row space of {h in span of PCLS of the given degrees : [g,h] = 0 and
    [e,h] = 0 for e in extra}, as a canonical tuple."""
    domain = [m for m in T.basis(max(degrees)) if m.degree in degrees]
    targets = {}
    images = []
    for m in domain:
        row = {}
        for j, e in enumerate((g, *extra)):
            img = bracket(T, e, LieElement.monomial(T.order, m))
            for k, c in img.terms.items():
                row[targets.setdefault((j, k), len(targets))] = c
        images.append(row)
    return _canonical(T, [{domain[i]: c for i, c in v.items()} for v in kernel(images)])


def _canonical(T, rows):
    coord = {m: i for i, m in enumerate(T.basis())}
    ech = Echelon()
    for r in rows:
        ech.add({coord[m]: c for m, c in r.items()})
    return tuple((p, tuple(sorted(r.items()))) for p, r in ech.rows())


def check_commutant(T: ReductionTable, rng: random.Random, draws: int = 2,
                    max_size: int = 3, d: int = 3) -> list:
    """Centralizers of linear combinations of generators: commutant part and
    degree-1 part against brute force, and the intersection formula."""
    span_res = CheckResult("centralizers", "commutant_span")
    linear_res = CheckResult("centralizers", "linear_part")
    inter_res = CheckResult("centralizers", "commutant_intersection")
    d = min(d, T.degree - 1)
    if d < 1:
        for r in (span_res, linear_res, inter_res):
            r.skipped = True
        return [span_res, linear_res, inter_res]
    O, G = T.order, T.graph
    n = len(O.names)
    for size in range(1, min(max_size, n) + 1):
        for S in combinations(range(n), size):
            for _ in range(draws if size > 1 else 1):
                coeffs = [(x, random_coefficient(rng)) for x in S]
                g = LieElement.zero(O)
                for x, c in coeffs:
                    g = g + LieElement.generator(O, x, c)
                Yp = centralizer_in_commutant(T, coeffs)
                label = lambda: f"{graph_label(T)} g={g}"
                if d >= 2:
                    brute = _kernel_span(T, g, range(2, d + 1))
                    expected = _canonical(T, [{m: 1} for m in T.basis(d)
                                              if m.degree >= 2 and set(m.word) <= Yp])
                    span_res.record(brute == expected, label)
                    gens = [LieElement.generator(O, x) for x in S]
                    inter = _kernel_span(T, gens[0], range(2, d + 1), extra=gens[1:])
                    inter_res.record(brute == inter, label)
                brute1 = _kernel_span(T, g, (1,))
                parts = [dict(p.terms) for _, p in component_split(G, g)]
                expected1 = _canonical(T, parts + [{leaf(y): 1} for y in Yp])
                linear_res.record(brute1 == expected1, label)
    if d < 2:
        span_res.skipped = inter_res.skipped = True
    return [span_res, linear_res, inter_res]


# -- dimensions ---------------------------------------------------------------

def check_dimensions(G: CommutationGraph, O: GeneratorOrder, nmax: int) -> list:
    pbw = CheckResult("dimensions", "clique_identity")
    pbw.record(dimension_check(G, O, nmax), lambda: f"{G!r} nmax={nmax}")
    results = [pbw]
    if not G.edges:
        witt = CheckResult("dimensions", "witt_formula")
        counts = enumerate_pcls(O, G, nmax)
        for n, ms in counts.items():
            expected = witt_dimension(len(G), n)
            witt.record(len(ms) == expected,
                        lambda: f"degree {n}: {len(ms)} PCLS vs Witt {expected}")
        results.append(witt)
    return results


def check_rules_decrease(T: ReductionTable) -> CheckResult:
    """Every rewrite image is strictly below its source in word order."""
    res = CheckResult("dimensions", "rewrite_decreasing")
    key = T.order.key
    for m, image in T.rules.items():
        res.record(all(key(p.word) < key(m.word) for p in image),
                   lambda: f"{m.format(T.order.names)} -> {LieElement(T.order, image)}")
    if not T.rules:
        res.skipped = True
    return res


SUITES = ("identities", "dimensions", "centralizers")


def run_suites(T: ReductionTable, suites, seed: int, samples: int = 200) -> list:
    """Run the named suites on one table; deterministic given the seed."""
    results = []
    for name in SUITES:
        if name not in suites:
            continue
        rng = random.Random(f"{seed}:{name}")
        if name == "identities":
            results += check_identities(T, rng, samples)
            results.append(check_leading_term(T, rng, samples))
        elif name == "dimensions":
            results += check_dimensions(T.graph, T.order, T.degree)
            results.append(check_rules_decrease(T))
        else:
            results.append(check_structure_kernel(T, rng, max(1, samples // 4)))
            results += check_membership(T, rng, samples)
            results.append(check_homogeneous_criterion(T, rng, samples))
            results += check_generator_nonvanishing(T, rng, samples)
            results += check_commutant(T, rng)
    return results
