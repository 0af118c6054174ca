"""Exact Lie elements, free-Lie brackets over the LS basis, and reduction
modulo the commutation relations of a graph.

An element is a finite map from monomials to `Fraction` coefficients relative
to a fixed `GeneratorOrder`.  Elements in *LS form* are expanded over the LS
basis of the free Lie algebra; elements in *NF form* are expanded over the
PCLS basis of the partially commutative algebra.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import expr as ast
from .errors import (DegreeBoundError, InternalConsistencyError,
                     OrderMismatchError, PCLieError, WordError)
from .graph import CommutationGraph, complement, components, induced
from .linalg import Echelon, axpy
from .words import (GeneratorOrder, Monomial, is_ls, is_pcls, leaf,
                    ls_monomials, multidegree, pair)

Scalar = Fraction

LS_FORM = "ls"
NF_FORM = "nf"


def format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LieElement:
    """Immutable linear combination of monomials.

    Terms are kept sorted by descending word, so the first term is the
    leading one.  Zero coefficients are never stored.
    """

    __slots__ = ("order", "terms", "form")

    def __init__(self, order: GeneratorOrder, terms=None, form: str = NF_FORM):
        self.order = order
        self.form = form
        items = [] if terms is None else (terms.items() if isinstance(terms, dict) else terms)
        acc = defaultdict(Fraction)
        for m, c in items:
            acc[m] += c
        key = order.key
        self.terms = {m: acc[m] for m in sorted((m for m in acc if acc[m]),
                                                  key=lambda m: key(m.word), reverse=True)}

    @classmethod
    def zero(cls, order, form=NF_FORM):
        return cls(order, {}, form)

    @classmethod
    def generator(cls, order: GeneratorOrder, a, coeff=1):
        i = a if isinstance(a, int) else order.names.index(a) if a in order.names else None
        if i is None:
            from .errors import UnknownGeneratorError
            raise UnknownGeneratorError(a)
        return cls(order, {leaf(i): Fraction(coeff)}, NF_FORM)

    @classmethod
    def monomial(cls, order, m: Monomial, coeff=1, form=NF_FORM):
        return cls(order, {m: Fraction(coeff)}, form)

    # -- arithmetic -----------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LieElement):
            return False
        if other.order != self.order:
            raise OrderMismatchError(f"{self.order!r} vs {other.order!r}")
        return True

    def _form_with(self, other):
        return NF_FORM if self.form == other.form == NF_FORM else LS_FORM

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        terms = dict(self.terms)
        axpy(terms, 1, other.terms)
        return LieElement(self.order, terms, self._form_with(other))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        terms = dict(self.terms)
        axpy(terms, -1, other.terms)
        return LieElement(self.order, terms, self._form_with(other))

    def __neg__(self):
        return LieElement(self.order, {m: -c for m, c in self.terms.items()}, self.form)

    def __mul__(self, c):
        if isinstance(c, LieElement):
            return NotImplemented
        c = Fraction(c)
        return LieElement(self.order, {m: c * v for m, v in self.terms.items()}, self.form)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    # -- structure ------------------------------------------------------
    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def leading(self):
        """(monomial, coefficient) of the greatest word, or None for zero."""
        return next(iter(self.terms.items()), None)

    def support(self) -> frozenset:
        s = set()
        for m in self.terms:
            s.update(m.word)
        return frozenset(s)

    def multidegrees(self) -> set:
        n = len(self.order.names)
        return {multidegree(m, n) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) == 1

    def mdeg(self) -> tuple:
        mds = self.multidegrees()
        if len(mds) != 1:
            raise PCLieError("multidegree is defined only for nonzero homogeneous elements")
        return next(iter(mds))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"LieElement({format_element(self)!r})"


def format_element(g: LieElement) -> str:
    """Canonical text: terms by descending word, explicit coefficients."""
    if not g.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(g.terms.items()):
        body = f"{format_scalar(abs(c))}*{m.format(g.order.names)}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def support(g: LieElement) -> frozenset:
    return g.support()


def is_homogeneous(g: LieElement) -> bool:
    return g.is_homogeneous()


def mdeg(g: LieElement) -> tuple:
    return g.mdeg()


# -- free Lie algebra ---------------------------------------------------------

@lru_cache(maxsize=None)
def _free_bracket(O: GeneratorOrder, a: Monomial, b: Monomial) -> tuple:
    """[a, b] for LS monomials a, b expanded over LS monomials, integer coefficients."""
    if a == b:
        return ()
    ka, kb = O.key(a.word), O.key(b.word)
    if ka < kb:
        return tuple((m, -c) for m, c in _free_bracket(O, b, a))
    if a.is_leaf or kb >= O.key(a.right.word):
        return ((pair(a, b), 1),)
    # [[a1,a2],b] = [a1,[a2,b]] + [[a1,b],a2]
    a1, a2 = a.left, a.right
    acc = defaultdict(int)
    for t, c in _free_bracket(O, a2, b):
        for s, e in _free_bracket(O, a1, t):
            acc[s] += c * e
    for t, c in _free_bracket(O, a1, b):
        for s, e in _free_bracket(O, t, a2):
            acc[s] += c * e
    return tuple((m, c) for m, c in acc.items() if c)


def free_bracket(O: GeneratorOrder, m1: Monomial, m2: Monomial) -> LieElement:
    """Bracket of two LS monomials in the free Lie algebra, in LS form."""
    for m in (m1, m2):
        if not is_ls(O, m):
            raise WordError(f"{m.format(O.names)} is not an LS monomial for {O!r}")
    return LieElement(O, _free_bracket(O, m1, m2), LS_FORM)


def _free_bracket_terms(O, row_a: dict, row_b: dict) -> dict:
    out = {}
    for a, ca in row_a.items():
        for b, cb in row_b.items():
            for m, c in _free_bracket(O, a, b):
                w = out.get(m, 0) + ca * cb * c
                if w:
                    out[m] = w
                else:
                    out.pop(m, None)
    return out


# -- reduction modulo the graph relators -------------------------------------

class ReductionTable:
    """Rewrite rules sending every non-PCLS LS monomial of degree <= `degree`
    to its unique PCLS expansion modulo the relator ideal."""

    def __init__(self, graph, order, degree, rules, pcls, ls_counts):
        self.graph: CommutationGraph = graph
        self.order: GeneratorOrder = order
        self.degree: int = degree
        self.rules: dict = rules
        self.pcls: dict = pcls
        self.ls_counts: dict = ls_counts
        self._basis = {m for ms in pcls.values() for m in ms}
        self._pair_cache: dict = {}

    def __len__(self):
        return len(self.rules)

    def is_basis(self, m: Monomial) -> bool:
        return m in self._basis

    def basis(self, dmax=None) -> list:
        """PCLS monomials up to `dmax`, ordered by degree then descending word."""
        dmax = self.degree if dmax is None else dmax
        self._need(dmax)
        return [m for n in range(1, dmax + 1) for m in self.pcls[n]]

    def _need(self, required):
        if required > self.degree:
            raise DegreeBoundError(required, self.degree)

    def reduce_ls(self, terms) -> dict:
        """Rewrite LS-form terms into PCLS terms."""
        out = {}
        for m, c in (terms.items() if isinstance(terms, dict) else terms):
            if m in self._basis:
                w = out.get(m, 0) + c
                if w:
                    out[m] = w
                else:
                    out.pop(m)
                continue
            rule = self.rules.get(m)
            if rule is None:
                self._need(m.degree)
                raise WordError(f"{m.format(self.order.names)} is not an LS monomial")
            axpy(out, c, rule)
        return out

    def pair_product(self, a: Monomial, b: Monomial) -> dict:
        """NF terms of the bracket of two PCLS monomials (cached)."""
        key = (a, b)
        hit = self._pair_cache.get(key)
        if hit is None:
            self._need(a.degree + b.degree)
            hit = self.reduce_ls(_free_bracket(self.order, a, b))
            self._pair_cache[key] = hit
        return hit


def build_reduction(O: GeneratorOrder, G: CommutationGraph, dmax: int) -> ReductionTable:
    """Reduction table for L(X;G) under order `O`, valid through degree `dmax`.

    For each multidegree the graded piece of the relator ideal is spanned by
    the relators and brackets of generators with the previous graded pieces;
    exact elimination with non-PCLS columns pivoting first then yields the
    rewrite of every non-PCLS LS monomial.
    """
    if dmax < 1:
        raise WordError("degree bound must be positive")
    O.check_graph(G)
    n = len(G)
    pcls = {}
    ls_counts = {}
    rules = {}
    ideal = {}
    for d in range(1, dmax + 1):
        by_mdeg = defaultdict(list)
        for m in ls_monomials(O, d):
            by_mdeg[multidegree(m, n)].append(m)
        pcls[d] = [m for m in ls_monomials(O, d) if is_pcls(O, G, m)]
        ls_counts[d] = len(ls_monomials(O, d))
        if d == 1:
            continue
        for delta, monos in by_mdeg.items():
            spanning = []
            if d == 2:
                a, b = (i for i in range(n) for _ in range(delta[i]))
                if frozenset((a, b)) in G.edges:
                    spanning.append(dict(_free_bracket(O, leaf(a), leaf(b))))
            for x in range(n):
                if delta[x]:
                    prev = delta[:x] + (delta[x] - 1,) + delta[x + 1:]
                    for row in ideal.get(prev, ()):
                        spanning.append(_free_bracket_terms(O, {leaf(x): 1}, row))
            if not spanning:
                continue
            position = {m: k for k, m in enumerate(monos)}
            reducible = [m for m in monos if not is_pcls(O, G, m)]
            bad = set(reducible)
            ech = Echelon(priority=lambda m: (m not in bad, position[m]))
            ech.extend(spanning)
            if ech.rank != len(reducible) or any(p not in bad for p in ech.pivots):
                raise InternalConsistencyError(
                    f"multidegree {delta}: ideal rank {ech.rank}, "
                    f"{len(reducible)} non-PCLS monomials; PCLS is not a basis of the quotient")
            rows = [row for _, row in ech.rows()]
            ideal[delta] = rows
            for m, row in ech.rows():
                image = {p: -c for p, c in row.items() if p != m}
                if any(c.denominator != 1 for c in image.values()):
                    raise InternalConsistencyError(
                        f"non-integral rewrite of {m.format(O.names)}")
                rules[m] = image
        # sanity: quotient dimension equals the PCLS count
        if ls_counts[d] - sum(len(ideal.get(k, ())) for k in by_mdeg) != len(pcls[d]):
            raise InternalConsistencyError(f"degree {d}: quotient dimension mismatch")
    return ReductionTable(G, O, dmax, rules, pcls, ls_counts)


def normal_form(T: ReductionTable, e) -> LieElement:
    """PCLS expansion of an expression or element."""
    if isinstance(e, ast.Expr):
        T._need(ast.degree_bound(e))
        return _evaluate(T, e)
    if not isinstance(e, LieElement):
        raise TypeError(f"cannot normalise {e!r}")
    if e.order != T.order:
        raise OrderMismatchError(f"element over {e.order!r}, table over {T.order!r}")
    T._need(e.degree)
    out = {}
    for m, c in e.terms.items():
        axpy(out, c, _monomial_nf(T, m))
    return LieElement(T.order, out, NF_FORM)


def _monomial_nf(T, m) -> dict:
    if T.is_basis(m):
        return {m: 1}
    rule = T.rules.get(m)
    if rule is not None:
        return rule
    # not LS under this order: expand the bracket structure
    left, right = _monomial_nf(T, m.left), _monomial_nf(T, m.right)
    out = {}
    for a, ca in left.items():
        for b, cb in right.items():
            axpy(out, ca * cb, T.pair_product(a, b))
    return out


def _evaluate(T, e) -> LieElement:
    O = T.order
    if isinstance(e, ast.Zero):
        return LieElement.zero(O)
    if isinstance(e, ast.Gen):
        return LieElement.generator(O, e.name)
    if isinstance(e, ast.Scale):
        return e.coeff * _evaluate(T, e.expr)
    if isinstance(e, ast.Add):
        return _evaluate(T, e.left) + _evaluate(T, e.right)
    if isinstance(e, ast.Sub):
        return _evaluate(T, e.left) - _evaluate(T, e.right)
    if isinstance(e, ast.Bracket):
        return bracket(T, _evaluate(T, e.left), _evaluate(T, e.right))
    raise TypeError(f"not an expression: {e!r}")


def element(T: ReductionTable, text: str) -> LieElement:
    """Parse and normalise `text` against the table's generators."""
    return normal_form(T, ast.parse_expr(text, T.order.names))


def bracket(T: ReductionTable, g: LieElement, h: LieElement) -> LieElement:
    """Lie product of two elements, in NF form."""
    if g.order != T.order or h.order != T.order:
        raise OrderMismatchError("element and table orders differ")
    T._need(g.degree + h.degree)
    if g.form != NF_FORM:
        g = normal_form(T, g)
    if h.form != NF_FORM:
        h = normal_form(T, h)
    out = {}
    for a, ca in g.terms.items():
        for b, cb in h.terms.items():
            axpy(out, ca * cb, T.pair_product(a, b))
    return LieElement(T.order, out, NF_FORM)


def homogeneous_parts(g: LieElement) -> list:
    """[(multidegree, part)] by ascending total degree, then descending multidegree."""
    n = len(g.order.names)
    groups = defaultdict(dict)
    for m, c in g.terms.items():
        groups[multidegree(m, n)][m] = c
    keys = sorted(groups, key=lambda d: (sum(d), tuple(-k for k in d)))
    return [(d, LieElement(g.order, groups[d], g.form)) for d in keys]


def component_split(G: CommutationGraph, g: LieElement) -> list:
    """Split g along the connected components of the complement of the
    subgraph of G spanned by supp(g).

    Returns ``[(vertex set, part)]`` with vertex sets as canonical indices.
    """
    if not g:
        raise PCLieError("component split of the zero element")
    supp = g.support()
    sub = induced(G, supp)
    back = {i: G.resolve(name) for i, name in enumerate(sub.names)}
    comps = [frozenset(back[i] for i in c) for c in components(complement(sub))]
    parts = [dict() for _ in comps]
    for m, c in g.terms.items():
        s = frozenset(m.word)
        hits = [k for k, comp in enumerate(comps) if s <= comp]
        if len(hits) != 1:
            raise InternalConsistencyError(
                f"monomial {m.format(g.order.names)} straddles components")
        parts[hits[0]][m] = c
    return [(comp, LieElement(g.order, part, g.form)) for comp, part in zip(comps, parts)]


def generators_element(O: GeneratorOrder, coeffs: Iterable) -> LieElement:
    """Linear combination of generators from (name-or-index, coefficient) pairs."""
    g = LieElement.zero(O)
    for a, c in coeffs:
        g = g + LieElement.generator(O, a, c)
    return g
