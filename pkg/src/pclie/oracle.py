"""Independent verification paths.

* brute-force centralizers: the kernel of h -> [g, h] on the truncated PCLS
  basis, by exact elimination;
* the graded dimension certificate: with l_n PCLS words of degree n,
  prod_n (1 - t^n)^(l_n) must equal the clique polynomial of the graph
  (the Hilbert series of the partially commutative enveloping algebra is
  its reciprocal);
* Witt's formula for free Lie algebras.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .algebra import LieElement, ReductionTable, bracket
from .centralizer import CentralizerDescription
from .errors import PCLieError
from .graph import CommutationGraph, induced
from .linalg import Echelon, kernel
from .words import GeneratorOrder, enumerate_pcls


@dataclass(frozen=True)
class KernelBasis:
    """A subspace of the degree <= d truncation, with canonical echelon rows.

    `basis` fixes the coordinates (PCLS monomials by degree, then descending
    word); `rows` is the reduced echelon form as
    ``((pivot, ((coordinate, coefficient), ...)), ...)``.
    """
    degree: int
    basis: tuple
    elements: tuple
    rows: tuple

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def row_elements(self, order) -> list:
        return [LieElement(order, {self.basis[i]: c for i, c in row}) for _, row in self.rows]


def _span(T: ReductionTable, elements, d) -> KernelBasis:
    basis = tuple(T.basis(d))
    coord = {m: i for i, m in enumerate(basis)}
    ech = Echelon()
    for e in elements:
        try:
            ech.add({coord[m]: c for m, c in e.terms.items()})
        except KeyError as exc:
            raise PCLieError(f"element {e} leaves the degree {d} truncation") from exc
    rows = tuple((p, tuple(sorted(r.items()))) for p, r in ech.rows())
    return KernelBasis(d, basis, tuple(elements), rows)


def brute_force_centralizer(T: ReductionTable, g: LieElement, d: int) -> KernelBasis:
    """All h of degree <= d with [g, h] = 0, by linear algebra."""
    T._need(g.degree + d)
    domain = T.basis(d)
    target = {m: i for i, m in enumerate(T.basis(T.degree))}
    images = []
    for m in domain:
        img = bracket(T, g, LieElement.monomial(T.order, m))
        images.append({target[k]: c for k, c in img.terms.items()})
    vectors = kernel(images)
    elements = [LieElement(T.order, {domain[i]: c for i, c in v.items()}) for v in vectors]
    return _span(T, elements, d)


def structural_kernel(T: ReductionTable, D: CentralizerDescription, d: int) -> KernelBasis:
    """The degree <= d part of the centralizer as the structure theorem
    describes it: the component parts g_i plus the PCLS monomials on the
    common neighbours of supp(g)."""
    T._need(D.g.degree + d)
    elements = [part for part in D.parts if part.degree <= d]
    Y = D.common_neighbors
    if Y:
        G = T.graph
        sub = induced(G, Y)
        back = {i: G.resolve(name) for i, name in enumerate(sub.names)}
        sub_order = T.order.restrict(sub.names)
        for ms in enumerate_pcls(sub_order, sub, d).values():
            elements += [LieElement.monomial(T.order, m.relabel(back)) for m in ms]
    return _span(T, elements, d)


def kernels_equal(a: KernelBasis, b: KernelBasis) -> bool:
    if a.degree != b.degree:
        raise PCLieError(f"degree bounds differ: {a.degree} vs {b.degree}")
    if a.basis != b.basis:
        raise PCLieError("kernels are expressed in different bases")
    return a.rows == b.rows


def clique_polynomial(G: CommutationGraph) -> list:
    """Coefficients c_k = (-1)^k * #(cliques of size k), constant term first."""
    coeffs = [1]
    for clique in nx.enumerate_all_cliques(G.nx):
        k = len(clique)
        if k >= len(coeffs):
            coeffs.extend([0] * (k + 1 - len(coeffs)))
        coeffs[k] += (-1) ** k
    return coeffs


def _truncated_mul(p, q, nmax):
    out = [0] * (nmax + 1)
    for i, a in enumerate(p[:nmax + 1]):
        if a:
            for j, b in enumerate(q[:nmax + 1 - i]):
                out[i + j] += a * b
    return out


def pbw_product(ell, nmax) -> list:
    """prod_{n>=1} (1 - t^n)^(ell[n-1]) truncated after t^nmax."""
    series = [1] + [0] * nmax
    for n, count in enumerate(ell, start=1):
        if n > nmax:
            break
        factor = [0] * (nmax + 1)
        factor[0], factor[n] = 1, -1
        for _ in range(count):
            series = _truncated_mul(series, factor, nmax)
    return series


def dimension_check(G: CommutationGraph, O: GeneratorOrder, nmax: int) -> bool:
    if nmax < 1:
        raise PCLieError("nmax must be positive")
    ell = [len(ms) for _, ms in sorted(enumerate_pcls(O, G, nmax).items())]
    clique = clique_polynomial(G)
    clique = (clique + [0] * (nmax + 1))[:nmax + 1]
    return pbw_product(ell, nmax) == clique


def witt_dimension(k: int, n: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on k generators."""
    from sympy import divisors, mobius

    total = sum(mobius(d) * k ** (n // d) for d in divisors(n))
    return int(Fraction(int(total), n))
