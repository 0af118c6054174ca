"""Exact sparse row reduction over the rationals.

Rows are dicts ``column -> Fraction`` with no zero entries.  Columns can be
any hashable; the pivot of a row is its nonzero column of smallest priority.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable


def axpy(row: dict, c, other: dict) -> None:
    """row += c * other, in place, dropping zeros."""
    for k, v in other.items():
        w = row.get(k, 0) + c * v
        if w:
            row[k] = w
        else:
            row.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has pivot coefficient 1 and is zero in every other
    pivot column, so the stored rows are canonical for their row space.
    """

    def __init__(self, priority: Callable[[Hashable], object] | None = None):
        self.priority = priority if priority is not None else (lambda c: c)
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Remainder of `row` after elimination against the stored rows."""
        row = {k: Fraction(v) for k, v in row.items() if v}
        for col in [k for k in row if k in self.pivots]:
            c = row.get(col)
            if c:
                axpy(row, -c, self.pivots[col])
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns False if it was already in the row space."""
        row = self.reduce(row)
        if not row:
            return False
        pivot = min(row, key=self.priority)
        inv = 1 / row[pivot]
        row = {k: v * inv for k, v in row.items()}
        for other in self.pivots.values():
            c = other.get(pivot)
            if c:
                axpy(other, -c, row)
        self.pivots[pivot] = row
        return True

    def extend(self, rows: Iterable[dict]) -> None:
        for r in rows:
            self.add(r)

    def rows(self) -> list[tuple]:
        """(pivot, row) pairs sorted by pivot priority."""
        return sorted(self.pivots.items(), key=lambda kv: self.priority(kv[0]))

    def canonical(self) -> tuple:
        """Hashable canonical form of the row space."""
        return tuple((p, tuple(sorted(((self.priority(k), v) for k, v in r.items()))))
                     for p, r in self.rows())


def kernel(images: list[dict]) -> list[dict]:
    """Basis of ``{c : sum_i c_i images[i] = 0}``, as dicts ``i -> Fraction``.

    Rows ``[image_i | e_i]`` are reduced with image columns eliminated first;
    rows whose pivot lands in the identity block span the kernel.
    """
    ech = Echelon(priority=lambda c: (c[0], c[1]))
    for i, img in enumerate(images):
        row = {(0, ordinal): v for ordinal, v in img.items()}
        row[(1, i)] = Fraction(1)
        ech.add(row)
    basis = []
    for pivot, row in ech.rows():
        if pivot[0] == 1:
            basis.append({c[1]: v for c, v in row.items()})
    return basis
