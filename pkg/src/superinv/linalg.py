"""Exact rational linear algebra: fraction-free elimination, ranks,
nullspaces and span membership.

Everything works on small dense matrices given as lists of rows; entries are
ints or Fractions.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _to_int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Clear denominators row by row and divide out content."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def bareiss_echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gaussian elimination (Bareiss).

    Returns the echelon matrix over the integers together with the list of
    pivot columns.  Pivoting is deterministic: first nonzero entry scanning
    rows in order.
    """
    m = _to_int_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank_rows(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(bareiss_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel {x : M x = 0}, one vector per free column.

    Vectors are normalised so the free coordinate equals 1; deterministic
    (free columns in increasing order).
    """
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [
            [Fraction(1) if j == i else Fraction(0) for j in range(ncols)]
            for i in range(ncols)
        ]
    ncols = len(rows[0]) if ncols is None else ncols
    ech, pivots = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[list[Fraction]] = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        # back substitution over the pivot rows
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            s = Fraction(0)
            for j in range(pc + 1, ncols):
                if vec[j]:
                    s += Fraction(ech[i][j]) * vec[j]
            vec[pc] = -s / ech[i][pc]
        basis.append(vec)
    return basis


class SpanTracker:
    """Incremental row space: add vectors, query membership and rank.

    Keeps a reduced echelon set of Fraction rows; deterministic.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def _reduce(self, vec: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                coeff = v[p] / row[p]
                for j in range(p, self.ncols):
                    if row[j]:
                        v[j] -= coeff * row[j]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert the vector; returns True when it enlarges the span."""
        v = self._reduce(vec)
        for p in range(self.ncols):
            if v[p]:
                self.rows.append(v)
                self.pivots.append(p)
                order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
                self.rows = [self.rows[i] for i in order]
                self.pivots = [self.pivots[i] for i in order]
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def intersect_dims(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence], ncols: int) -> int:
    """Dimension of the intersection of two spans."""
    ra = rank_rows(list(basis_a)) if basis_a else 0
    rb = rank_rows(list(basis_b)) if basis_b else 0
    if ra == 0 or rb == 0:
        return 0
    rab = rank_rows(list(basis_a) + list(basis_b))
    return ra + rb - rab
