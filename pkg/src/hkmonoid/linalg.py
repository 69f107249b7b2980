"""Small exact linear algebra over the rationals (``fractions.Fraction``)."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["RationalMatrix", "parse_rational", "format_rational", "rank", "full_rank_factorization"]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse ``p/q`` or an integer; decimal and float syntax is refused."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not an exact rational: {text!r} (use p/q or an integer)")
    value = Fraction(text)
    return value


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple  # tuple of tuples of Fraction
    ncols: int

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return RationalMatrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows],
            other.ncols,
        )

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return RationalMatrix([[c * a for a in r] for r in self.rows], self.ncols)

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def trace(self):
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def rank(self):
        return len(_pivots(self)[1])

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                if f:
                    for k in range(c, n):
                        m[r][k] -= f * m[c][k]
        return det

    def to_strings(self):
        return [[format_rational(a) for a in r] for r in self.rows]

    def __str__(self):
        cells = self.to_strings()
        if not cells:
            return "[]"
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _pivots(m: RationalMatrix):
    """Reduced row echelon form and pivot columns (leftmost nonzero column first)."""
    a = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        p = next((i for i in range(r, m.nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(m.nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return a, pivots


def rank(m: RationalMatrix) -> int:
    return m.rank()


def full_rank_factorization(m: RationalMatrix):
    """Split ``m`` (k x n, rank r) as ``C @ D`` with ``C`` k x r and ``D`` r x n.

    ``D`` consists of the first ``r`` linearly independent rows of ``m`` taken
    in their given order, and ``C`` holds the coefficients expressing every
    row of ``m`` through them.  An invertible matrix gives ``C = I, D = m``.
    """
    rref_t, piv = _pivots(m.transpose())
    r = len(piv)
    D = RationalMatrix([m.rows[i] for i in piv], m.ncols)
    # rows of rref(m^T) are the coordinates of the columns of m^T in the pivot basis
    C = RationalMatrix([[rref_t[k][i] for k in range(r)] for i in range(m.nrows)], r)
    return C, D
