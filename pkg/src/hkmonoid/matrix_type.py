"""Semigroups of matrix type M^0(S, A, B; P) over a cyclic semigroup S = <s>.

Sandwich entries are either :data:`THETA` (the zero) or an exponent ``k >= 0``
standing for ``s^k`` (``s^0`` is the adjoined identity).  Elements are
``(s^k; a, b)`` with ``k >= 1`` and 1-based indices, or :data:`THETA`.

The representations built here go through the Munn algebra over Q: the
sandwich is specialised at ``s = λ``, factored as ``P̄ = C D`` with full rank
factors, and ``(s^k; a, b)`` is sent to ``λ^k D E_ab C``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from pathlib import Path
from typing import NamedTuple

from .errors import RepresentationError, SandwichDataError
from .linalg import RationalMatrix, format_rational, full_rank_factorization, parse_rational

__all__ = [
    "THETA",
    "MatrixTypeData",
    "Element",
    "c3_data",
    "parse_data",
    "format_data",
    "load_data",
    "save_data",
    "multiply",
    "evaluate_sandwich",
    "Representation",
    "build_rep",
    "verify_homomorphism",
    "ExtendedRepresentation",
    "extend_rep",
    "determinant_polynomial",
    "dimension_profile",
]


class _Theta:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "THETA"

    def __str__(self):
        return "θ"

    def __reduce__(self):
        return (_Theta, ())


THETA = _Theta()


class Element(NamedTuple):
    k: int
    a: int
    b: int

    def __str__(self):
        return self.format()

    def format(self, generator="s"):
        return f"({generator}^{self.k}; {self.a}, {self.b})"


@dataclass(frozen=True)
class MatrixTypeData:
    """Sandwich matrix ``P`` (rows indexed by B, columns by A) plus labels."""

    sandwich: tuple
    row_labels: tuple
    col_labels: tuple
    generator: str = "s"

    def __post_init__(self):
        rows = tuple(tuple(THETA if e is THETA or e is None else int(e) for e in r) for r in self.sandwich)
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise SandwichDataError("sandwich matrix must be square and non-empty")
        if any(e is not THETA and e < 0 for r in rows for e in r):
            raise SandwichDataError("sandwich exponents must be non-negative")
        if len(self.row_labels) != size or len(self.col_labels) != size:
            raise SandwichDataError("label count does not match matrix size")
        if rows[0][0] != 0:
            raise SandwichDataError("entry (1,1) must be 1; use MatrixTypeData.normalized")
        object.__setattr__(self, "sandwich", rows)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))

    @classmethod
    def normalized(cls, sandwich, row_labels, col_labels, generator="s"):
        """Build data after moving an entry equal to 1 to position (1,1).

        A diagonal 1 is preferred so symmetric input stays symmetric.
        """
        rows = [list(THETA if e is None else e for e in r) for r in sandwich]
        rl, cl = list(row_labels), list(col_labels)
        cells = [(i, j) for i, r in enumerate(rows) for j, e in enumerate(r) if e == 0]
        if not cells:
            raise SandwichDataError("sandwich matrix has no entry equal to 1")
        b, a = min(cells, key=lambda ij: (ij[0] != ij[1], ij))
        rows[0], rows[b] = rows[b], rows[0]
        rl[0], rl[b] = rl[b], rl[0]
        for r in rows:
            r[0], r[a] = r[a], r[0]
        cl[0], cl[a] = cl[a], cl[0]
        return cls(tuple(map(tuple, rows)), tuple(rl), tuple(cl), generator)

    @property
    def size(self):
        return len(self.sandwich)

    def entry(self, b, a):
        """Sandwich entry ``p_{b,a}`` (1-based)."""
        return self.sandwich[b - 1][a - 1]

    def is_symmetric(self):
        return all(self.sandwich[i][j] == self.sandwich[j][i] for i in range(self.size) for j in range(i))

    def with_entry(self, b, a, value):
        rows = [list(r) for r in self.sandwich]
        rows[b - 1][a - 1] = value
        return MatrixTypeData(tuple(map(tuple, rows)), self.row_labels, self.col_labels, self.generator)

    def format_entry(self, e):
        if e is THETA:
            return "θ"
        if e == 0:
            return "1"
        return self.generator if e == 1 else f"{self.generator}^{e}"


def c3_data(which: str) -> MatrixTypeData:
    """Built-in sandwich data of the two matrix-type semigroups in C_3.

    ``M1`` is generated by ``t = x_3 x_1 x_2``, ``M0`` by ``s = x_3 x_2 x_1``.
    """
    which = which.upper()
    if which == "M1":
        return MatrixTypeData(
            ((0, 0, 0), (0, 0, 1), (0, 1, 1)),
            ("1", "x_3", "x_3x_1"),
            ("1", "x_2", "x_1x_2"),
            generator="t",
        )
    if which == "M0":
        return MatrixTypeData(
            ((0, 0, THETA), (0, THETA, 1), (THETA, 1, 1)),
            ("1", "x_3", "x_3x_2"),
            ("1", "x_1", "x_2x_1"),
            generator="s",
        )
    raise SandwichDataError(f"unknown built-in data {which!r} (expected M0 or M1)")


def _parse_entry(tok, lineno):
    low = tok.lower()
    if low in ("theta", "θ"):
        return THETA
    if low == "1":
        return 0
    if low == "s":
        return 1
    if low.startswith("s^"):
        try:
            k = int(low[2:])
        except ValueError:
            raise SandwichDataError(f"line {lineno}: malformed exponent in {tok!r}") from None
        if k < 0:
            raise SandwichDataError(f"line {lineno}: negative exponent in {tok!r}")
        return k
    raise SandwichDataError(f"line {lineno}: expected 'theta' or 's^k', got {tok!r}")


def parse_data(text: str, n: int | None = None, level: int | None = None) -> MatrixTypeData:
    """Parse the sandwich-data text format.

    With ``n`` and ``level`` given, the size must be ``binom(n, level + 1)``,
    the size of ``M_level`` inside ``C_n``.
    """
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SandwichDataError("empty sandwich file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "size" or not parts[1].isdigit():
        raise SandwichDataError(f"line {lineno}: expected 'size N', got {head!r}")
    size = int(parts[1])
    if n is not None and level is not None and size != comb(n, level + 1):
        raise SandwichDataError(
            f"M_{level} of C_{n} has size {comb(n, level + 1)}, file declares {size}"
        )
    if len(lines) != size + 3:
        raise SandwichDataError(
            f"expected {size + 3} non-empty lines for size {size}, got {len(lines)}"
        )
    row_labels = lines[1][1].split()
    col_labels = lines[2][1].split()
    for (ln, lab), what in ((lines[1], "row"), (lines[2], "column")):
        if len(lab.split()) != size:
            raise SandwichDataError(f"line {ln}: expected {size} {what} labels")
    rows = []
    for ln, body in lines[3:]:
        toks = body.split()
        if len(toks) != size:
            raise SandwichDataError(f"line {ln}: matrix is not square ({len(toks)} entries, size {size})")
        rows.append(tuple(_parse_entry(t, ln) for t in toks))
    return MatrixTypeData.normalized(rows, row_labels, col_labels)


def entry_token(e) -> str:
    """File-format spelling of a sandwich entry."""
    if e is THETA:
        return "theta"
    return "1" if e == 0 else f"s^{e}"


def format_data(d: MatrixTypeData) -> str:
    lines = [f"size {d.size}", " ".join(d.row_labels), " ".join(d.col_labels)]
    lines += [" ".join(entry_token(e) for e in r) for r in d.sandwich]
    return "\n".join(lines) + "\n"


def load_data(path, n=None, level=None) -> MatrixTypeData:
    return parse_data(Path(path).read_text(encoding="utf-8"), n, level)


def save_data(d: MatrixTypeData, path):
    Path(path).write_text(format_data(d), encoding="utf-8")


def multiply(x, y, d: MatrixTypeData):
    """Product in M^0(S, A, B; P): ``(s^n; a, b)(s^m; a', b') = (s^{n+m+k}; a, b')`` when ``p_{b,a'} = s^k``."""
    if x is THETA or y is THETA:
        return THETA
    p = d.entry(x.b, y.a)
    if p is THETA:
        return THETA
    return Element(x.k + y.k + p, x.a, y.b)


def elements(d: MatrixTypeData, kmax: int):
    for k, a, b in product(range(1, kmax + 1), range(1, d.size + 1), range(1, d.size + 1)):
        yield Element(k, a, b)


def evaluate_sandwich(d: MatrixTypeData, lam) -> RationalMatrix:
    lam = Fraction(lam)
    if lam == 0:
        raise RepresentationError("λ = 0 sends every element to the zero map; choose λ ≠ 0")
    return RationalMatrix([[0 if e is THETA else lam**e for e in r] for r in d.sandwich])


def _unit_sandwich(D, C, a, b):
    """``D E_ab C``: column ``a`` of D times row ``b`` of C."""
    col = D.column(a - 1)
    row = C.rows[b - 1]
    return RationalMatrix([[x * y for y in row] for x in col], len(row))


@dataclass(frozen=True)
class Representation:
    data: MatrixTypeData
    lam: Fraction
    C: RationalMatrix
    D: RationalMatrix

    @property
    def dim(self):
        return self.D.nrows

    def image(self, x) -> RationalMatrix:
        if x is THETA:
            return RationalMatrix.zeros(self.dim, self.dim)
        return _unit_sandwich(self.D, self.C, x.a, x.b).scale(self.lam**x.k)

    def to_json(self):
        gens = []
        for a in range(1, self.data.size + 1):
            for b in range(1, self.data.size + 1):
                x = Element(1, a, b)
                gens.append({"element": x.format(self.data.generator), "matrix": self.image(x).to_strings()})
        return {"lambda": format_rational(self.lam), "dim": self.dim, "generators": gens}

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def build_rep(d: MatrixTypeData, lam) -> Representation:
    lam = parse_rational(lam)
    C, D = full_rank_factorization(evaluate_sandwich(d, lam))
    return Representation(d, lam, C, D)


def verify_homomorphism(rep: Representation, d: MatrixTypeData, kmax: int) -> bool:
    """Exhaustively compare ``ψ(x) ψ(y)`` with ``ψ(xy)`` for exponents up to ``kmax``."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    elems = list(elements(d, kmax)) + [THETA]
    images = {x: rep.image(x) for x in elems}
    for x in elems:
        for y in elems:
            xy = multiply(x, y, d)
            target = images[xy] if xy in images else rep.image(xy)
            if images[x] @ images[y] != target:
                return False
    return True


@dataclass(frozen=True)
class ExtendedRepresentation:
    """Extension of a representation to ``(s^p; a, b)`` for every integer ``p``."""

    rep: Representation
    e: RationalMatrix
    left: tuple  # image of (s; a, 1), a = 1..size
    right: tuple  # image of (s; 1, b), b = 1..size

    def image(self, p, a, b) -> RationalMatrix:
        lam = self.rep.lam
        return (self.left[a - 1] @ self.e @ self.right[b - 1]).scale(lam ** (p - 2))

    def multiply(self, x, y):
        """Product in the closure over the infinite cyclic group; exponents may be negative."""
        return multiply(x, y, self.rep.data)

    def verify(self, prange) -> bool:
        d = self.rep.data
        idx = range(1, d.size + 1)
        cache = {(p, a, b): self.image(p, a, b) for p in prange for a in idx for b in idx}
        for (p, a, b), left in cache.items():
            for (q, a2, b2), right in cache.items():
                prod = self.multiply(Element(p, a, b), Element(q, a2, b2))
                if prod is THETA:
                    expected = RationalMatrix.zeros(self.rep.dim, self.rep.dim)
                else:
                    expected = self.image(*prod)
                if left @ right != expected:
                    return False
        return True


def extend_rep(rep: Representation, d: MatrixTypeData | None = None) -> ExtendedRepresentation:
    d = d or rep.data
    s11 = rep.image(Element(1, 1, 1))
    e = s11.scale(1 / rep.lam)
    if e @ e != e or e.rank() != 1:
        raise RepresentationError(
            "image of (s; 1, 1) is not λ times a rank-one idempotent"
        )
    left = tuple(rep.image(Element(1, a, 1)) for a in range(1, d.size + 1))
    right = tuple(rep.image(Element(1, 1, b)) for b in range(1, d.size + 1))
    return ExtendedRepresentation(rep, e, left, right)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def determinant_polynomial(d: MatrixTypeData) -> list[int]:
    """Coefficients (constant term first) of ``det P̄(λ)`` as a polynomial in λ.

    Recovered exactly by Lagrange interpolation on ``deg + 1`` integer points.
    """
    deg = sum(max((e for e in r if e is not THETA), default=0) for r in d.sandwich)
    xs = list(range(deg + 1))
    ys = [
        RationalMatrix([[0 if e is THETA else Fraction(x) ** e for e in r] for r in d.sandwich]).det()
        for x in xs
    ]
    coeffs = [Fraction(0)] * (deg + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = _poly_mul(basis, [Fraction(-xj), Fraction(1)])
                denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += yi * c / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def _divisors(m):
    m = abs(m)
    return [k for k in range(1, m + 1) if m % k == 0]


def _rational_roots(coeffs):
    """Nonzero rational roots of an integer polynomial (constant term first)."""
    c = list(coeffs)
    while c and c[0] == 0:
        c.pop(0)
    if len(c) <= 1:
        return []
    roots = set()
    for p in _divisors(c[0]):
        for q in _divisors(c[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(a * cand**k for k, a in enumerate(c)) == 0:
                    roots.add(cand)
    return sorted(roots)


@dataclass(frozen=True)
class DimensionProfile:
    generic_dim: int
    exceptional: tuple  # ((λ, dim), ...) for rational λ ≠ 0 where the rank drops
    determinant: tuple
    irrational_drops: bool  # det has roots outside Q ∪ {0}

    def annotation(self):
        excluded = ",".join(format_rational(q) for q in (Fraction(0),) + tuple(l for l, _ in self.exceptional))
        text = f"dim {self.generic_dim} for λ∉{{{excluded}}}"
        for lam, dim in self.exceptional:
            text += f", dim {dim} at λ={format_rational(lam)}"
        if self.irrational_drops:
            text += ", rank also drops at the irrational roots of det P̄(λ)"
        return text


def dimension_profile(d: MatrixTypeData) -> DimensionProfile:
    det = determinant_polynomial(d)
    if any(det):
        generic = d.size
        roots = _rational_roots(det)
        exceptional = tuple((lam, evaluate_sandwich(d, lam).rank()) for lam in roots)
        stripped = list(det)
        while stripped[0] == 0:
            stripped.pop(0)
        # degree left after removing rational roots (with multiplicity) signals irrational ones
        remaining = len(stripped) - 1
        for lam in roots:
            poly = stripped
            while True:
                q, r = _synthetic_division(poly, lam)
                if r != 0:
                    break
                poly = q
                remaining -= 1
            stripped = poly
        return DimensionProfile(generic, exceptional, tuple(det), remaining > 0)
    # singular for every λ: the generic rank is attained at some small integer point
    deg = sum(max((e for e in r if e is not THETA), default=0) for r in d.sandwich)
    generic = max(evaluate_sandwich(d, x).rank() for x in range(1, d.size * (deg + 1) + 2))
    return DimensionProfile(generic, (), tuple(det), False)


def _synthetic_division(coeffs, root):
    """Divide (constant-first) ``coeffs`` by ``λ - root``; returns quotient and remainder."""
    hi = list(reversed([Fraction(c) for c in coeffs]))
    out = [hi[0]]
    for c in hi[1:]:
        out.append(c + out[-1] * root)
    rem = out.pop()
    return list(reversed(out)), rem
