"""The Hecke-Kiselman monoid C_n of the oriented cycle 1 -> 2 -> ... -> n -> 1.

Elements are handled through an integral representation on Z^n: generator
``x_i`` (i < n) overwrites coordinate ``i`` with coordinate ``i + 1``, and
``x_n`` overwrites coordinate ``n`` with ``m_1 + 1``.  Every product of such
maps sends coordinate ``k`` to ``m_{source[k]} + offset[k]``, which is the
shape :class:`AffineMap` stores.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import WordError
from .words import Word, check_word

__all__ = [
    "AffineMap",
    "IdealLevel",
    "SubsetIdempotent",
    "generator_map",
    "f_map",
    "support",
    "classify_level",
    "snqi_word",
    "idempotent_for_subset",
    "all_idempotents",
    "infiniteness_witness",
]


@dataclass(frozen=True)
class AffineMap:
    """Map of Z^n whose k-th output is ``m[source[k]] + offset[k]`` (1-based sources)."""

    source: tuple
    offset: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)), (0,) * n)

    @property
    def n(self):
        return len(self.source)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """``self ∘ other``: apply ``other`` first."""
        src = tuple(other.source[s - 1] for s in self.source)
        off = tuple(other.offset[s - 1] + c for s, c in zip(self.source, self.offset))
        return AffineMap(src, off)

    __matmul__ = compose

    def __call__(self, m):
        return tuple(m[s - 1] + c for s, c in zip(self.source, self.offset))

    def __str__(self):
        src = ",".join(map(str, self.source))
        off = ",".join(map(str, self.offset))
        return f"[src=({src}); off=({off})]"


def generator_map(i: int, n: int) -> AffineMap:
    if not 1 <= i <= n:
        raise WordError(f"generator {i} outside 1..{n}")
    src = list(range(1, n + 1))
    off = [0] * n
    if i < n:
        src[i - 1] = i + 1
    else:
        src[n - 1] = 1
        off[n - 1] = 1
    return AffineMap(tuple(src), tuple(off))


def f_map(w: Word, n: int) -> AffineMap:
    """Image of the word ``w`` in the integral representation; the leftmost letter acts last."""
    check_word(w, n)
    gens = [generator_map(i, n) for i in range(1, n + 1)]
    result = AffineMap.identity(n)
    for letter in w:
        result = result.compose(gens[letter - 1])
    return result


def support(a: AffineMap) -> frozenset:
    """Input coordinates the map actually reads."""
    return frozenset(a.source)


@dataclass(frozen=True)
class IdealLevel:
    """Deepest ideal ``Q_level`` certified to contain a word; ``level is None`` means top.

    Only membership is certified.  A word at level ``i`` may still lie in a
    deeper ideal of the chain.
    """

    level: int | None
    support_size: int

    @property
    def is_top(self):
        return self.level is None

    def __str__(self):
        name = "top" if self.level is None else str(self.level)
        return f"{name} (|supp|={self.support_size})"


def classify_level(w: Word, n: int) -> IdealLevel:
    size = len(support(f_map(w, n)))
    if size >= n - 1:
        return IdealLevel(None, size)
    return IdealLevel(max(n - 2 - size, -1), size)


def snqi_word(n: int, i: int) -> Word:
    """The word ``x_n x_1 ... x_i x_{n-1} ... x_{i+1}``."""
    if n < 3:
        raise WordError(f"cycle length must be at least 3, got {n}")
    if not 0 <= i <= n - 2:
        raise WordError(f"index {i} outside 0..{n - 2}")
    return (n,) + tuple(range(1, i + 1)) + tuple(range(n - 1, i, -1))


@dataclass(frozen=True)
class SubsetIdempotent:
    subset: frozenset
    word: Word


def idempotent_for_subset(n: int, X) -> SubsetIdempotent:
    X = frozenset(X)
    if not X <= frozenset(range(1, n + 1)):
        raise WordError(f"subset {sorted(X)} is not inside 1..{n}")
    if len(X) == n:
        raise WordError("the full vertex set of the cycle carries no idempotent")
    if not X:
        return SubsetIdempotent(X, ())
    if not {1, n} <= X:
        return SubsetIdempotent(X, tuple(sorted(X)))
    # wrap-around: the run 1..k goes last
    k = 1
    while k + 1 in X:
        k += 1
    head = tuple(sorted(i for i in X if i > k + 1))
    return SubsetIdempotent(X, head + tuple(range(1, k + 1)))


def all_idempotents(n: int) -> list[SubsetIdempotent]:
    """One idempotent per proper subset of ``1..n``, in bitmask order."""
    if n < 3:
        raise WordError(f"cycle length must be at least 3, got {n}")
    out = []
    for mask in range((1 << n) - 1):
        X = frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
        out.append(idempotent_for_subset(n, X))
    return out


def infiniteness_witness(n: int, i: int, kmax: int) -> bool:
    """True iff the powers ``s^1..s^kmax`` of ``s = snqi_word(n, i)`` have pairwise distinct images."""
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    step = f_map(snqi_word(n, i), n)
    power = step
    seen = {power}
    for _ in range(kmax - 1):
        power = power.compose(step)
        if power in seen:
            return False
        seen.add(power)
    return True
