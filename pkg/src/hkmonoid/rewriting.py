"""Word problem machinery for Hecke-Kiselman monoids.

Equality of words is searched for by *saturation*: breadth-first exploration
of everything reachable from a word by applying defining relations in either
direction, never exceeding a length bound.  Hits are sound (the search path
is a chain of relation applications).  Misses are inconclusive on their own,
so separating invariants are layered on top:

* for an oriented cycle, the integral affine representation (:mod:`.cycle`);
* for an acyclic graph, the exact right Cayley graph of the (finite) monoid,
  built by Todd-Coxeter enumeration in :func:`enumerate_monoid`.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from . import cycle
from .errors import CapExceeded, GraphError
from .graph import OrientedGraph, cycle_order
from .words import Word, check_word, format_word, shortlex_key

DEFAULT_BUDGET = 200_000
DEFAULT_CAP = 100_000

__all__ = [
    "DEFAULT_BUDGET",
    "RelationSet",
    "relations",
    "Saturation",
    "saturate",
    "NormalForm",
    "normalize",
    "Verdict",
    "EqualityVerdict",
    "are_equal",
    "is_rewrite_step",
    "replay_chain",
    "FiniteMonoid",
    "enumerate_monoid",
    "idempotents_acyclic",
]


@dataclass(frozen=True)
class RelationSet:
    """Defining relations of HK_Θ as pairs ``(lhs, rhs)`` of words.

    ``collapses`` holds two pairs per arrow ``i -> j``:
    ``(i j i, i j)`` and ``(j i j, i j)``.
    """

    n: int
    idempotency: tuple
    commutations: tuple
    collapses: tuple

    @property
    def pairs(self):
        return self.idempotency + self.commutations + self.collapses

    def __len__(self):
        return len(self.pairs)

    def moves(self):
        """Directed rewrite moves, both orientations of every relation."""
        out = []
        for lhs, rhs in self.pairs:
            out.append((lhs, rhs))
            out.append((rhs, lhs))
        return out


def relations(g: OrientedGraph) -> RelationSet:
    idem = tuple(((i, i), (i,)) for i in g.vertices)
    comm = tuple(
        ((i, j), (j, i))
        for i in g.vertices
        for j in range(i + 1, g.n + 1)
        if not g.connected(i, j)
    )
    coll = []
    for i, j in g.sorted_arrows():
        coll.append(((i, j, i), (i, j)))
        coll.append(((j, i, j), (i, j)))
    return RelationSet(g.n, idem, comm, tuple(coll))


class _Mover:
    def __init__(self, rels: RelationSet):
        self.by_first = {}
        for pat, rep in rels.moves():
            self.by_first.setdefault(pat[0], []).append((pat, rep))

    def neighbours(self, w, max_len=None):
        size = len(w)
        for p, letter in enumerate(w):
            for pat, rep in self.by_first.get(letter, ()):
                end = p + len(pat)
                if end > size or w[p:end] != pat:
                    continue
                if max_len is not None and size - len(pat) + len(rep) > max_len:
                    continue
                yield w[:p] + rep + w[end:]


@dataclass
class Saturation:
    """Result of a bounded breadth-first exploration.

    ``parents`` maps every visited word to the word it was reached from
    (``None`` for the start).  ``complete`` is true when the whole
    length-bounded class was exhausted within budget.
    """

    start: Word
    parents: dict
    complete: bool
    found: Word | None = None

    @property
    def least(self):
        return min(self.parents, key=shortlex_key)

    def chain_to(self, target):
        chain = [target]
        while self.parents[chain[-1]] is not None:
            chain.append(self.parents[chain[-1]])
        chain.reverse()
        return tuple(chain)


def saturate(w, g, budget=DEFAULT_BUDGET, max_len=None, target=None, rels=None, stop=None):
    """Explore the length-bounded class of ``w``.

    The search ends early once ``target`` is reached, or once any visited word
    belongs to the container ``stop`` (that word is reported as ``found``).
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    w = check_word(w, g.n)
    if max_len is None:
        max_len = len(w)
    if target is not None:
        stop = (target,)
    mover = _Mover(rels or relations(g))
    parents = {w: None}
    if stop is not None and w in stop:
        return Saturation(w, parents, False, w)
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in mover.neighbours(cur, max_len):
            if nxt in parents:
                continue
            if len(parents) >= budget:
                return Saturation(w, parents, False)
            parents[nxt] = cur
            if stop is not None and nxt in stop:
                return Saturation(w, parents, False, nxt)
            queue.append(nxt)
    return Saturation(w, parents, True)


class NormalForm(tuple):
    """``(word, complete)``; ``complete`` is false when the budget ran out."""

    def __new__(cls, word, complete):
        return super().__new__(cls, (word, complete))

    word = property(lambda self: self[0])
    complete = property(lambda self: self[1])


def normalize(w, g, budget=DEFAULT_BUDGET, rels=None) -> NormalForm:
    """Shortlex-least word reachable from ``w`` without growing past ``len(w)``."""
    sat = saturate(w, g, budget, rels=rels)
    return NormalForm(sat.least, sat.complete)


class Verdict(enum.Enum):
    EQUAL = "Equal"
    DISTINCT = "Distinct"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class EqualityVerdict:
    verdict: Verdict
    chain: tuple | None = None
    witness: tuple | None = field(default=None)

    @property
    def equal(self):
        return self.verdict is Verdict.EQUAL

    @property
    def distinct(self):
        return self.verdict is Verdict.DISTINCT

    def __str__(self):
        if self.verdict is Verdict.EQUAL and self.chain:
            return "Equal via " + " = ".join(format_word(w) for w in self.chain)
        if self.witness is not None:
            kind, a, b = self.witness
            return f"{self.verdict.value} ({kind}: {_fmt(a)} vs {_fmt(b)})"
        return self.verdict.value


def _fmt(obj):
    return format_word(obj) if isinstance(obj, tuple) else str(obj)


def _cycle_relabel(g):
    order = cycle_order(g)
    if order is None:
        return None
    return {v: pos for pos, v in enumerate(order, start=1)}


def _is_acyclic(g):
    return nx.is_directed_acyclic_graph(g.to_networkx())


def are_equal(u, v, g, budget=DEFAULT_BUDGET, monoid=None) -> EqualityVerdict:
    """Decide ``u = v`` in HK_g as far as the budget and available invariants allow.

    ``Equal`` carries the rewrite chain when saturation found one; for acyclic
    graphs equality may instead be certified by the enumerated monoid, in
    which case ``chain`` is ``None`` and ``witness`` names the shared normal
    form.  ``Distinct`` always carries a witness.
    """
    u = check_word(u, g.n)
    v = check_word(v, g.n)
    if u == v:
        return EqualityVerdict(Verdict.EQUAL, (u,))
    sat = saturate(u, g, budget, max_len=max(len(u), len(v)), target=v)
    if sat.found is not None:
        return EqualityVerdict(Verdict.EQUAL, sat.chain_to(v))

    pos = _cycle_relabel(g)
    if pos is not None:
        fu = cycle.f_map(tuple(pos[i] for i in u), g.n)
        fv = cycle.f_map(tuple(pos[i] for i in v), g.n)
        if fu != fv:
            return EqualityVerdict(Verdict.DISTINCT, witness=("f-map", fu, fv))
        return EqualityVerdict(Verdict.UNKNOWN)

    if monoid is not None or _is_acyclic(g):
        try:
            M = monoid if monoid is not None else enumerate_monoid(g)
        except CapExceeded:
            return EqualityVerdict(Verdict.UNKNOWN)
        cu, cv = M.canonical(u), M.canonical(v)
        if cu != cv:
            return EqualityVerdict(Verdict.DISTINCT, witness=("normal form", cu, cv))
        return EqualityVerdict(Verdict.EQUAL, None, ("normal form", cu, cv))
    return EqualityVerdict(Verdict.UNKNOWN)


def is_rewrite_step(a, b, rels: RelationSet) -> bool:
    """True if ``b`` arises from ``a`` by one relation application."""
    return any(nb == b for nb in _Mover(rels).neighbours(tuple(a)))


def replay_chain(chain, rels: RelationSet) -> bool:
    return all(is_rewrite_step(a, b, rels) for a, b in zip(chain, chain[1:]))


class FiniteMonoid:
    """A finite HK monoid given by its right Cayley graph.

    ``elements[k]`` is the shortlex-least word of element ``k`` (element 0 is
    the identity) and ``table[k][i - 1]`` is the element ``elements[k] * x_i``.
    """

    def __init__(self, g, elements, table):
        self.graph = g
        self.elements = elements
        self.table = table
        self.index = {w: k for k, w in enumerate(elements)}

    def __len__(self):
        return len(self.elements)

    def element_of(self, word, start=0):
        k = start
        for letter in word:
            k = self.table[k][letter - 1]
        return k

    def canonical(self, word):
        return self.elements[self.element_of(word)]

    def multiply(self, a, b):
        return self.element_of(self.elements[b], start=a)

    def is_idempotent(self, k):
        return self.multiply(k, k) == k

    def idempotents(self):
        return [k for k in range(len(self)) if self.is_idempotent(k)]

    def two_sided_ideal(self, k):
        """Elements of ``M x M`` for ``x = elements[k]``."""
        left = {self.multiply(a, k) for a in range(len(self))}
        return {self.multiply(y, b) for y in left for b in range(len(self))}


def enumerate_monoid(g, cap=DEFAULT_CAP) -> FiniteMonoid:
    """Enumerate HK_g exactly by Todd-Coxeter coset enumeration.

    States of the right Cayley graph are defined in HLT order: each live
    state has every defining relation traced from it (defining missing
    edges as needed), and the two ends are identified.  Identifications
    are propagated as coincidences.  When every state is processed the
    graph carries an action of HK_g on which the relations hold, so distinct
    states are distinct elements and the enumeration is exact.

    Raises :class:`CapExceeded` when more than ``cap`` live states, or
    ``20 * cap`` defined states, are needed.
    """
    rels = relations(g)
    n = g.n
    table = [[None] * n]
    parent = [0]
    live = 1

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def define(s, x):
        nonlocal live
        if live >= cap or len(table) >= 20 * cap:
            raise CapExceeded(cap, live)
        t = len(table)
        table.append([None] * n)
        parent.append(t)
        table[s][x] = t
        live += 1
        return t

    def step(s, x):
        t = table[s][x]
        if t is None:
            return define(s, x)
        t = find(t)
        table[s][x] = t
        return t

    def coincide(a, b):
        nonlocal live
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
            live -= 1
            for x in range(n):
                tb = table[rb][x]
                if tb is None:
                    continue
                ta = table[ra][x]
                if ta is None:
                    table[ra][x] = tb
                else:
                    pending.append((ta, tb))

    s = 0
    while s < len(table):
        if find(s) == s:
            for lhs, rhs in rels.pairs:
                if find(s) != s:
                    break
                a = s
                for letter in lhs:
                    a = step(a, letter - 1)
                b = find(s)
                for letter in rhs:
                    b = step(b, letter - 1)
                coincide(a, b)
            if find(s) == s:
                for x in range(n):
                    step(s, x)
        s += 1

    # relabel live states breadth-first so representatives are shortlex-least
    root = find(0)
    new_id = {root: 0}
    elements = [()]
    order = [root]
    head = 0
    while head < len(order):
        r = order[head]
        head += 1
        for x in range(n):
            t = find(table[r][x])
            if t not in new_id:
                new_id[t] = len(order)
                order.append(t)
                elements.append(elements[new_id[r]] + (x + 1,))
    new_table = [[new_id[find(table[r][x])] for x in range(n)] for r in order]
    return FiniteMonoid(g, elements, new_table)


def topological_order(g):
    G = g.to_networkx()
    if not nx.is_directed_acyclic_graph(G):
        raise GraphError("graph has an oriented cycle")
    return list(nx.lexicographical_topological_sort(G))


def idempotents_acyclic(g: OrientedGraph) -> list[Word]:
    """The ``2^n`` idempotents ``e_X`` of an acyclic HK monoid, in subset bitmask order.

    ``e_X`` multiplies the generators of ``X`` in a topological order of the
    graph, so that for every arrow ``i -> j`` inside ``X`` the letter ``i``
    comes first.
    """
    rank = {v: pos for pos, v in enumerate(topological_order(g))}
    out = []
    for mask in range(1 << g.n):
        X = [v for v in g.vertices if mask >> (v - 1) & 1]
        out.append(tuple(sorted(X, key=rank.__getitem__)))
    return out
