"""Oriented graphs: parsing, strongly connected structure and the PI test.

Vertices are the integers ``1..n``.  A graph is *simple*: no loops, no
repeated arrows, and never both ``i -> j`` and ``j -> i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .errors import GraphError, GraphParseError

__all__ = [
    "OrientedGraph",
    "ComponentKind",
    "parse_graph",
    "cycle_graph",
    "path_graph",
    "is_pi",
    "cyclic_core",
    "components",
    "acyclic_full_subgraphs",
    "cycle_order",
]


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arrows: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        arrows = frozenset((int(u), int(v)) for u, v in self.arrows)
        for u, v in arrows:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"arrow {u} -> {v} out of range 1..{self.n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if (v, u) in arrows:
                raise GraphError(f"double arrow between {u} and {v}")
        object.__setattr__(self, "arrows", arrows)

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def sorted_arrows(self):
        return sorted(self.arrows)

    def connected(self, i, j):
        """True if there is an arrow between ``i`` and ``j`` in either direction."""
        return (i, j) in self.arrows or (j, i) in self.arrows

    def to_networkx(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.arrows)
        return G

    def induced(self, subset) -> nx.DiGraph:
        return self.to_networkx().subgraph(subset)

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [f"{u} -> {v}" for u, v in self.sorted_arrows()]
        return "\n".join(lines) + "\n"

    def __str__(self):
        body = ", ".join(f"{u}->{v}" for u, v in self.sorted_arrows())
        return f"OrientedGraph(n={self.n}; {body})"


@dataclass(frozen=True)
class ComponentKind:
    tag: str  # "Singleton", "Cycle" or "Other"
    length: int | None = None

    def __str__(self):
        if self.tag == "Cycle":
            return f"Cycle({self.length})"
        return self.tag


SINGLETON = ComponentKind("Singleton")
OTHER = ComponentKind("Other")


def parse_graph(text: str) -> OrientedGraph:
    """Parse the edge-list format.

    The first meaningful line is the vertex count; every further non-empty
    line not starting with ``#`` reads ``u -> v``.  If the count line is
    missing, the largest vertex mentioned is used.
    """
    declared = None
    arrows = {}
    seen_first = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_first:
            seen_first = True
            if "->" not in line:
                try:
                    declared = int(line)
                except ValueError:
                    raise GraphParseError(lineno, f"expected vertex count, got {line!r}") from None
                if declared < 0:
                    raise GraphParseError(lineno, "vertex count must be non-negative")
                continue
        parts = line.split("->")
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected 'u -> v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(lineno, f"non-integer vertex in {line!r}") from None
        if u < 1 or v < 1:
            raise GraphParseError(lineno, "vertices are numbered from 1")
        if declared is not None and max(u, v) > declared:
            raise GraphParseError(lineno, f"vertex {max(u, v)} exceeds declared count {declared}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        if (v, u) in arrows:
            raise GraphParseError(
                lineno, f"double arrow {u} -> {v} (line {arrows[(v, u)]} has {v} -> {u})"
            )
        if (u, v) in arrows:
            raise GraphParseError(lineno, f"duplicate arrow {u} -> {v}")
        arrows[(u, v)] = lineno
    if declared is None:
        declared = max((max(a) for a in arrows), default=0)
    return OrientedGraph(declared, frozenset(arrows))


def cycle_graph(n: int) -> OrientedGraph:
    """The oriented cycle 1 -> 2 -> ... -> n -> 1."""
    if n < 3:
        raise GraphError(f"an oriented cycle needs at least 3 vertices, got {n}")
    return OrientedGraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> OrientedGraph:
    """The oriented path 1 -> 2 -> ... -> n."""
    return OrientedGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def _sccs(g):
    return [frozenset(c) for c in nx.strongly_connected_components(g.to_networkx())]


def _is_simple_cycle(G, nodes):
    if len(nodes) < 3:
        return False
    sub = G.subgraph(nodes)
    return all(sub.in_degree(v) == 1 and sub.out_degree(v) == 1 for v in nodes)


def is_pi(g: OrientedGraph) -> bool:
    """Decide whether the Hecke-Kiselman algebra of ``g`` satisfies a polynomial identity.

    Holds iff every strongly connected component is a single vertex or a
    chordless oriented cycle, and no oriented path joins two different
    cyclic components.
    """
    G = g.to_networkx()
    cyclic = []
    for comp in nx.strongly_connected_components(G):
        if len(comp) == 1:
            continue
        if not _is_simple_cycle(G, comp):
            return False
        cyclic.append(comp)
    if len(cyclic) < 2:
        return True
    cond = nx.condensation(G)
    members = cond.graph["mapping"]
    cyclic_nodes = {members[next(iter(c))] for c in cyclic}
    for c in cyclic_nodes:
        if nx.descendants(cond, c) & cyclic_nodes:
            return False
    return True


def cyclic_core(g: OrientedGraph) -> OrientedGraph:
    """Drop every arrow that lies on no oriented cycle.

    An arrow lies on a cycle exactly when both ends share a strongly
    connected component.
    """
    where = {}
    for idx, comp in enumerate(_sccs(g)):
        for v in comp:
            where[v] = idx
    kept = frozenset((u, v) for u, v in g.arrows if where[u] == where[v])
    return OrientedGraph(g.n, kept)


def components(g: OrientedGraph) -> list[tuple[tuple[int, ...], ComponentKind]]:
    """Weakly connected components, sorted by smallest vertex, each with its kind."""
    G = g.to_networkx()
    out = []
    for comp in nx.weakly_connected_components(G):
        verts = tuple(sorted(comp))
        if len(verts) == 1:
            kind = SINGLETON
        elif _is_simple_cycle(G, comp):
            kind = ComponentKind("Cycle", len(verts))
        else:
            kind = OTHER
        out.append((verts, kind))
    out.sort(key=lambda item: item[0][0])
    return out


def acyclic_full_subgraphs(g: OrientedGraph) -> Iterator[frozenset]:
    """Yield every vertex subset whose induced subgraph has no oriented cycle.

    Subsets are produced in binary-counter order of their bitmask (vertex
    ``v`` is bit ``v - 1``), so the empty set comes first.
    """
    G = g.to_networkx()
    for mask in range(1 << g.n):
        subset = frozenset(v for v in g.vertices if mask >> (v - 1) & 1)
        if nx.is_directed_acyclic_graph(G.subgraph(subset)):
            yield subset


def cycle_order(g: OrientedGraph) -> tuple[int, ...] | None:
    """Vertices of ``g`` in cycle order starting from 1, if ``g`` is one oriented n-cycle.

    Returns ``None`` for any other graph.  Position ``k`` of the result is the
    vertex playing the role of generator ``k`` of the standard cycle monoid.
    """
    if g.n < 3 or len(g.arrows) != g.n:
        return None
    succ = {}
    for u, v in g.arrows:
        if u in succ:
            return None
        succ[u] = v
    order = [1]
    while len(order) < g.n:
        nxt = succ.get(order[-1])
        if nxt is None or nxt in order:
            return None
        order.append(nxt)
    if succ.get(order[-1]) != 1:
        return None
    return tuple(order)
