"""Catalog of irreducible representations / maximal ideals of PI Hecke-Kiselman algebras.

For a PI graph the algebra modulo its radical is the tensor product of the
algebras of the components of the cyclic core.  Each singleton component
contributes the two characters of ``K ⊕ K``; each oriented ``j``-cycle
contributes ``2^j - 1`` idempotent-induced characters and one λ-family of
matrix-type representations per level ``0..j-2``.  A maximal ideal is one
choice per component.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from math import comb, prod

from . import cycle
from .errors import GraphError, HKError, SandwichDataError
from .graph import ComponentKind, OrientedGraph, components, cyclic_core, is_pi
from .matrix_type import c3_data, dimension_profile
from .rewriting import DEFAULT_BUDGET, are_equal
from .words import Word, format_word

SCHEMA = 1

__all__ = [
    "IdempotentInduced",
    "MatrixTypeFamily",
    "ComponentReport",
    "CatalogReport",
    "one_dim_rep",
    "component_descriptors",
    "catalog",
    "maximal_ideal_descriptors",
]


@dataclass(frozen=True)
class IdempotentInduced:
    """Character ``φ_e(m) = 1`` if ``e m = e``, else 0."""

    word: Word
    level: int | None = None  # certified ideal level of e in its cycle; None for top
    note: str = ""
    in_cycle: bool = True  # levels only exist inside a cycle component

    dim = 1

    def to_json(self):
        out = {"source": "idempotent", "idempotent": format_word(self.word), "dim": 1}
        if self.in_cycle:
            out["level"] = "top" if self.level is None else self.level
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self):
        extra = f"  [{self.note}]" if self.note else ""
        if not self.in_cycle:
            return f"idempotent {format_word(self.word)} (dim 1){extra}"
        lvl = "top" if self.level is None else self.level
        return f"idempotent {format_word(self.word)} (level {lvl}, dim 1){extra}"


@dataclass(frozen=True)
class MatrixTypeFamily:
    level: int
    data_source: str  # "builtin", "user" or "needed"
    annotation: str
    generic_dim: int | None = None
    exceptional: tuple = ()

    dimension_rule = "rank of P̄_i(λ)"

    def to_json(self):
        return {
            "source": "matrix_type",
            "level": self.level,
            "dimension_rule": self.dimension_rule.replace("_i", f"_{self.level}"),
            "data": self.data_source,
            "generic_dim": self.generic_dim,
            "exceptional": [{"lambda": str(lam), "dim": dim} for lam, dim in self.exceptional],
            "annotation": self.annotation,
        }

    def __str__(self):
        return f"family M_{self.level}: {self.annotation} [{self.data_source}]"


def one_dim_rep(e, g: OrientedGraph, probe, budget=DEFAULT_BUDGET, monoid=None):
    """Value of the character attached to idempotent ``e`` at ``probe``: 1, 0, or ``None`` (undecided)."""
    e, probe = tuple(e), tuple(probe)
    check = are_equal(e + e, e, g, budget, monoid=monoid)
    if not check.equal:
        raise HKError(f"{format_word(e)} is not a verified idempotent ({check.verdict.value})")
    verdict = are_equal(e + probe, e, g, budget, monoid=monoid)
    if verdict.equal:
        return 1
    if verdict.distinct:
        return 0
    return None


def _family(j, level, data, source):
    if data is None:
        return MatrixTypeFamily(level, "needed", "rank of user-supplied P̄_i(λ)".replace("_i", f"_{level}"))
    if data.size != comb(j, level + 1):
        raise SandwichDataError(
            f"M_{level} of C_{j} has size {comb(j, level + 1)}, data has size {data.size}"
        )
    prof = dimension_profile(data)
    return MatrixTypeFamily(level, source, prof.annotation(), prof.generic_dim, prof.exceptional)


def component_descriptors(kind: ComponentKind, data=None, vertices=None):
    """Descriptor list of one component of the cyclic core.

    ``vertices`` lists the component's vertices (in cycle order for a
    cycle); it defaults to ``1..j``.  ``data`` optionally maps a level ``i``
    to the :class:`MatrixTypeData` of ``M_i``; cycles of length 3 fall back to
    the built-in data.
    """
    if kind.tag == "Singleton":
        v = vertices[0] if vertices else 1
        return [
            IdempotentInduced((), None, f"x_{v} ↦ 0", in_cycle=False),
            IdempotentInduced((v,), None, f"x_{v} ↦ 1", in_cycle=False),
        ]
    if kind.tag != "Cycle":
        raise GraphError("component is neither a singleton nor an oriented cycle; graph is not PI")
    j = kind.length
    order = tuple(vertices) if vertices else tuple(range(1, j + 1))
    out = []
    for idem in cycle.all_idempotents(j):
        level = cycle.classify_level(idem.word, j).level
        out.append(IdempotentInduced(tuple(order[i - 1] for i in idem.word), level))
    if data is None and j == 3:
        data, source = {0: c3_data("M0"), 1: c3_data("M1")}, "builtin"
    else:
        source = "user"
    data = data or {}
    for i in range(j - 1):
        out.append(_family(j, i, data.get(i), source))
    return out


@dataclass
class ComponentReport:
    vertices: tuple
    kind: ComponentKind
    descriptors: list = field(default_factory=list)

    @property
    def one_dim(self):
        return [d for d in self.descriptors if isinstance(d, IdempotentInduced)]

    def to_json(self):
        out = {
            "vertices": list(self.vertices),
            "kind": str(self.kind),
            "descriptors": [d.to_json() for d in self.descriptors],
        }
        if self.kind.tag == "Cycle":
            out["prime_chain"] = (
                f"minimal primes J_0..J_{self.kind.length - 2}; every maximal chain is J_i ⊊ P"
            )
        return out


@dataclass
class CatalogReport:
    graph: OrientedGraph
    pi: bool
    theta_prime: OrientedGraph
    components: list

    @property
    def one_dim_count(self):
        if not self.pi:
            return None
        return prod(len(c.one_dim) for c in self.components)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "graph": {"n": self.graph.n, "arrows": [list(a) for a in self.graph.sorted_arrows()]},
            "pi": self.pi,
            "theta_prime": [list(a) for a in self.theta_prime.sorted_arrows()],
            "components": [c.to_json() for c in self.components],
            "maximal_ideal_structure": "tensor-product of per-component choices" if self.pi else None,
            "one_dim_count": self.one_dim_count,
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    def to_text(self):
        lines = [f"PI: {'yes' if self.pi else 'no'}"]
        core = ", ".join(f"{u}->{v}" for u, v in self.theta_prime.sorted_arrows()) or "(no arrows)"
        lines.append(f"cyclic core: {core}")
        for c in self.components:
            verts = " ".join(map(str, c.vertices))
            lines.append(f"component {{{verts}}}: {c.kind}")
            lines += [f"  {d}" for d in c.descriptors]
        if self.pi:
            lines.append("maximal ideals: tensor-product of per-component choices")
            lines.append(f"one-dimensional (idempotent-induced) choices: {self.one_dim_count}")
        return "\n".join(lines) + "\n"


def _cycle_vertices(core, verts):
    succ = {u: v for u, v in core.arrows if u in verts}
    order = [min(verts)]
    while len(order) < len(verts):
        order.append(succ[order[-1]])
    return tuple(order)


def catalog(g: OrientedGraph, data=None) -> CatalogReport:
    """Build the catalog report.

    ``data`` optionally maps a cycle length ``j`` to ``{level: MatrixTypeData}``
    and is applied to every ``j``-cycle component.
    """
    data = data or {}
    core = cyclic_core(g)
    pi = is_pi(g)
    comps = []
    for verts, kind in components(core):
        rep = ComponentReport(verts, kind)
        if pi:
            if kind.tag == "Cycle":
                order = _cycle_vertices(core, verts)
                rep.vertices = order
                rep.descriptors = component_descriptors(kind, data.get(kind.length), order)
            else:
                rep.descriptors = component_descriptors(kind, None, verts)
        comps.append(rep)
    return CatalogReport(g, pi, core, comps)


def maximal_ideal_descriptors(report: CatalogReport, one_dim_only=False):
    """Iterate over maximal-ideal descriptors: one descriptor per component."""
    if not report.pi:
        return iter(())
    lists = [c.one_dim if one_dim_only else c.descriptors for c in report.components]
    return product(*lists)

