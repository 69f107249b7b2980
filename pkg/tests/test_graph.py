from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkmonoid.errors import GraphError, GraphParseError
from hkmonoid.graph import (
    ComponentKind,
    OrientedGraph,
    acyclic_full_subgraphs,
    components,
    cycle_graph,
    cycle_order,
    cyclic_core,
    is_pi,
    parse_graph,
    path_graph,
)


def G(n, *arrows):
    return OrientedGraph(n, frozenset(arrows))


def disjoint_cycles(*lengths):
    arrows, start = [], 1
    for k in lengths:
        vs = list(range(start, start + k))
        arrows += [(vs[i], vs[(i + 1) % k]) for i in range(k)]
        start += k
    return G(start - 1, *arrows)


@st.composite
def simple_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    arrows = []
    for i, j in pairs:
        choice = draw(st.sampled_from([None, "fwd", "back"]))
        if choice == "fwd":
            arrows.append((i, j))
        elif choice == "back":
            arrows.append((j, i))
    return OrientedGraph(n, frozenset(arrows))


# --- parsing ---------------------------------------------------------------

def test_parse_c3():
    g = parse_graph("3\n1 -> 2\n2 -> 3\n3 -> 1")
    assert g == cycle_graph(3)
    assert len(g.arrows) == 3


def test_parse_acyclic_a2():
    g = parse_graph("2\n1 -> 2")
    assert g.n == 2 and g.arrows == {(1, 2)}


def test_parse_rejects_double_arrow_with_line_number():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("2\n1 -> 2\n2 -> 1")
    assert exc.value.lineno == 3
    assert "double arrow" in str(exc.value)


@pytest.mark.parametrize("text, line", [
    ("3\n1 -> 1", 2),
    ("3\n1 => 2", 2),
    ("3\n1 -> 2\n\n# c\n1 -> x", 5),
    ("three\n1 -> 2", 1),
    ("2\n1 -> 3", 2),
    ("3\n1 -> 2\n1 -> 2", 3),
])
def test_parse_errors(text, line):
    with pytest.raises(GraphParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == line


def test_parse_crlf_comments_and_implicit_count():
    g = parse_graph("# a comment\r\n1 -> 2\r\n\r\n2 -> 4\r\n")
    assert g.n == 4 and g.arrows == {(1, 2), (2, 4)}


def test_text_round_trip():
    g = disjoint_cycles(3, 4)
    assert parse_graph(g.to_text()) == g


def test_constructor_enforces_simplicity():
    with pytest.raises(GraphError):
        G(2, (1, 2), (2, 1))
    with pytest.raises(GraphError):
        G(2, (1, 1))
    with pytest.raises(GraphError):
        G(2, (1, 3))


# --- PI criterion ----------------------------------------------------------

def test_is_pi_examples():
    assert is_pi(cycle_graph(3))
    joined = disjoint_cycles(3, 3)
    joined = G(6, *joined.arrows, (1, 4))
    assert not is_pi(joined)
    assert is_pi(path_graph(5))
    assert is_pi(G(4, (1, 2), (1, 3), (3, 4), (2, 4)))


def pi_oracle(g):
    """Not PI iff two distinct oriented cycles are joined by a (possibly empty) oriented path."""
    Gx = g.to_networkx()
    cycles = [frozenset(c) for c in nx.simple_cycles(Gx)]
    for c1 in cycles:
        reach = set(c1)
        for v in c1:
            reach |= nx.descendants(Gx, v)
        for c2 in cycles:
            if c2 != c1 and reach & c2:
                return False
    return True


@settings(max_examples=300, deadline=None)
@given(simple_graphs())
def test_is_pi_matches_cycle_pair_oracle(g):
    assert is_pi(g) == pi_oracle(g)


@pytest.mark.parametrize("n", range(6, 9))
def test_joining_two_cycles_by_a_path_breaks_pi(n):
    # cycles on 1..3 and on 4..6, plus a tail of isolated vertices up to n
    base = disjoint_cycles(3, 3)
    g = OrientedGraph(n, base.arrows)
    assert is_pi(g)
    if n >= 7:
        g2 = OrientedGraph(n, base.arrows | {(2, 7), (7, 5)})
    else:
        g2 = OrientedGraph(n, base.arrows | {(2, 5)})
    assert not is_pi(g2)


# --- cyclic core and components -------------------------------------------

def test_cyclic_core_examples():
    c3 = cycle_graph(3)
    assert cyclic_core(c3) == c3
    assert cyclic_core(path_graph(4)).arrows == frozenset()
    pendant = G(4, *c3.arrows, (1, 4))
    core = cyclic_core(pendant)
    assert core.arrows == c3.arrows
    assert components(core) == [((1, 2, 3), ComponentKind("Cycle", 3)), ((4,), ComponentKind("Singleton"))]


@settings(max_examples=200, deadline=None)
@given(simple_graphs())
def test_cyclic_core_idempotent(g):
    core = cyclic_core(g)
    assert cyclic_core(core) == core


@settings(max_examples=200, deadline=None)
@given(simple_graphs())
def test_pi_graphs_have_singleton_or_cycle_components(g):
    if is_pi(g):
        assert all(k.tag in ("Singleton", "Cycle") for _, k in components(cyclic_core(g)))


def test_components_examples():
    assert [str(k) for _, k in components(cyclic_core(path_graph(4)))] == ["Singleton"] * 4
    assert [str(k) for _, k in components(disjoint_cycles(3, 4))] == ["Cycle(3)", "Cycle(4)"]
    # two cycles 1-2-3 and 1-3-4 share the arrow 3 -> 1
    theta = G(4, (1, 2), (2, 3), (3, 1), (1, 4), (4, 3))
    kinds = [k.tag for _, k in components(cyclic_core(theta))]
    assert "Other" in kinds
    assert not is_pi(theta)


# --- acyclic full subgraphs ------------------------------------------------

def test_acyclic_subgraphs_of_acyclic_graph():
    g = G(4, (1, 2), (2, 3), (1, 4))
    assert len(list(acyclic_full_subgraphs(g))) == 16


@pytest.mark.parametrize("n", range(3, 13))
def test_acyclic_subgraphs_of_cycle(n):
    subsets = list(acyclic_full_subgraphs(cycle_graph(n)))
    assert len(subsets) == 2**n - 1
    assert frozenset(range(1, n + 1)) not in subsets


def test_acyclic_subgraphs_single_vertex_order():
    assert list(acyclic_full_subgraphs(G(1))) == [frozenset(), frozenset({1})]


def test_cycle_order():
    assert cycle_order(cycle_graph(4)) == (1, 2, 3, 4)
    assert cycle_order(G(3, (1, 3), (3, 2), (2, 1))) == (1, 3, 2)
    assert cycle_order(path_graph(3)) is None
    assert cycle_order(disjoint_cycles(3, 3)) is None
