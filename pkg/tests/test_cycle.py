import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkmonoid.cycle import (
    AffineMap,
    all_idempotents,
    classify_level,
    f_map,
    generator_map,
    idempotent_for_subset,
    infiniteness_witness,
    snqi_word,
    support,
)
from hkmonoid.errors import WordError
from hkmonoid.graph import cycle_graph
from hkmonoid.rewriting import are_equal, relations


def evaluate(word, m):
    """Apply f(word) to the tuple m directly: rightmost letter first."""
    m = list(m)
    n = len(m)
    for letter in reversed(word):
        if letter < n:
            m[letter - 1] = m[letter]
        else:
            m[n - 1] = m[0] + 1
    return tuple(m)


def words(n, max_len):
    return st.lists(st.integers(1, n), max_size=max_len).map(tuple)


# --- snqi and idempotents -----------------------------------------------------

def test_snqi_examples():
    assert snqi_word(3, 0) == (3, 2, 1)
    assert snqi_word(3, 1) == (3, 1, 2)
    assert snqi_word(4, 1) == (4, 1, 3, 2)
    assert snqi_word(5, 3) == (5, 1, 2, 3, 4)


@pytest.mark.parametrize("n, i", [(3, -1), (3, 2), (2, 0)])
def test_snqi_range(n, i):
    with pytest.raises(WordError):
        snqi_word(n, i)


def test_idempotent_for_subset_examples():
    assert idempotent_for_subset(3, {1, 2}).word == (1, 2)
    assert idempotent_for_subset(3, {1, 3}).word == (3, 1)
    assert idempotent_for_subset(5, {1, 2, 4, 5}).word == (4, 5, 1, 2)
    assert idempotent_for_subset(4, set()).word == ()
    assert idempotent_for_subset(6, {2, 3, 5}).word == (2, 3, 5)


def test_idempotent_for_full_set_rejected():
    with pytest.raises(WordError):
        idempotent_for_subset(3, {1, 2, 3})


def test_c3_idempotent_set():
    got = {i.word for i in all_idempotents(3)}
    assert got == {(), (1,), (2,), (3,), (1, 2), (2, 3), (3, 1)}


@pytest.mark.parametrize("n", range(3, 9))
def test_all_idempotents_count(n):
    idems = all_idempotents(n)
    assert len(idems) == 2**n - 1
    assert len({i.subset for i in idems}) == 2**n - 1
    for i in idems:
        assert set(i.word) == i.subset and len(i.word) == len(i.subset)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_all_idempotents_are_idempotent(n):
    g = cycle_graph(n)
    for idem in all_idempotents(n):
        verdict = are_equal(idem.word + idem.word, idem.word, g)
        assert verdict.equal, (idem.word, verdict)
        assert f_map(idem.word * 2, n) == f_map(idem.word, n)


# --- the affine representation ---------------------------------------------

def test_f_map_examples():
    assert f_map((3, 2, 1), 3) == AffineMap((2, 3, 2), (0, 0, 1))
    assert f_map((3, 1, 2), 3) == AffineMap((3, 3, 3), (0, 0, 1))
    assert f_map((), 4) == AffineMap.identity(4)
    assert str(f_map((3, 2, 1), 3)) == "[src=(2,3,2); off=(0,0,1)]"


def test_f_map_examples_against_tuple_oracle():
    rng = random.Random(5)
    for w in [(3, 2, 1), (3, 1, 2)]:
        for _ in range(5):
            m = tuple(rng.randint(-50, 50) for _ in range(3))
            assert f_map(w, 3)(m) == evaluate(w, m)
    m2, m3 = 11, -4
    assert f_map((3, 2, 1), 3)((7, m2, m3)) == (m2, m3, m2 + 1)
    assert f_map((3, 1, 2), 3)((7, 9, m3)) == (m3, m3, m3 + 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), words(n, 10))),
       st.lists(st.integers(-100, 100), min_size=6, max_size=6))
def test_f_map_matches_tuple_oracle(nw, m):
    n, w = nw
    assert f_map(w, n)(tuple(m[:n])) == evaluate(w, m[:n])


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), words(n, 8), words(n, 8))))
def test_f_map_is_homomorphism(nuv):
    n, u, v = nuv
    assert f_map(u + v, n) == f_map(u, n).compose(f_map(v, n))


@pytest.mark.parametrize("n", range(3, 7))
def test_f_map_preserves_relations(n):
    for lhs, rhs in relations(cycle_graph(n)).pairs:
        assert f_map(lhs, n) == f_map(rhs, n)


def test_generator_map_shape():
    assert generator_map(1, 3) == AffineMap((2, 2, 3), (0, 0, 0))
    assert generator_map(3, 3) == AffineMap((1, 2, 1), (0, 0, 1))
    with pytest.raises(WordError):
        generator_map(4, 3)


# --- support ------------------------------------------------------------------

def test_support_examples():
    assert support(AffineMap.identity(3)) == {1, 2, 3}
    assert support(f_map((3, 1, 2), 3)) == {3}


def depends_on(w, n):
    """Coordinates whose perturbation changes the output (oracle for supp)."""
    base = tuple(range(0, 10 * n, 10))
    out = evaluate(w, base)
    dep = set()
    for k in range(n):
        moved = list(base)
        moved[k] += 1
        if evaluate(w, moved) != out:
            dep.add(k + 1)
    return dep


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), words(n, 10))))
def test_support_is_dependency_set(nw):
    n, w = nw
    assert support(f_map(w, n)) == depends_on(w, n)


def distinct_letter_hypothesis(w, n):
    return all(
        0 < w[l] - w[j] < n - 1 or w[j] - w[l] >= 2
        for j, l in combinations(range(len(w)), 2)
    )


@pytest.mark.parametrize("n", [3, 4, 5])
def test_support_formula_exhaustive(n):
    checked = 0
    for k in range(1, n + 1):
        for w in permutations(range(1, n + 1), k):
            if distinct_letter_hypothesis(w, n):
                assert support(f_map(w, n)) == set(range(1, n + 1)) - set(w)
                checked += 1
    assert checked > 0


@pytest.mark.parametrize("n", range(3, 9))
def test_idempotent_support_size(n):
    for idem in all_idempotents(n):
        assert distinct_letter_hypothesis(idem.word, n)
        assert len(support(f_map(idem.word, n))) == n - len(idem.subset)


# --- levels -------------------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 9))
def test_idempotent_levels(n):
    for idem in all_idempotents(n):
        lvl = classify_level(idem.word, n)
        if len(idem.subset) >= 2:
            assert lvl.level == len(idem.subset) - 2
        else:
            assert lvl.is_top


@pytest.mark.parametrize("n", range(3, 9))
def test_generators_are_top(n):
    for i in range(1, n + 1):
        lvl = classify_level((i,), n)
        assert lvl.is_top and lvl.support_size == n - 1


@pytest.mark.parametrize("k", range(1, 8))
def test_powers_of_t_sit_at_level_zero(k):
    lvl = classify_level((3, 1, 2) * k, 3)
    assert lvl.support_size == 1
    assert lvl.level == 0


def test_level_text():
    assert str(classify_level((3, 1, 2), 3)) == "0 (|supp|=1)"
    assert str(classify_level((1,), 3)) == "top (|supp|=2)"


@settings(max_examples=80, deadline=None)
@given(words(3, 6), words(3, 6))
def test_classify_consistent_with_equality(u, v):
    if are_equal(u, v, cycle_graph(3), budget=5_000).equal:
        assert classify_level(u, 3) == classify_level(v, 3)


# --- infiniteness -------------------------------------------------------------

def test_powers_of_t_closed_form():
    t = f_map((3, 1, 2), 3)
    power = t
    for k in range(1, 20):
        assert power == AffineMap((3, 3, 3), (k - 1, k - 1, k))
        power = power.compose(t)


@pytest.mark.parametrize("n, i, kmax", [(3, 1, 10), (3, 0, 10), (5, 2, 6)])
def test_infiniteness_examples(n, i, kmax):
    assert infiniteness_witness(n, i, kmax)


def test_infiniteness_kmax_checked():
    with pytest.raises(ValueError):
        infiniteness_witness(3, 0, 1)
