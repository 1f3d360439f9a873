import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_orbit_size, series_times_one_plus_t
from orbitree import catalog
from orbitree.automaton import act_word
from orbitree.series import (
    Poly2,
    act_a,
    act_b,
    block_decomposition_holds,
    log_formula,
    one_then_zeros,
    orb1w,
    orb10,
    orb_a,
    orbit_matrix,
    orbit_size,
    orbit_size_automaton,
    series_to_word,
    verify_block_decomposition,
    word_to_series,
)

L = catalog.lamplighter()
binary_words = st.lists(st.integers(0, 1), min_size=1, max_size=24).map(tuple)


def test_poly2_basics():
    f = Poly2(0b1011, 3)
    assert f.bits == 0b011 and f.coefficients() == [1, 1, 0]
    assert str(f) == "1 + t" and str(Poly2(0, 4)) == "0"
    assert str(Poly2(0b101, 3)) == "1 + t^2"
    with pytest.raises(ValueError):
        Poly2(0, -1)


def test_word_series_roundtrip():
    assert word_to_series((1, 0, 1)).bits == 0b101
    assert series_to_word(word_to_series((0, 1, 1, 0))) == (0, 1, 1, 0)
    with pytest.raises(ValueError):
        word_to_series((0, 2))


@given(binary_words)
def test_action_matches_coefficient_oracle(w):
    f = word_to_series(w)
    expected_b = series_times_one_plus_t(list(w), len(w))
    assert list(series_to_word(act_b(f))) == expected_b
    expected_a = list(expected_b)
    expected_a[0] ^= 1
    assert list(series_to_word(act_a(f))) == expected_a


@pytest.mark.parametrize("m", range(0, 11))
def test_cross_model_exhaustive_short(m):
    for w in itertools.product((0, 1), repeat=m):
        f = word_to_series(w)
        assert act_word(L, L.word("a"), w) == series_to_word(act_a(f))
        assert act_word(L, L.word("b"), w) == series_to_word(act_b(f))


def test_frozen_formula_values():
    assert orb10(1) == (2, 2)
    assert [orb10(k)[1] for k in (1, 2, 3)] == [2, 4, 4]
    assert orb10(4) == (8, 8)
    assert log_formula(7) == 8 and log_formula(8) == 16
    with pytest.raises(ValueError):
        log_formula(0)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=13).map(tuple), st.integers(0, 3))
def test_formulas_against_brute_force(w, i):
    formula, computed = orb_a(w)
    assert formula == computed == orbit_size_automaton(L, L.word("a"), w)
    formula, computed = orb1w(i, w)
    assert formula == computed
    v = (0,) * i + (1,) + w
    assert computed == brute_orbit_size(lambda x: act_word(L, L.word("b"), x), v)


@pytest.mark.parametrize("n", range(0, 7))
def test_period(n):
    k = 2 ** (n + 1)
    assert orbit_size(one_then_zeros(k - 1), "b") == k


def test_orbit_matrix_models_agree_and_wrap():
    v = (1, 0, 1, 1, 0, 0, 1)
    series = orbit_matrix(v, "b", 20)
    automaton = orbit_matrix(v, L.word("b"), 20, automaton=L)
    assert np.array_equal(series, automaton)
    period = orbit_size(v, "b")
    assert np.array_equal(series[period], series[0])
    with pytest.raises(ValueError):
        orbit_matrix(v, "c", 3)
    with pytest.raises(ValueError):
        orbit_matrix(v, "b", 0)


def test_base_matrix():
    assert orbit_matrix((1, 0), "b", 2).tolist() == [[1, 0], [1, 1]]


@pytest.mark.parametrize("m", range(1, 11))
def test_additivity_exhaustive(m):
    rows = 2 * m
    unit = orbit_matrix(one_then_zeros(m - 1), "b", rows)
    shifted = [np.pad(unit, ((0, 0), (i, 0)))[:, :m] for i in range(m)]
    for w in itertools.product((0, 1), repeat=m):
        expected = np.zeros((rows, m), dtype=np.uint8)
        for i, bit in enumerate(w):
            if bit:
                expected ^= shifted[i]
        assert np.array_equal(orbit_matrix(w, "b", rows), expected)


@pytest.mark.parametrize("n", range(0, 5))
def test_block_decomposition(n):
    assert verify_block_decomposition(n)


def test_block_decomposition_detects_changes():
    small = orbit_matrix(one_then_zeros(3), "b", 4)
    big = orbit_matrix(one_then_zeros(7), "b", 8)
    assert block_decomposition_holds(big, small)
    broken = big.copy()
    broken[1, 6] ^= 1
    assert not block_decomposition_holds(broken, small)
    assert not block_decomposition_holds(big[:6], small)


def test_words_as_series():
    assert str(word_to_series((1,) + (0,) * 5)) == "1"
    assert str(word_to_series((1, 1))) == "1 + t"
    assert word_to_series((0,) * 6).bits == 0
