from itertools import product

import pytest
from hypothesis import given, strategies as st

from latpath.combinat import (
    binom,
    composition_rank,
    composition_unrank,
    compositions,
    count_compositions,
    exact_div,
    poly_pow,
)


def test_binom_outside_range_is_zero():
    assert binom(3, -1) == 0
    assert binom(3, 4) == 0
    assert binom(-1, 0) == 0
    assert binom(5, 2) == 10


def test_exact_div_refuses_remainder():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(13, 4)


@pytest.mark.parametrize("total,parts", [(0, 0), (0, 3), (2, 5), (4, 3), (5, 1)])
def test_compositions_match_bruteforce(total, parts):
    brute = sorted(c for c in product(range(total + 1), repeat=parts) if sum(c) == total)
    assert list(compositions(total, parts)) == brute
    assert count_compositions(total, parts) == len(brute)


def test_bounded_compositions_with_last_floor():
    got = list(compositions(5, 3, lo=1, hi=2, last_lo=2))
    assert got == [(1, 2, 2), (2, 1, 2)]
    assert count_compositions(5, 3, 1, 2) == 3


def test_large_composition_count():
    # compositions of 2 into 5 parts
    assert count_compositions(2, 5) == 15


@given(st.integers(0, 7), st.integers(1, 5))
def test_rank_unrank_roundtrip(total, parts):
    for i, comp in enumerate(compositions(total, parts)):
        assert composition_rank(comp) == i
        assert composition_unrank(total, parts, i) == comp


def test_unrank_out_of_range():
    with pytest.raises(IndexError):
        composition_unrank(2, 2, 3)
    assert composition_unrank(0, 0, 0) == ()


def test_poly_pow_truncates():
    assert poly_pow([1, 1], 3, 2) == [1, 3, 3]
    assert poly_pow([1, 1], 0, 2) == [1, 0, 0]
