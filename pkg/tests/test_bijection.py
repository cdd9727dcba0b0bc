from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from latpath.bijection import (
    BijectionError,
    WeightedPath,
    h_pairs,
    h_rank,
    h_size,
    h_unrank,
    map_f,
    map_g,
    path_weight_bounds,
    step_weight,
    weight_of_path,
    weighted_count,
)
from latpath.brute import enumerate_primary
from latpath.count import count_primary
from latpath.paths import parse_path
from latpath.steps import D, StepSet, U, companion_L, make_family

BIG = StepSet.parse("V,U6,U5,U4,U3,U2,U1,U0,D1,D2")
SETS = [
    make_family("A", 1, 2),
    make_family("B", 1),
    make_family("B", 2),
    make_family("D", 1, 1),
    make_family("D", 2, 3),
    make_family("E"),
    make_family("C", 1),
    StepSet.parse("V,U3,U0,D2"),
]


def test_h_size_example():
    assert h_size(BIG, 1, 4, 4) == 21
    pairs = list(h_pairs(BIG, 1, 4, 4))
    assert len(pairs) == 21 and len(set(pairs)) == 21
    assert (6, (0, 0, 1, 1, 0)) in pairs


@pytest.mark.parametrize("m,d,k", [(0, 0, 0), (0, 2, 3), (1, 1, 0), (1, 3, 2), (2, 1, 1), (3, 2, 0)])
def test_rank_unrank(m, d, k):
    for i, (h, lam) in enumerate(h_pairs(BIG, m, d, k), start=1):
        assert h_rank(BIG, m, d, k, h, lam) == i
        assert h_unrank(BIG, m, d, k, i) == (h, lam)
    with pytest.raises(BijectionError):
        h_unrank(BIG, m, d, k, h_size(BIG, m, d, k) + 1)
    with pytest.raises(BijectionError):
        h_unrank(BIG, m, d, k, 0)


@pytest.mark.parametrize("N", range(4))
def test_weight_table_single_down(N):
    # companion steps of {V, U_N..U_0, D_1}: the number of vertical-step
    # placements is forced by k once m is fixed
    B = make_family("B", N)
    assert step_weight(B, -1) == N + 2
    for k in range(N + 1):
        assert step_weight(B, k, 1, k + 1) == h_size(B, 1, k + 1, k)
        assert h_size(B, 1, k + 1, k) == sum(
            1 for _ in h_pairs(B, 1, k + 1, k)
        )


def test_weights_for_E():
    E = make_family("E")
    assert step_weight(E, 1, 1, 2) == 1
    assert step_weight(E, 0, 1, 1) == 3
    assert step_weight(E, -1) == 2


def test_deep_down_steps_weigh_one():
    Dset = make_family("D", 1, 2)
    # {V, U1, D2}: the companion down step D1 only has U1 above it
    assert step_weight(Dset, -2) == 1
    assert step_weight(Dset, -1) == 1


def test_fig1_image():
    wp = map_g(parse_path("U6 D2 U1 V D1 V U2 D1 V3 U1 V2"), BIG)
    assert str(wp.path) == "U4 D2 U0 D1 U0 D1 D1"
    assert wp.weights[0] == h_rank(BIG, 1, 4, 4, 6, (0, 0, 1, 1, 0))
    assert map_f(wp, BIG) == parse_path("U6 D2 U1 V D1 V U2 D1 V3 U1 V2")


@pytest.mark.parametrize("S", SETS, ids=str)
def test_g_then_f(S):
    for m in range(3):
        for n in range(1, 5):
            images = set()
            for p in enumerate_primary(S, m, n):
                wp = map_g(p, S)
                assert wp.path.endpoint() == p.endpoint()
                bounds = path_weight_bounds(wp.path, S)
                assert all(1 <= w <= b for w, b in zip(wp.weights, bounds))
                assert map_f(wp, S) == p
                images.add((wp.path, wp.weights))
            assert len(images) == count_primary(S, m, n)


@pytest.mark.parametrize("S", SETS, ids=str)
def test_f_then_g(S):
    L = companion_L(S)
    for m in range(3):
        for n in range(1, 4):
            total = 0
            for q in enumerate_primary(L, m, n):
                bounds = path_weight_bounds(q, S)
                for weights in product(*(range(1, b + 1) for b in bounds)):
                    wp = WeightedPath(q, weights)
                    p = map_f(wp, S)
                    assert p in S_paths(S, m, n)
                    assert map_g(p, S) == wp
                    total += 1
                assert weight_of_path(q, S) == len(list(product(*(range(1, b + 1) for b in bounds))))
            assert total == count_primary(S, m, n)


_cache = {}


def S_paths(S, m, n):
    key = (S, m, n)
    if key not in _cache:
        _cache[key] = set(enumerate_primary(S, m, n))
    return _cache[key]


@pytest.mark.parametrize("S", SETS, ids=str)
def test_weighted_count_matches(S):
    for m in range(4):
        assert [weighted_count(S, m, n) for n in range(1, 9)] == [count_primary(S, m, n) for n in range(1, 9)]


def test_weighted_count_length_zero():
    A = make_family("A", 1, 2)
    assert weighted_count(A, 0, 0) == 1
    assert weighted_count(A, 1, 0) == 0


def test_bad_inputs():
    A = make_family("A", 1, 2)
    with pytest.raises(BijectionError):
        map_g(parse_path("D1 U1"), A)
    with pytest.raises(BijectionError):
        map_g(parse_path("U2 D2"), A)
    with pytest.raises(BijectionError):
        map_f(WeightedPath(parse_path("U0 D1"), (99, 1)), A)
    with pytest.raises(BijectionError):
        WeightedPath(parse_path("U0 D1"), (1,))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2), st.integers(1, 6), st.data())
def test_random_roundtrip(m, n, data):
    S = make_family("A", 1, 2)
    paths = S_paths(S, m, n)
    if not paths:
        return
    p = data.draw(st.sampled_from(sorted(paths, key=str)))
    assert map_f(map_g(p, S), S) == p
