"""Acceptance criteria 1-10, exact integer/rational comparisons.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""
from fractions import Fraction
from itertools import product

import pytest

from latpath import bijection, brute, count, riordan, series, stats
from latpath.steps import U, V, companion_L, make_family

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script
    ACCEPTANCE = {}

A12 = make_family("A", 1, 2)
B1 = make_family("B", 1)
D11 = make_family("D", 1, 1)
E = make_family("E")

PRINTED_A = {
    ("free", 0): [1, 3, 15, 84, 491, 2948, 18018, 111520, 696739],
    ("free", 1): [1, 6, 35, 207, 1251, 7678, 47658, 298371, 1880659],
    ("primary", 0): [1, 2, 7, 30, 142, 716, 3771, 20502, 114194, 648276],
    ("primary", 1): [1, 3, 10, 41, 190, 946, 4940, 26693, 147990, 837102],
    ("primary", 2): [1, 1, 2, 7, 30, 142, 716, 3771, 20502, 114194, 648276],
}
PRINTED_B = {
    ("free", 0): [1, 3, 15, 81, 459, 2673, 15849, 95175, 576963],
    ("free", 1): [1, 6, 33, 189, 1107, 6588, 39663, 240894],
    ("primary", 0): [1, 2, 7, 29, 133, 650, 3319, 17498, 94525],
    ("primary", 1): [1, 3, 9, 36, 162, 783, 3969, 20817, 112023],
}
PRINTED_C_P1 = [
    [1, 2, 2, 2, 2, 2, 2, 2],
    [1, 3, 10, 42, 198, 1001, 5304, 29070],
    [1, 4, 28, 264, 2860, 33592, 416024, 5348880],
    [1, 5, 60, 1001, 19380, 408595, 9104550, 210905400],
]
PRINTED_C_F0 = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 3, 15, 84, 495, 3003, 18564, 116280],
    [1, 6, 70, 924, 12870, 184756, 2704156, 40116600],
    [1, 10, 210, 5005, 125970, 3268760, 86493225, 2319959400],
]
PRINTED_D = {
    ("free", 0): [1, 2, 8, 32, 136, 592, 2624, 11776, 53344, 243392],
    ("free", 1): [1, 4, 16, 68, 296, 1312, 5888, 26672, 121696],
    ("primary", 0): [1, 1, 3, 9, 31, 113, 431, 1697, 6847, 28161, 117631],
    ("primary", 1): [1, 2, 4, 12, 40, 144, 544, 2128, 8544, 35008, 145792],
}


def _mismatches(S, printed):
    bad = []
    for (kind, m), want in printed.items():
        got = [count.count(S, kind, m, n) for n in range(len(want))]
        if got != want:
            bad.append(f"{kind}({m},n): {got}")
    return bad


def _sequences(S, printed, label):
    bad = _mismatches(S, printed)
    n_vals = sum(len(v) for v in printed.values())
    if bad:
        return False, f"{label}: mismatch " + "; ".join(bad)
    return True, f"{label}: {len(printed)} printed sequences, {n_vals} values match"


def criterion_1():
    return _sequences(A12, PRINTED_A, "A(1,2)")


def criterion_2():
    return _sequences(B1, PRINTED_B, "B(1)")


def criterion_3():
    p1 = [[count.count_primary(make_family("C", N), 1, n) for n in range(8)] for N in range(4)]
    f0 = [[count.count_free_rec(make_family("C", N), 0, n) for n in range(8)] for N in range(4)]
    ok = p1 == PRINTED_C_P1 and f0 == PRINTED_C_F0
    return ok, f"C(N), N=0..3, n=0..7: both 4x8 arrays {'match' if ok else 'differ'}, P(1,7) at N=3 is {p1[3][7]}"


def criterion_4():
    return _sequences(D11, PRINTED_D, "D(1,1)")


def _coefficient(S, m, n, sol):
    if m == 1:
        return count.count_primary1_coeff(S, n)
    return sol[m][n] if m in sol else 0


def _roundtrips(S, m, n, paths):
    images = set()
    for p in paths:
        wp = bijection.map_g(p, S)
        if bijection.map_f(wp, S) != p:
            return False
        images.add((wp.path, wp.weights))
    if len(images) != len(paths):
        return False
    target = set(paths)
    total = 0
    for q in brute.enumerate_primary(companion_L(S), m, n):
        bounds = bijection.path_weight_bounds(q, S)
        for weights in product(*(range(1, b + 1) for b in bounds)):
            wp = bijection.WeightedPath(q, weights)
            p = bijection.map_f(wp, S)
            if p not in target or bijection.map_g(p, S) != wp:
                return False
            total += 1
    return total == len(paths)


def criterion_5():
    checked = 0
    for S in (A12, B1, D11, E):
        sol = series.solve_system(S, 5)
        for m in range(3):
            for n in range(1, 6):
                paths = brute.enumerate_primary(S, m, n)
                values = {
                    len(paths),
                    count.count_primary(S, m, n),
                    _coefficient(S, m, n, sol),
                    bijection.weighted_count(S, m, n),
                }
                if len(values) != 1:
                    return False, f"{S} m={m} n={n}: {values}"
                if not _roundtrips(S, m, n, paths):
                    return False, f"{S} m={m} n={n}: round trip failed"
                checked += 1
    return True, f"weighted count = oracle = recurrence = coefficients, g/f round trips, {checked} (set,m,n) cases"


def criterion_6():
    for S in (B1, D11, E):
        for n in range(7):
            f0 = count.count_free_rec(S, 0, n)
            f1 = count.count_free_rec(S, 1, n)
            p1 = count.count_primary(S, 1, n)
            if n * p1 != f1 - f0:
                return False, f"{S} n={n}: n*P1 != F1-F0"
            if count.count_free_convolution(S, 1, n) != f1 or count.count_free_convolution(S, 0, n) != f0:
                return False, f"{S} n={n}: free convolution"
            if n and count.count_primary1_convolution(S, n) != p1:
                return False, f"{S} n={n}: primary convolution"
            if n:
                c = stats.census(S, n)
                if c.total != f1 or c[V] != f0:
                    return False, f"{S} n={n}: census totals"
                if any(c[s] != stats.census_prediction(S, s, n) for s in c.per_step):
                    return False, f"{S} n={n}: per-step census"
    return True, "ratio, both convolutions and step census exact for n<=6 on B(1), D(1,1), E"


def criterion_7():
    for N in range(3):
        C = make_family("C", N)
        for n in range(1, 6):
            ev = stats.empirical_mean(C, n, V)
            es = stats.empirical_mean(C, n)
            if ev != Fraction(N * n + 1, 2) or es != Fraction((N + 2) * n + 1, 2):
                return False, f"C({N}) n={n}: {ev}, {es}"
            if stats.expected_vertical(C, n) != ev or stats.expected_steps(C, n) != es:
                return False, f"C({N}) n={n}: expectation formulas"
    for n in range(1, 6):
        if stats.delannoy_diag_expectation(n) != stats.empirical_mean(E, n, U(0)):
            return False, f"Delannoy expectation n={n}"
    return True, "C(N) means (Nn+1)/2, ((N+2)n+1)/2 for N<=2, n<=5; E mean U0 count for n<=5"


def criterion_8():
    for S in (B1, E):
        arr = riordan.riordan_for(S, 9)
        for i, j in product(range(9), repeat=2):
            if arr.d(i, j) != count.count_free_rec(S, i - (S.N + 1) * j, j):
                return False, f"{S} cell ({i},{j})"
    arr = riordan.riordan_for(E, 9)
    for i, j in product(range(9), repeat=2):
        want = riordan.delannoy(j, i - j) if i >= j else 0
        if arr.d(i, j) != want:
            return False, f"E cell ({i},{j}) is not Delannoy"
    seqs = ([1] * 9, list(range(1, 10)), [2 ** k for k in range(9)])
    try:
        for S in (B1, E):
            for a in seqs:
                for n in range(9):
                    riordan.riordan_transform(S, a, n)
    except ArithmeticError as exc:
        return False, str(exc)
    return True, "cells for i,j<=8 on B(1), E; E array is Delannoy; transform for 3 sequences"


FINITE = [A12, make_family("A", 2, 2), B1, make_family("B", 2), D11, make_family("D", 2, 3), E]
RELATIONS = [
    series.Relation.CubicA12,
    series.Relation.QuadB1_P0,
    series.Relation.QuadB1_P1,
    series.Relation.QuadD11_P0,
    series.Relation.QuadD11_P1,
    series.Relation.FreeB1_GFs,
]


def criterion_9():
    for S in FINITE:
        sol = series.solve_system(S, 10)
        for m, ser in sol.items():
            if ser.to_ints() != [count.count_primary(S, m, n) for n in range(11)]:
                return False, f"{S} m={m}: series differs from counts"
    failed = [r.value for r in RELATIONS if not series.verify_algebraic(r, 12)]
    if failed:
        return False, f"residuals do not vanish: {failed}"
    printed = series.verify_algebraic(series.Relation.CubicA12Printed, 12)
    note = "" if printed else " (NOTE: the cubic as printed, with -2x^2, does not vanish; +2x^2 is used)"
    return True, f"series = counts to order 10 on {len(FINITE)} sets; {len(RELATIONS)} relations vanish to order 12" + note


def criterion_10():
    ok = series.verify_algebraic(series.Relation.CubicA12, 12)
    return ok, "trigonometric closed form accepted through its defining cubic, no numeric evaluation"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, text = CRITERIA[number]()
    ACCEPTANCE[number] = (ok, text)
    assert ok, text


if __name__ == "__main__":
    for number, fn in CRITERIA.items():
        ok, text = fn()
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
