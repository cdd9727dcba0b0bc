"""Named identity checks, run by ``latpath verify``.

Each check takes a step set and a size bound and returns ``True``/``False``,
or ``None`` when the identity does not apply to that set.
"""
from __future__ import annotations

from typing import Callable, Dict, Optional

from . import bijection, brute, count, riordan, series, stats
from .steps import U, StepSet, V, companion_L

Check = Callable[[StepSet, int], Optional[bool]]

REGISTRY: Dict[str, Check] = {}


def check(name: str) -> Callable[[Check], Check]:
    def deco(fn: Check) -> Check:
        REGISTRY[name] = fn
        return fn

    return deco


def _ms(S: StepSet):
    top = S.K if S.is_finite and S.K else 1
    return range(0, min(top, 3) + 1)


@check("free-recurrence-vs-coefficient")
def _free_rec_coeff(S: StepSet, max_n: int) -> bool:
    return all(
        count.count_free_rec(S, m, n) == count.count_free_coeff(S, m, n)
        for m in range(-1, 4) for n in range(max_n + 1)
    )


@check("free-convolution")
def _free_conv(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    return all(
        count.count_free_rec(S, m, n) == count.count_free_convolution(S, m, n)
        for m in range(0, 3) for n in range(max_n + 1)
    )


@check("free-vs-enumeration")
def _free_brute(S: StepSet, max_n: int) -> bool:
    return all(
        count.count_free_rec(S, m, n) == len(brute.enumerate_free(S, m, n, brute.EnumerationBudget.from_env()))
        for m in range(0, 3) for n in range(min(max_n, 5) + 1)
    )


@check("primary-vs-enumeration")
def _primary_brute(S: StepSet, max_n: int) -> bool:
    budget = brute.EnumerationBudget.from_env()
    return all(
        count.count_primary(S, m, n) == len(brute.enumerate_primary(S, m, n, budget))
        for m in _ms(S) for n in range(1, min(max_n, 5) + 1)
    )


@check("primary1-ratio")
def _p1_ratio(S: StepSet, max_n: int) -> bool:
    return all(count.count_primary1(S, n) == count.count_primary(S, 1, n) for n in range(max_n + 1))


@check("primary1-convolution")
def _p1_conv(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    return all(
        count.count_primary1_convolution(S, n) == count.count_primary(S, 1, n)
        for n in range(1, max_n + 1)
    )


@check("primary0-alternating-sum")
def _p0_alt(S: StepSet, max_n: int) -> Optional[bool]:
    if not (S.is_finite and S.downs == frozenset({1}) and S.has_vertical):
        return None
    return all(count.count_primary0_K1(S, n) == count.count_primary(S, 0, n) for n in range(max_n + 1))


@check("primaryK-shift")
def _pK(S: StepSet, max_n: int) -> Optional[bool]:
    if not (S.is_finite and S.K is not None and S.K >= 2):
        return None
    return all(count.count_primaryK(S, n) == count.count_primary(S, S.K, n) for n in range(1, max_n + 1))


@check("bijection-weighted-count")
def _bij_count(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    return all(
        bijection.weighted_count(S, m, n) == count.count_primary(S, m, n)
        for m in _ms(S) for n in range(1, max_n + 1)
    )


@check("bijection-roundtrip")
def _bij_roundtrip(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    budget = brute.EnumerationBudget.from_env()
    L = companion_L(S)
    for m in range(0, 3):
        for n in range(1, min(max_n, 4) + 1):
            paths = brute.enumerate_primary(S, m, n, budget)
            seen = set()
            for p in paths:
                wp = bijection.map_g(p, S)
                if bijection.map_f(wp, S) != p:
                    return False
                seen.add((wp.path, wp.weights))
            total = sum(bijection.weight_of_path(q, S) for q in brute.enumerate_primary(L, m, n, budget))
            if len(seen) != len(paths) or total != len(paths):
                return False
    return True


@check("census")
def _census(S: StepSet, max_n: int) -> bool:
    for n in range(1, min(max_n, 5) + 1):
        c = stats.census(S, n, brute.EnumerationBudget.from_env())
        if c.total != count.count_free_rec(S, 1, n):
            return False
        if any(c[s] != stats.census_prediction(S, s, n) for s in c.per_step):
            return False
    return True


@check("phi-roundtrip")
def _phi(S: StepSet, max_n: int) -> bool:
    for n in range(1, min(max_n, 4) + 1):
        for p in brute.enumerate_primary(S, 1, n):
            for s in set(p):
                for i in range(1, p.count(s) + 1):
                    if stats.phi_inverse(stats.phi(p, i, s), s) != (p, i):
                        return False
            for k in range(1, len(p) + 1):
                if stats.zeta(stats.psi(p, k)) != (p, k):
                    return False
    return True


@check("expectations")
def _expect(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    for n in range(1, min(max_n, 5) + 1):
        if stats.expected_vertical(S, n) != stats.empirical_mean(S, n, V):
            return False
        if stats.expected_steps(S, n) != stats.empirical_mean(S, n):
            return False
    return True


@check("riordan-cells")
def _riordan(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    rows = max_n + 1
    arr = riordan.riordan_for(S, rows)
    N = S.N
    return all(
        arr.d(i, j) == count.count_free_rec(S, i - (N + 1) * j, j)
        for i in range(rows) for j in range(rows)
    )


@check("riordan-transform")
def _transform(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.has_vertical:
        return None
    seqs = ([1] * (max_n + 1), list(range(1, max_n + 2)), [2 ** k for k in range(max_n + 1)])
    try:
        for a in seqs:
            for n in range(max_n + 1):
                riordan.riordan_transform(S, a, n)
    except ArithmeticError:
        return False
    return True


@check("series-vs-count")
def _series(S: StepSet, max_n: int) -> Optional[bool]:
    if not S.is_finite:
        return None
    if S.has_vertical:
        sol = series.solve_system(S, max_n)
        weighted = series.solve_system_weighted(S, max_n)
        if sol != weighted:
            return False
    elif S.K is None:
        return None
    else:
        sol = series.solve_system_N(S, max_n)
    return all(
        sol[m].to_ints() == [count.count_primary(S, m, n) for n in range(max_n + 1)]
        for m in sol
    )


@check("bivariate-row")
def _bivariate(S: StepSet, max_n: int) -> bool:
    D = 12
    for n in range(max_n + 1):
        row = series.bivariate_row(S, n, D).to_ints()
        if row != [count.count_free_rec(S, m - S.N * n, n) for m in range(D + 1)]:
            return False
    return True


@check("delannoy-expectation")
def _delannoy(S: StepSet, max_n: int) -> Optional[bool]:
    if S != StepSet(True, frozenset({0, 1})):
        return None
    for n in range(1, min(max_n, 5) + 1):
        exp = stats.delannoy_diag_expectation(n)
        if exp != stats.empirical_mean(S, n, U(0)) or exp != stats.delannoy_diag_expectation_sum(n):
            return False
    return all(
        riordan.schroeder(n) == count.count_primary(S, 1, n) for n in range(max_n + 1)
    )


def run_checks(S: StepSet, max_n: int, names=None) -> Dict[str, Optional[bool]]:
    names = list(REGISTRY) if not names else names
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown identity {unknown[0]!r}")
    return {name: REGISTRY[name](S, max_n) for name in names}


__all__ = ["REGISTRY", "run_checks"]
