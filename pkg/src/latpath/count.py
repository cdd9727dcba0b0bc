"""Exact counts of free and primary paths.

Notation: ``F(m, n)`` is the number of free paths from the origin to
``(n, -m)`` and ``P(m, n)`` the number of ``m``-primary ones.  Counts at
``n = 0`` follow the generating-function convention ``P(m, 0) = 1`` for
every ``m >= 0`` (one path of length zero), which is what the published
sequences start with.

Everything is exact big-integer arithmetic; a division that is supposed to
be exact raises ``ArithmeticError`` when it is not.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .combinat import binom, exact_div, poly_pow
from .steps import S, StepSet


class CountError(ValueError):
    pass


# ---------------------------------------------------------------- free paths


@lru_cache(maxsize=None)
def _free_column(S_: StepSet, n: int, top: int) -> Tuple[int, ...]:
    """``F(m, n)`` for ``m = -N*n .. top``."""
    N = S_.N
    lo = -N * n
    if top < lo:
        return ()
    if n == 0:
        if S_.has_vertical:
            return tuple(1 for _ in range(0, top + 1))
        return tuple(1 if m == 0 else 0 for m in range(0, top + 1))
    prev_lo = -N * (n - 1)
    prev = _free_column(S_, n - 1, top + N)
    col: List[int] = []
    for m in range(lo, top + 1):
        total = 0
        # last step S_k comes from F(m + k, n - 1)
        for i, value in enumerate(prev):
            if value and S(prev_lo + i - m) in S_:
                total += value
        if S_.has_vertical and col:
            total += col[-1]
        col.append(total)
    return tuple(col)


def count_free_rec(S_: StepSet, m: int, n: int) -> int:
    """``F(m, n)`` by the last-step recurrence, memoised per step set."""
    if n < 0 or m < -S_.N * n:
        return 0
    return _free_column(S_, n, m)[m + S_.N * n]


def step_polynomial(S_: StepSet, degree: int) -> List[int]:
    """Coefficients of ``sum_{S_k in S_} y^(N-k)`` up to ``degree``.

    For the infinite tail this is the truncated geometric series.
    """
    N = S_.N
    poly = [0] * (degree + 1)
    for k in S_.rises(floor=N - degree):
        if N - k <= degree:
            poly[N - k] += 1
    return poly


def count_free_coeff(S_: StepSet, m: int, n: int, with_vertical: Optional[bool] = None) -> int:
    """Coefficient extraction ``[y^(Nn+m)] (1-y)^-(n+1) * P(y)^n``.

    The ``(1-y)`` factor accounts for vertical steps; it is dropped when the
    set has none or when ``with_vertical=False``.
    """
    if with_vertical is None:
        with_vertical = S_.has_vertical
    if n < 0:
        return 0
    deg = S_.N * n + m
    if deg < 0:
        return 0
    body = poly_pow(step_polynomial(S_, deg), n, deg)
    if not with_vertical:
        return body[deg]
    # (1 - y)^-(n+1) has coefficients binom(n + j, j)
    return sum(binom(n + j, j) * body[deg - j] for j in range(deg + 1))


def count_free_convolution(S_: StepSet, m: int, n: int) -> int:
    """Sum over the number ``j`` of vertical steps of
    ``binom(n+j, j) * F_without_V(m - j, n)``."""
    if not S_.has_vertical:
        raise CountError("convolution form needs V in the step set")
    if n < 0:
        return 0
    total = 0
    for j in range(S_.N * n + m + 1):
        total += binom(n + j, j) * count_free_coeff(S_, m - j, n, with_vertical=False)
    return total


# ------------------------------------------------------------- primary paths


def count_primary(S_: StepSet, m: int, n: int) -> int:
    """``P(m, n)`` by a height-indexed transfer over columns.

    Independent of the free-path formulas; used as the generic primary
    counter.  ``P(m, 0) = 1`` by convention.
    """
    if m < 0 or n < 0:
        return 0
    if n == 0:
        return 1

    def advance(col: Dict[int, int]) -> Dict[int, int]:
        nxt: Dict[int, int] = {}
        for y, ways in col.items():
            for k in S_.rises(floor=-y):
                nxt[y + k] = nxt.get(y + k, 0) + ways
        return nxt

    def close(col: Dict[int, int]) -> Dict[int, int]:
        if not S_.has_vertical or not col:
            return col
        out: Dict[int, int] = {}
        acc = 0
        for y in range(max(col), -1, -1):
            acc += col.get(y, 0)
            out[y] = acc
        return out

    col = {0: 1}
    for _ in range(n - 1):
        col = close(advance(col))
    last = close(advance(col))
    if m == 0:
        return last.get(0, 0)
    total = sum(ways for y, ways in col.items() if S(-m - y) in S_)
    if m == 1 and S_.has_vertical:
        total += last.get(0, 0)
    return total


def count_primary1(S_: StepSet, n: int) -> int:
    """``P(1, n) = (F(1, n) - F(0, n)) / n`` with the division checked.

    Without ``V`` the subtracted term vanishes.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    diff = count_free_rec(S_, 1, n)
    if S_.has_vertical:
        diff -= count_free_rec(S_, 0, n)
    return exact_div(diff, n, f"P(1,{n})")


def count_primary1_coeff(S_: StepSet, n: int) -> int:
    """``P(1, n) = [y^(Nn+1)] (1-y)^-n P(y)^n / n``."""
    if not S_.has_vertical:
        raise CountError("this form needs V in the step set")
    if n == 0:
        return 1
    deg = S_.N * n + 1
    body = poly_pow(step_polynomial(S_, deg), n, deg)
    total = sum(binom(n - 1 + j, j) * body[deg - j] for j in range(deg + 1))
    return exact_div(total, n, f"P(1,{n})")


def count_primary1_convolution(S_: StepSet, n: int) -> int:
    if n < 1:
        raise CountError("needs n >= 1")
    if not S_.has_vertical:
        raise CountError("convolution form needs V in the step set")
    total = 0
    for j in range(S_.N * n + 2):
        total += binom(n + j - 1, j) * count_free_coeff(S_, 1 - j, n, with_vertical=False)
    return exact_div(total, n, f"P(1,{n}) convolution")


def count_primary0_K1(S_: StepSet, n: int) -> int:
    """``P(0, n)`` as the alternating sum of ``P(1, j)``, valid when the only
    down step is ``D_1``."""
    if not S_.is_finite or S_.downs != frozenset({1}) or not S_.has_vertical:
        raise CountError(f"alternating-sum formula needs downs == {{D1}} and V, got {S_}")
    return sum((-1) ** (n - j) * count_primary1(S_, j) for j in range(n + 1))


def count_primaryK(S_: StepSet, n: int) -> int:
    """``P(K, n) = P(0, n - 1)`` for finite sets with ``K >= 2``."""
    if not S_.is_finite or S_.K is None or S_.K < 2:
        raise CountError(f"needs a finite set with K >= 2, got {S_}")
    if n < 1:
        raise CountError("needs n >= 1")
    return count_primary(S_, 0, n - 1)


# ------------------------------------------------------ binomial closed forms


def binom_series_coeff(A: int, B: int, C: int, n: int) -> int:
    """``[z^n] (1 - z^A)^B / (1 - z)^C`` by the double binomial sum."""
    if A < 1 or B < 0 or C < 0 or n < 0:
        raise CountError("needs A >= 1, B, C, n >= 0")
    total = 0
    for k in range(n // A + 1):
        if C == 0:
            term = 1 if n == k * A else 0
        else:
            term = binom(C + n - k * A - 1, C - 1)
        total += (-1) ** k * binom(B, k) * term
    return total


CLOSED_FORMS = (
    "FreeA", "Prim1A", "FreeB", "Prim0B", "Prim1B",
    "FreeC", "Prim1C", "FreeD", "Prim1D", "Prim0D",
)


def _free_a(N: int, K: int, m: int, n: int) -> int:
    a = N + K + 1
    return sum(
        (-1) ** k * binom(n, k) * binom(n * (N + 2) - k * a + m, 2 * n)
        for k in range((N * n + m) // a + 1)
    )


def _prim1_a(N: int, K: int, n: int) -> int:
    a = N + K + 1
    total = sum(
        (-1) ** k * binom(n, k) * binom(n * (N + 2) - k * a, 2 * n - 1)
        for k in range((N * n + 1) // a + 1)
    )
    return exact_div(total, n, "Prim1 closed form")


def _prim1_d(N: int, K: int, n: int) -> int:
    total = sum(
        binom(n, k) * binom(n * (N + 1) - k * (N + K), n - 1)
        for k in range((N * n + 1) // (N + K) + 1)
    )
    return exact_div(total, n, "Prim1D closed form")


def family_closed_form(which: str, N: int = 1, K: int = 1, m: int = 0, n: int = 0) -> int:
    """Evaluate one of the per-family binomial sums.

    ``which`` is one of :data:`CLOSED_FORMS`.  Formulas hold for ``n >= 1``;
    the ``Prim0*`` forms also for ``n = 0``.
    """
    if which not in CLOSED_FORMS:
        raise CountError(f"unknown closed form {which!r}")
    if n < 1 and not which.startswith("Prim0"):
        raise CountError("closed forms need n >= 1")
    if which == "FreeA":
        return _free_a(N, K, m, n)
    if which == "Prim1A":
        return _prim1_a(N, K, n)
    if which == "FreeB":
        return sum(
            (-1) ** k * binom(n, k) * binom((N + 2) * (n - k) + m, 2 * n)
            for k in range((N * n + m) // (N + 2) + 1)
        )
    if which == "Prim1B":
        return exact_div(
            sum(
                (-1) ** k * binom(n, k) * binom((N + 2) * (n - k), 2 * n - 1)
                for k in range((N * n + 1) // (N + 2) + 1)
            ),
            n,
            "Prim1B closed form",
        )
    if which == "Prim0B":
        total = Fraction((-1) ** n)
        for j in range(1, n + 1):
            for k in range((N * j + 1) // (N + 2) + 1):
                total += Fraction(
                    (-1) ** (k + n - j) * binom(j, k) * binom((N + 2) * (j - k), 2 * j - 1), j
                )
        return _as_int(total)
    if which == "FreeC":
        return binom((N + 2) * n + m, 2 * n)
    if which == "Prim1C":
        return exact_div(binom((N + 2) * n, 2 * n - 1), n, "Prim1C closed form")
    if which == "FreeD":
        return sum(
            binom(n, k) * binom(n * (N + 1) - k * (N + K) + m, n)
            for k in range((N * n + m) // (N + K) + 1)
        )
    if which == "Prim1D":
        return _prim1_d(N, K, n)
    # Prim0D, stated for K = 1
    total = Fraction((-1) ** n)
    for j in range(1, n + 1):
        for k in range((N * j + 1) // (N + 1) + 1):
            total += Fraction(
                (-1) ** (n - j) * binom(j, k) * binom((N + 1) * (j - k), j - 1), j
            )
    return _as_int(total)


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return q.numerator


# -------------------------------------------------------------------- tables


@dataclass
class CountTable:
    """Counts indexed by ``(m, n)`` for one step set and one kind."""

    steps: StepSet
    kind: str
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def row(self, m: int) -> List[int]:
        return [v for (mm, _), v in sorted(self.entries.items(), key=lambda kv: kv[0][1]) if mm == m]


KINDS = ("free", "primary", "primary1", "weighted")


def count(S_: StepSet, kind: str, m: int, n: int) -> int:
    if kind == "free":
        return count_free_rec(S_, m, n)
    if kind == "primary":
        return count_primary(S_, m, n)
    if kind == "primary1":
        return count_primary1(S_, n)
    if kind == "weighted":
        from .bijection import weighted_count

        return 1 if n == 0 else weighted_count(S_, m, n)
    raise CountError(f"unknown kind {kind!r}")


def count_table(S_: StepSet, kind: str, ms: Iterable[int], ns: Iterable[int]) -> CountTable:
    table = CountTable(S_, kind)
    ns = list(ns)
    for m in ms:
        for n in ns:
            table.entries[(m, n)] = count(S_, kind, m, n)
    return table


__all__ = [
    "CountError", "CountTable", "CLOSED_FORMS", "KINDS",
    "binom_series_coeff", "count", "count_free_coeff", "count_free_convolution",
    "count_free_rec", "count_primary", "count_primary0_K1", "count_primary1",
    "count_primary1_coeff", "count_primary1_convolution", "count_primaryK",
    "count_table", "family_closed_form", "step_polynomial",
]

