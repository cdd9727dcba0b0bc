"""The free-path Riordan array and its Delannoy special case.

For a set with ``V`` the array ``(g, f)`` with ``g = 1/(1-y)`` and
``f = y/(1-y) * sum_{S_k} y^(N-k)`` has entries
``d[i][j] = |F(i - (N+1) j, j)|``.  For ``{V, U_1, U_0}`` these are the
Delannoy numbers ``D(j, i-j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .brute import enumerate_free
from .combinat import binom
from .count import count_primary, count_primary1, step_polynomial
from .series import TruncatedSeries
from .steps import Step, StepSet, make_family


class RiordanError(ValueError):
    pass


@dataclass(frozen=True)
class RiordanPair:
    g: TruncatedSeries
    f: TruncatedSeries
    rows: int
    matrix: Tuple[Tuple[int, ...], ...] = field(repr=False, default=())

    def __post_init__(self) -> None:
        if self.g[0] == 0 or self.f[0] != 0 or self.f[1] == 0:
            raise RiordanError("not a proper Riordan array")
        if not self.matrix:
            object.__setattr__(self, "matrix", _build(self.g, self.f, self.rows))

    def d(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.rows):
            raise RiordanError(f"cell ({i},{j}) outside the {self.rows}x{self.rows} block")
        return self.matrix[i][j]


def _build(g: TruncatedSeries, f: TruncatedSeries, rows: int) -> Tuple[Tuple[int, ...], ...]:
    cols: List[List[int]] = []
    col = g
    for _ in range(rows):
        cols.append(col.to_ints()[:rows])
        col = col * f
    return tuple(tuple(cols[j][i] for j in range(rows)) for i in range(rows))


def riordan_for(vset: StepSet, rows: int) -> RiordanPair:
    """The array for ``vset`` restricted to its top-left ``rows x rows`` block."""
    if rows < 1:
        raise RiordanError("rows must be >= 1")
    if not vset.has_vertical:
        raise RiordanError("the array is defined for sets with V")
    T = rows
    g = TruncatedSeries.geometric(T)
    f = TruncatedSeries(step_polynomial(vset, T), T).shift(1) * g
    return RiordanPair(g, f, rows)


def riordan_transform(vset: StepSet, a: Sequence[int], n: int) -> int:
    """``sum_k d[n][k] a_k``, checked against ``[y^n] g(y) A(f(y))``."""
    if len(a) < n + 1:
        raise RiordanError(f"need a_0..a_{n}, got {len(a)} terms")
    arr = riordan_for(vset, n + 1)
    matrix_side = sum(arr.d(n, k) * a[k] for k in range(n + 1))
    A = TruncatedSeries(a[: n + 1], n)
    g = TruncatedSeries(arr.g.coeffs[: n + 1], n)
    f = TruncatedSeries(arr.f.coeffs[: n + 1], n)
    series_side = (g * A.compose(f))[n]
    if series_side != matrix_side:
        raise ArithmeticError(f"transform mismatch at n={n}: {matrix_side} vs {series_side}")
    return matrix_side


# ------------------------------------------------------------------ Delannoy


def delannoy(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise RiordanError("n, k must be >= 0")
    return sum(binom(n, j) * binom(n + k - j, n) for j in range(k + 1))


def schroeder(n: int) -> int:
    """Large Schroeder number, as 1-primary paths over ``{V, U_1, U_0}``."""
    E = make_family("E")
    value = count_primary1(E, n)
    if value != count_primary(E, 0, n):
        raise ArithmeticError(f"1-primary and 0-primary counts differ at n={n}")
    return value


_DELANNOY_STEPS = {(1, 0), (0, 1), (1, 1)}


def delannoy_image(path: Sequence[Step]) -> List[Tuple[int, int]]:
    """Steps of the path after mapping lattice points ``(i, j) -> (i - j, i)``."""
    out = []
    for s in path:
        out.append((s.dx - s.dy, s.dx))
    return out


def check_coordinate_map(n: int, m: int) -> bool:
    """Every free ``{V,U_1,U_0}``-path to ``(n, n - m)`` maps to a distinct
    Delannoy path to ``(m, n)``, and there are ``D(n, m)`` of them."""
    E = make_family("E")
    images = set()
    for p in enumerate_free(E, m - n, n):
        img = tuple(delannoy_image(p))
        if not set(img) <= _DELANNOY_STEPS:
            return False
        end = (sum(dx for dx, _ in img), sum(dy for _, dy in img))
        if end != (m, n):
            return False
        images.add(img)
    return len(images) == delannoy(n, m)


__all__ = [
    "RiordanError", "RiordanPair", "check_coordinate_map", "delannoy",
    "delannoy_image", "riordan_for", "riordan_transform", "schroeder",
]
