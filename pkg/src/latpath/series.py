"""Truncated power series and the functional-equation systems for the
primary-path generating functions ``P_m(x) = sum_n |P(m, n)| x^n``.

Each system has the form ``P_m = 1 + delta_m x + x * (...)`` where the bracket
only involves lower-order coefficients, so iterating the right-hand side
``T`` times from ``P_m = 1`` fixes all coefficients up to ``x^T`` exactly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Union

from .bijection import h_size, step_weight
from .combinat import compositions
from .count import count_free_rec, step_polynomial
from .steps import S, StepSet, companion_L, make_family

Number = Union[int, Fraction]


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    """Power series with exact rational coefficients, truncated after ``x^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int) -> None:
        c = [Fraction(v) for v in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs: List[Fraction] = c
        self.order = order

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def geometric(cls, order: int) -> "TruncatedSeries":
        """``1 / (1 - x)``."""
        return cls([1] * (order + 1), order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def __len__(self) -> int:
        return self.order + 1

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise SeriesError(f"order mismatch {self.order} vs {other.order}")
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, o.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        o = self._coerce(other)
        T = self.order
        out = [Fraction(0)] * (T + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(T + 1 - i):
                    out[i + j] += a * o.coeffs[j]
        return TruncatedSeries(out, T)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise SeriesError("series with zero constant term is not invertible")
        T = self.order
        out = [Fraction(0)] * (T + 1)
        out[0] = 1 / c0
        for n in range(1, T + 1):
            acc = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -acc / c0
        return TruncatedSeries(out, T)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return TruncatedSeries([a / other for a in self.coeffs], self.order)

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``x^k``."""
        return TruncatedSeries([0] * k + self.coeffs, self.order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        out = TruncatedSeries([0], self.order)
        # Horner from the top coefficient
        for a in reversed(self.coeffs):
            out = out * inner + a
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_ints(self) -> List[int]:
        if not self.is_integral():
            raise SeriesError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{shown}], order={self.order})"


# ----------------------------------------------------------------- systems


@dataclass(frozen=True)
class GFSystem:
    """Coefficients of one primary-path system.

    ``kind`` is ``"vertical"`` (unknowns are the GFs of a set with ``V``),
    ``"weighted"`` (same set, built from the companion steps and their
    weights) or ``"plain"`` (a vertical-free set, no weights).
    """

    steps: StepSet
    kind: str = "vertical"

    def __post_init__(self) -> None:
        if not self.steps.is_finite:
            raise SeriesError("the system needs a finite step set")
        if self.kind in ("vertical", "weighted") and not self.steps.has_vertical:
            raise SeriesError("vertical system needs V in the step set")
        if self.kind == "plain" and self.steps.has_vertical:
            raise SeriesError("plain system is for vertical-free sets")
        if self.kind not in ("vertical", "weighted", "plain"):
            raise SeriesError(f"unknown system kind {self.kind!r}")

    @property
    def K(self) -> int:
        if self.kind == "plain":
            return self.steps.K or 0
        return max(1, self.steps.K or 0)

    def delta(self, m: int) -> int:
        s = self.steps
        if self.kind == "plain":
            return int(S(-m) in s)
        if m in (0, 1):
            return len(s.steps_geq(-m))
        return int(S(-m) in s)

    def terms(self, m: int) -> List[tuple]:
        """``(coefficient, (m_1..m_d))`` pairs of the bracketed sum."""
        K = self.K
        out = []
        if self.kind == "plain":
            ks = [k for k in sorted(self.steps.ups) if k >= (1 if m == 0 else 0)]
            weight: Callable[[int, int], int] = lambda k, d: 1
        elif self.kind == "vertical":
            ks = [k for k in range(self.steps.N + 1) if k >= (1 if m == 0 else 0)]
            weight = lambda k, d: h_size(self.steps, m, d, k)
        else:
            L = companion_L(self.steps)
            ks = [k for k in sorted(L.ups) if k >= (1 if m == 0 else 0)]
            weight = lambda k, d: step_weight(self.steps, k, m, d)
        for k in ks:
            for d in range(1, k + m + 1):
                w = weight(k, d)
                if not w:
                    continue
                for comp in compositions(k + m, d, lo=1, hi=K, last_lo=max(m, 1)):
                    out.append((w, comp))
        return out


def _solve(sys: GFSystem, T: int) -> Dict[int, TruncatedSeries]:
    if T < 1:
        raise SeriesError("order must be >= 1")
    K = sys.K
    ms = range(0, K + 1)
    terms = {m: sys.terms(m) for m in ms}
    P = {m: TruncatedSeries.one(T) for m in ms}
    x = TruncatedSeries.x(T)
    for _ in range(T):
        nxt = {}
        for m in ms:
            acc = TruncatedSeries([0], T)
            for w, comp in terms[m]:
                prod = TruncatedSeries.one(T)
                for mj in comp:
                    prod = prod * (P[mj] - 1)
                acc = acc + prod * w
            if m == 0:
                nxt[m] = 1 + x * P[0] * sys.delta(0) + x * P[0] * acc
            else:
                nxt[m] = 1 + x * sys.delta(m) + x * acc
        P = nxt
    for m, ser in P.items():
        if not ser.is_integral():
            raise SeriesError(f"P_{m} has non-integer coefficients")
    return P


def solve_system(vset: StepSet, T: int) -> Dict[int, TruncatedSeries]:
    """``P_m`` for ``m = 0..max(1, K)`` of a finite set with ``V``, to ``x^T``."""
    return _solve(GFSystem(vset, "vertical"), T)


def solve_system_weighted(vset: StepSet, T: int) -> Dict[int, TruncatedSeries]:
    """Same unknowns, assembled from companion-set steps and step weights."""
    return _solve(GFSystem(vset, "weighted"), T)


def solve_system_N(nset: StepSet, T: int) -> Dict[int, TruncatedSeries]:
    """``P_m`` for a finite vertical-free set (no weights)."""
    if nset.K is None:
        raise SeriesError("a vertical-free system needs at least one down step")
    return _solve(GFSystem(nset, "plain"), T)


# ---------------------------------------------------------- free-path slices


def bivariate_row(vset: StepSet, n: int, D: int) -> TruncatedSeries:
    """``sum_m |F(m - N n, n)| y^m`` up to ``y^D``."""
    if n < 0:
        raise SeriesError("n must be >= 0")
    body = TruncatedSeries(step_polynomial(vset, D), D)
    out = body ** n
    if vset.has_vertical:
        out = out * TruncatedSeries.geometric(D) ** (n + 1)
    return out


def free_series(vset: StepSet, m: int, T: int) -> TruncatedSeries:
    return TruncatedSeries([count_free_rec(vset, m, n) for n in range(T + 1)], T)


# ---------------------------------------------------------- algebraic checks


class Relation(enum.Enum):
    CubicA12 = "CubicA12"
    CubicA12Printed = "CubicA12Printed"
    QuadB1_P0 = "QuadB1_P0"
    QuadB1_P1 = "QuadB1_P1"
    QuadD11_P0 = "QuadD11_P0"
    QuadD11_P1 = "QuadD11_P1"
    FreeB1_GFs = "FreeB1_GFs"
    FunctionalB1 = "FunctionalB1"
    ChainA12 = "ChainA12"


def _poly(coeffs: Sequence[int], T: int) -> TruncatedSeries:
    return TruncatedSeries(coeffs, T)


def residuals(relation: Union[Relation, str], T: int) -> List[TruncatedSeries]:
    """Left-minus-right of each polynomial identity behind ``relation``."""
    rel = Relation(relation) if isinstance(relation, str) else relation
    x = TruncatedSeries.x(T)
    if rel in (Relation.CubicA12, Relation.CubicA12Printed):
        P1 = solve_system(make_family("A", 1, 2), T)[1]
        # eliminating P0 and P2 gives +2x^2 in the linear coefficient;
        # the printed variant carries -2x^2 and is kept to show it fails
        sign = 1 if rel is Relation.CubicA12 else -1
        return [x * x * P1 ** 3 + 2 * x * (x - 1) * P1 ** 2 + (1 - x + sign * 2 * x * x) * P1 - 1]
    if rel in (Relation.QuadB1_P0, Relation.QuadB1_P1, Relation.FreeB1_GFs, Relation.FunctionalB1):
        sol = solve_system(make_family("B", 1), T)
        disc = _poly([1, -6, -3], T)
        if rel is Relation.QuadB1_P1:
            return [(1 - x - 2 * x * sol[1]) ** 2 - disc]
        if rel is Relation.QuadB1_P0:
            return [(1 - x - 2 * x * (1 + x) * sol[0]) ** 2 - disc]
        if rel is Relation.FunctionalB1:
            P0, P1 = sol[0], sol[1]
            # first-step decompositions written with N = 1
            return [P0 - 1 - x * P0 * (1 + P1), P1 - 1 - x * (1 + P1 + P1 ** 2)]
        B = make_family("B", 1)
        F0 = free_series(B, 0, T)
        F1 = free_series(B, 1, T)
        return [F0 * F0 * disc - 1, F1 - sol[1] * F0]
    if rel in (Relation.QuadD11_P0, Relation.QuadD11_P1):
        sol = solve_system(make_family("D", 1, 1), T)
        disc = _poly([1, -4, -4], T)
        if rel is Relation.QuadD11_P1:
            return [(1 - 2 * x * sol[1]) ** 2 - disc]
        return [(1 - 2 * x * (1 + x) * sol[0]) ** 2 - disc]
    if rel is Relation.ChainA12:
        sol = solve_system(make_family("A", 1, 2), T)
        return [
            sol[0] * (1 - x - x * sol[1]) - 1,
            sol[2] - 1 - x * sol[0],
        ]
    raise SeriesError(f"unknown relation {relation!r}")


def verify_algebraic(relation: Union[Relation, str], T: int = 12) -> bool:
    """True when every residual of ``relation`` vanishes to order ``T``."""
    if T < 8:
        raise SeriesError("use T >= 8")
    try:
        rel = Relation(relation) if isinstance(relation, str) else relation
    except ValueError:
        raise SeriesError(f"unknown relation {relation!r}") from None
    return all(r.is_zero() for r in residuals(rel, T))


__all__ = [
    "GFSystem", "Relation", "SeriesError", "TruncatedSeries", "bivariate_row",
    "free_series", "residuals", "solve_system", "solve_system_N",
    "solve_system_weighted", "verify_algebraic",
]
