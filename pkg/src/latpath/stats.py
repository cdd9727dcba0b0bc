"""Step-occurrence totals over 1-primary paths and the maps behind them.

``phi`` cuts a 1-primary path at one occurrence of a chosen step and swaps
the two halves; ``psi`` rotates a 1-primary path.  Their inverses locate the
cut with the cycle lemma (a word of integers summing to -1 has exactly one
rotation whose proper prefix sums are all nonnegative).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .brute import DEFAULT_BUDGET, EnumerationBudget, enumerate_primary
from .combinat import binom
from .count import count_free_rec
from .paths import Path, endpoint, is_primary
from .steps import Step, StepSet


class StatsError(ValueError):
    pass


@dataclass
class StepCensus:
    """Occurrence totals per step over all 1-primary paths of length ``n``."""

    n: int
    per_step: Dict[Step, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.per_step.values())

    def __getitem__(self, step: Step) -> int:
        return self.per_step.get(step, 0)

    def expected(self, step: Step, paths: int) -> Fraction:
        return Fraction(self[step], paths)


def census(S_: StepSet, n: int, budget: EnumerationBudget = DEFAULT_BUDGET) -> StepCensus:
    """Count step occurrences over ``P(1, n)`` by enumeration."""
    if n < 1:
        raise StatsError("census needs n >= 1")
    out = StepCensus(n)
    for p in enumerate_primary(S_, 1, n, budget):
        for s in p:
            out.per_step[s] = out.per_step.get(s, 0) + 1
    return out


def census_prediction(S_: StepSet, step: Step, n: int) -> int:
    """Occurrence total predicted from free-path counts."""
    if step.is_vertical:
        return count_free_rec(S_, 0, n)
    return count_free_rec(S_, 1 + step.rise, n - 1)


# ------------------------------------------------------------------ phi


def _occurrences(p: Sequence[Step], step: Step) -> list:
    return [i for i, s in enumerate(p) if s == step]


def phi(p: Sequence[Step], occurrence_index: int, step: Step) -> Path:
    """Remove the ``occurrence_index``-th (1-based) ``step`` of ``p`` and
    return the right part followed by the left part."""
    p = Path(p)
    if not is_primary(p) or endpoint(p)[1] != -1:
        raise StatsError(f"{p} is not 1-primary")
    occ = _occurrences(p, step)
    if not 1 <= occurrence_index <= len(occ):
        raise StatsError(f"{step} occurs {len(occ)} times, index {occurrence_index} out of range")
    i = occ[occurrence_index - 1]
    return p[i + 1:] + p[:i]


def _leftmost_min(p: Sequence[Step]) -> int:
    """Number of steps before the left-most lowest point (0 = start)."""
    heights = Path(p).heights()
    low = min(heights)
    return heights.index(low)


def phi_inverse(free: Sequence[Step], step: Step) -> Tuple[Path, int]:
    free = Path(free)
    cut = _leftmost_min(free)
    beta, alpha = free[:cut], free[cut:]
    p = alpha + (step,) + beta
    if not is_primary(p) or endpoint(p)[1] != -1:
        raise StatsError(f"{free} is not in the image of phi for {step}")
    return p, sum(1 for s in alpha if s == step) + 1


# ----------------------------------------------------- rotations / cycle lemma


def raney_shift(b: Sequence[int]) -> int:
    """Start index of the unique rotation of ``b`` whose proper prefix sums
    are nonnegative.  ``sum(b)`` must be -1."""
    if not b or sum(b) != -1:
        raise StatsError(f"sequence must sum to -1, got {sum(b) if b else 'empty'}")
    acc = 0
    low, arg = None, 0
    for i, x in enumerate(b):
        acc += x
        if low is None or acc < low:
            low, arg = acc, i + 1
    return arg % len(b)


def rotation_is_valid(b: Sequence[int]) -> bool:
    acc = 0
    for x in b[:-1]:
        acc += x
        if acc < 0:
            return False
    return sum(b) == -1


def psi(p: Sequence[Step], k: int) -> Path:
    """Rotate ``p`` so that its ``k``-th step (1-based) comes first."""
    p = Path(p)
    if not is_primary(p) or endpoint(p)[1] != -1:
        raise StatsError(f"{p} is not 1-primary")
    if not 1 <= k <= len(p):
        raise StatsError(f"k={k} outside 1..{len(p)}")
    return p[k - 1:] + p[:k - 1]


def zeta(free: Sequence[Step]) -> Tuple[Path, int]:
    """Inverse of :func:`psi`: the 1-primary path and rotation index."""
    free = Path(free)
    if endpoint(free)[1] != -1:
        raise StatsError(f"{free} does not end one level down")
    word = [s.dy for s in free]
    t = raney_shift(word)
    r = len(free)
    return free[t:] + free[:t], (r - t) % r + 1


# ------------------------------------------------------------ expectations


def _ratio(S_: StepSet, n: int) -> Fraction:
    if n < 1:
        raise StatsError("expectations need n >= 1")
    f0 = count_free_rec(S_, 0, n)
    f1 = count_free_rec(S_, 1, n)
    if f1 == f0:
        raise ZeroDivisionError(f"no 1-primary paths of length {n}")
    return Fraction(f0, f1 - f0)


def expected_vertical(S_: StepSet, n: int) -> Fraction:
    """Mean number of ``V`` steps in a uniform random path of ``P(1, n)``."""
    return n * _ratio(S_, n)


def expected_steps(S_: StepSet, n: int) -> Fraction:
    """Mean total number of steps (vertical included) over ``P(1, n)``."""
    return n * (1 + _ratio(S_, n))


def empirical_mean(S_: StepSet, n: int, step: Step = None) -> Fraction:
    """Average count of ``step`` (all steps when ``None``) over enumerated ``P(1, n)``."""
    paths = enumerate_primary(S_, 1, n)
    if not paths:
        raise ZeroDivisionError(f"no 1-primary paths of length {n}")
    if step is None:
        total = sum(len(p) for p in paths)
    else:
        total = sum(1 for p in paths for s in p if s == step)
    return Fraction(total, len(paths))


def _delannoy(n: int, k: int) -> int:
    return sum(binom(n, j) * binom(n + k - j, n) for j in range(k + 1))


def delannoy_diag_expectation(n: int) -> Fraction:
    """Mean number of diagonal steps in a subdiagonal central Delannoy path."""
    if n < 1:
        raise StatsError("needs n >= 1")
    return Fraction(n * _delannoy(n, n - 1), _delannoy(n, n + 1) - _delannoy(n, n))


def delannoy_diag_expectation_sum(n: int) -> Fraction:
    """Same quantity written as two binomial sums."""
    if n < 1:
        raise StatsError("needs n >= 1")
    top = sum(binom(n, j) * binom(2 * n - j - 1, n) for j in range(n))
    bottom = sum(binom(n, j) * binom(2 * n - j, n - 1) for j in range(n + 1))
    return Fraction(n * top, bottom)


__all__ = [
    "StatsError", "StepCensus", "census", "census_prediction",
    "delannoy_diag_expectation", "delannoy_diag_expectation_sum",
    "empirical_mean", "expected_steps", "expected_vertical", "phi",
    "phi_inverse", "psi", "raney_shift", "rotation_is_valid", "zeta",
]
