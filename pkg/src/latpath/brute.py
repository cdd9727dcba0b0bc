"""Exhaustive enumeration of free and primary paths for small ``n``.

This is the ground truth every counting formula is checked against, so it
deliberately avoids any of the counting machinery: it walks all step words
depth first (``V`` first, then ascending rise) and keeps the ones that land
on the target.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, List, Optional

from .paths import Path, is_primary
from .steps import Step, StepSet, S, V


class EnumerationError(RuntimeError):
    pass


def _env_budget() -> int:
    return int(os.environ.get("LATPATH_BUDGET", "2000000"))


@dataclass(frozen=True)
class EnumerationBudget:
    max_n: int = 10
    max_paths: int = 2_000_000

    @classmethod
    def from_env(cls) -> "EnumerationBudget":
        return cls(max_paths=_env_budget())


DEFAULT_BUDGET = EnumerationBudget()


def effective_down_bound(S_: StepSet, m: int, n: int) -> int:
    """Lowest rise worth trying for a set with infinitely many down steps.

    From ``sum(rises) = v - m`` with ``0 <= v <= N*n + m`` vertical steps and
    every other rise at most ``N``, a single rise is at least
    ``-(m + (n-1)*N) - (N*n + m)``.
    """
    N = S_.N
    return -(m + (n - 1) * N) - (N * n + m)


def _walk(
    S_: StepSet,
    m: int,
    n: int,
    primary: bool,
    budget: EnumerationBudget,
    floor: Optional[int],
) -> Iterator[Path]:
    if n < 0:
        return
    if n > budget.max_n:
        raise EnumerationError(f"n={n} exceeds max_n={budget.max_n}")
    N = S_.N
    target = -m
    if floor is None:
        floor = effective_down_bound(S_, m, n) if S_.all_downs else None
    rises = S_.rises(floor)
    has_v = S_.has_vertical
    word: List[Step] = []
    produced = 0

    def rec(y: int, left: int) -> Iterator[Path]:
        nonlocal produced
        if left == 0 and y == target:
            produced += 1
            if produced > budget.max_paths:
                raise EnumerationError(f"more than {budget.max_paths} paths")
            yield Path(word)
            return
        if has_v and y - 1 + N * left >= target:
            if not primary or y - 1 >= 0 or (left == 0 and y - 1 == target and word):
                word.append(V)
                yield from rec(y - 1, left)
                word.pop()
        if left == 0:
            return
        for k in rises:
            y2 = y + k
            if y2 + N * (left - 1) < target:
                continue
            if primary and y2 < 0 and not (left == 1 and y2 == target):
                continue
            word.append(S(k))
            yield from rec(y2, left - 1)
            word.pop()

    yield from rec(0, n)


def enumerate_free(
    S_: StepSet,
    m: int,
    n: int,
    budget: EnumerationBudget = DEFAULT_BUDGET,
    down_bound: Optional[int] = None,
) -> List[Path]:
    """All ``S_``-paths with ``n`` non-vertical steps from the origin to ``(n, -m)``.

    ``down_bound`` overrides the lowest rise tried for infinite step sets.
    """
    return list(_walk(S_, m, n, False, budget, down_bound))


def enumerate_primary(
    S_: StepSet,
    m: int,
    n: int,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> List[Path]:
    """The ``m``-primary paths among :func:`enumerate_free` (pruned walk)."""
    if m < 0:
        return []
    return list(_walk(S_, m, n, True, budget, None))


def enumerate_primary_filtered(
    S_: StepSet, m: int, n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> List[Path]:
    """Same set as :func:`enumerate_primary`, by filtering the free paths."""
    return [p for p in enumerate_free(S_, m, n, budget) if is_primary(p)]
