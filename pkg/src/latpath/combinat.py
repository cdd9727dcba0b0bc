"""Small exact-integer helpers shared across modules.

Compositions here are weak unless bounds say otherwise: a composition of
``total`` into ``parts`` parts is a tuple of ``parts`` integers, each in
``[lo, hi]``, summing to ``total``.  Generation order is lexicographic
ascending on the tuple, and ``composition_rank`` / ``composition_unrank``
use the same order with 0-based indices.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def exact_div(num: int, den: int, what: str = "value") -> int:
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


@lru_cache(maxsize=None)
def count_compositions(total: int, parts: int, lo: int = 0, hi: Optional[int] = None) -> int:
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts * lo:
        return 0
    if hi is None:
        return binom(total - parts * lo + parts - 1, parts - 1)
    if total > parts * hi:
        return 0
    return sum(
        count_compositions(total - first, parts - 1, lo, hi)
        for first in range(lo, min(hi, total) + 1)
    )


def compositions(
    total: int,
    parts: int,
    lo: int = 0,
    hi: Optional[int] = None,
    last_lo: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """Yield compositions in lexicographic order.

    ``last_lo`` raises the lower bound of the final part only; the
    generating-function systems need ``max(m, 1) <= m_d``.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        floor = lo if last_lo is None else max(lo, last_lo)
        if total >= floor and (hi is None or total <= hi):
            yield (total,)
        return
    tail_floor = (parts - 2) * lo + (lo if last_lo is None else max(lo, last_lo))
    top = total - tail_floor
    if hi is not None:
        top = min(top, hi)
    for first in range(lo, top + 1):
        for rest in compositions(total - first, parts - 1, lo, hi, last_lo):
            yield (first,) + rest


def composition_rank(comp: Sequence[int]) -> int:
    """0-based lexicographic rank among weak compositions of ``sum(comp)``
    into ``len(comp)`` parts."""
    if any(c < 0 for c in comp):
        raise ValueError(f"negative part in {tuple(comp)}")
    rank = 0
    remaining = sum(comp)
    parts = len(comp)
    for i, value in enumerate(comp[:-1]):
        rest = parts - i - 1
        # compositions whose i-th part is smaller than ``value``
        for smaller in range(value):
            rank += binom(remaining - smaller + rest - 1, rest - 1)
        remaining -= value
    return rank


def composition_unrank(total: int, parts: int, rank: int) -> Tuple[int, ...]:
    size = count_compositions(total, parts)
    if not 0 <= rank < size:
        raise IndexError(f"rank {rank} outside [0, {size})")
    if parts == 0:
        return ()
    out = []
    remaining = total
    for i in range(parts - 1):
        rest = parts - i - 1
        value = 0
        while True:
            block = binom(remaining - value + rest - 1, rest - 1)
            if rank < block:
                break
            rank -= block
            value += 1
        out.append(value)
        remaining -= value
    out.append(remaining)
    return tuple(out)


def poly_mul(a: Sequence[int], b: Sequence[int], degree: int) -> List[int]:
    """Product of two coefficient lists, truncated after ``degree``."""
    out = [0] * (degree + 1)
    for i, ai in enumerate(a[: degree + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: degree + 1 - i]):
            out[i + j] += ai * bj
    return out


def poly_pow(a: Sequence[int], e: int, degree: int) -> List[int]:
    result = [1] + [0] * degree
    base = list(a[: degree + 1]) + [0] * max(0, degree + 1 - len(a))
    while e:
        if e & 1:
            result = poly_mul(result, base, degree)
        e >>= 1
        if e:
            base = poly_mul(base, base, degree)
    return result
