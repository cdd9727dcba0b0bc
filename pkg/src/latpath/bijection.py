"""Weight-preserving bijection between primary paths with vertical steps and
weighted primary paths over the vertical-free companion set.

Given a primary ``V``-path decomposed as ``S_h V^l0 mu_1 ... mu_d V^ld``,
``g`` replaces the head by ``S_k`` (``k = h - sum(l)``), recurses into the
sub-paths and records which ``(h, l)`` was used as a weight on ``S_k``.
The admissible pairs for a given shape ``(m, d, k)`` form the finite set
``H(m, d, k)``: ``h`` ranges over the rises ``>= k`` of the set and ``l``
over compositions of ``h - k`` into ``d + 1`` parts (``d`` parts when
``m >= 2``).  Pairs are ranked by ``h`` first, then ``l`` in lexicographic
order, and the weight is that 1-based rank.

Single-step pieces are special: ``D_1`` in the companion path stands for
``S_h V^(h+1)`` (weight is the rank of ``h`` among rises ``>= -1``) and
``D_p`` with ``p >= 2`` stands for itself with weight 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .combinat import (
    composition_rank,
    composition_unrank,
    compositions,
    count_compositions,
)
from .paths import Decomposition, Path, decompose, is_primary, recompose
from .steps import S, StepSet, V, companion_L


class BijectionError(ValueError):
    pass


def _lambda_parts(m: int, d: int) -> int:
    return d if m >= 2 else d + 1


def _heads(vset: StepSet, k: int) -> List[int]:
    return [h for h in sorted(vset.ups) if h >= k]


def h_size(vset: StepSet, m: int, d: int, k: int) -> int:
    """``|H(m, d, k)|`` for the vertical set ``vset``."""
    parts = _lambda_parts(m, d)
    return sum(count_compositions(h - k, parts) for h in _heads(vset, k))


def h_pairs(vset: StepSet, m: int, d: int, k: int) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """All ``(h, lambdas)`` in ``H(m, d, k)`` in rank order."""
    parts = _lambda_parts(m, d)
    for h in _heads(vset, k):
        for lam in compositions(h - k, parts):
            yield h, lam


def h_rank(vset: StepSet, m: int, d: int, k: int, h: int, lam: Sequence[int]) -> int:
    """1-based rank of ``(h, lam)`` in ``H(m, d, k)``."""
    parts = _lambda_parts(m, d)
    if h not in vset.ups or h < k or len(lam) != parts or sum(lam) != h - k:
        raise BijectionError(f"({h}, {tuple(lam)}) is not in H({m},{d},{k})")
    before = sum(count_compositions(g - k, parts) for g in _heads(vset, k) if g < h)
    return before + composition_rank(lam) + 1


def h_unrank(vset: StepSet, m: int, d: int, k: int, rank: int) -> Tuple[int, Tuple[int, ...]]:
    parts = _lambda_parts(m, d)
    r = rank - 1
    if r < 0:
        raise BijectionError(f"weight {rank} must be >= 1")
    for h in _heads(vset, k):
        block = count_compositions(h - k, parts)
        if r < block:
            return h, composition_unrank(h - k, parts, r)
        r -= block
    raise BijectionError(f"weight {rank} exceeds |H({m},{d},{k})| = {h_size(vset, m, d, k)}")


def _terminal_heads(vset: StepSet) -> List[int]:
    return vset.steps_geq(-1)


def step_weight(vset: StepSet, k: int, m: int = 1, d: int = 0) -> int:
    """Number of choices a companion step ``S_k`` carries.

    For ``k >= 0`` this is ``|H(m, d, k)|``; ``D_1`` carries the number of
    rises ``>= -1`` and any deeper down step carries 1.
    """
    if k >= 0:
        return h_size(vset, m, d, k)
    if k == -1:
        return len(_terminal_heads(vset))
    return 1


@dataclass(frozen=True)
class WeightedPath:
    """A companion-set path with one positive weight per step (preorder)."""

    path: Path
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.path):
            raise BijectionError("need exactly one weight per step")

    def __str__(self) -> str:
        return " ".join(f"{s}[{w}]" for s, w in zip(self.path, self.weights)) or "-"


def _check_primary(p: Path) -> None:
    if p and not is_primary(p):
        raise BijectionError(f"{p} is not primary")


def _g(p: Path, vset: StepSet, out_steps: list, out_weights: list) -> None:
    if not p:
        return
    dec = decompose(p)
    m, d, k = dec.shape
    if k < 0:
        if k == -1 and m == 1:
            out_steps.append(S(-1))
            out_weights.append(_terminal_heads(vset).index(dec.first.dy) + 1)
        else:
            out_steps.append(dec.first)
            out_weights.append(1)
    else:
        out_steps.append(S(k))
        out_weights.append(h_rank(vset, m, d, k, dec.first.dy, dec.lambdas))
        for _, sub in dec.subpaths:
            _g(sub, vset, out_steps, out_weights)
    _g(dec.tail, vset, out_steps, out_weights)


def map_g(p: Sequence, vset: StepSet) -> WeightedPath:
    """Send a primary ``vset``-path to its weighted companion path."""
    p = Path(p)
    if any(s not in vset for s in p):
        raise BijectionError(f"{p} uses steps outside {vset}")
    _check_primary(p)
    steps: list = []
    weights: list = []
    _g(p, vset, steps, weights)
    return WeightedPath(Path(steps), tuple(weights))


def _f(p: Path, weights: Dict[int, int], offset: int, vset: StepSet) -> Path:
    """Invert ``g`` on ``p`` whose first step sits at preorder index ``offset``."""
    if not p:
        return Path()
    dec = decompose(p)
    m, d, k = dec.shape
    w = weights[offset]
    if k < 0:
        heads = _terminal_heads(vset)
        if m == 1:
            if not 1 <= w <= len(heads):
                raise BijectionError(f"weight {w} on D1 outside 1..{len(heads)}")
            h = heads[w - 1]
            body = Path([S(h)] + [V] * (h + 1))
        else:
            if w != 1 or dec.first not in vset:
                raise BijectionError(f"{dec.first} with weight {w} has no preimage")
            body = Path([dec.first])
        return body + _f(dec.tail, weights, offset + 1, vset)
    h, lam = h_unrank(vset, m, d, k, w)
    pos = offset + 1
    subs = []
    for mi, sub in dec.subpaths:
        subs.append((mi, _f(sub, weights, pos, vset)))
        pos += len(sub)
    tail = _f(dec.tail, weights, pos, vset)
    return recompose(Decomposition(S(h), (m, d, k), lam, tuple(subs), tail))


def map_f(wp: WeightedPath, vset: StepSet) -> Path:
    """Inverse of :func:`map_g`."""
    L = companion_L(vset)
    if any(s not in L for s in wp.path):
        raise BijectionError(f"{wp.path} uses steps outside {L}")
    _check_primary(wp.path)
    if any(w < 1 for w in wp.weights):
        raise BijectionError("weights must be >= 1")
    return _f(wp.path, dict(enumerate(wp.weights)), 0, vset)


def path_weight_bounds(p: Sequence, vset: StepSet) -> Tuple[int, ...]:
    """Largest admissible weight on each step of a companion path."""
    p = Path(p)
    out: List[int] = [0] * len(p)

    def walk(q: Path, offset: int) -> None:
        if not q:
            return
        dec = decompose(q)
        m, d, k = dec.shape
        out[offset] = step_weight(vset, k, m, d)
        pos = offset + 1
        for _, sub in dec.subpaths:
            walk(sub, pos)
            pos += len(sub)
        walk(dec.tail, pos)

    walk(p, 0)
    return tuple(out)


def weight_of_path(p: Sequence, vset: StepSet) -> int:
    """Product of the per-step weight bounds of a companion path, i.e. the
    number of ``vset``-paths that map onto it."""
    total = 1
    for w in path_weight_bounds(p, vset):
        total *= w
    return total


def weighted_count(vset: StepSet, m: int, n: int) -> int:
    """Weighted number of ``m``-primary companion paths with ``n`` steps.

    Computed by recursion on the decomposition shape, without enumerating
    paths.  Equals the number of ``m``-primary ``vset``-paths.
    """
    if m < 0 or n < 0:
        return 0
    return _WeightedCounter.for_set(vset).W(m, n)


class _WeightedCounter:
    _cache: Dict[StepSet, "_WeightedCounter"] = {}

    def __init__(self, vset: StepSet) -> None:
        self.vset = vset
        L = companion_L(vset)
        self.K = L.K
        self.ups = sorted(L.ups)
        self.W = lru_cache(maxsize=None)(self._W)
        self.arch = lru_cache(maxsize=None)(self._arch)
        self.Q = lru_cache(maxsize=None)(self._Q)

    @classmethod
    def for_set(cls, vset: StepSet) -> "_WeightedCounter":
        if vset not in cls._cache:
            cls._cache[vset] = cls(vset)
        return cls._cache[vset]

    def _W(self, m: int, n: int) -> int:
        if n == 0:
            return 1 if m == 0 else 0
        if m == 0:
            return sum(self.arch(j) * self.W(0, n - j) for j in range(1, n + 1))
        if self.K is not None and m > self.K:
            return 0
        total = 0
        if n == 1:
            if m == 1:
                total += step_weight(self.vset, -1)
            elif S(-m) in self.vset:
                total += 1
        for k in self.ups:
            for d in range(1, n):
                weight = h_size(self.vset, m, d, k)
                if weight:
                    total += weight * self.Q(k + m, d, max(m, 1), n - 1)
        return total

    def _arch(self, n: int) -> int:
        """Weighted arches (0-primary, no interior return) with ``n`` steps."""
        total = h_size(self.vset, 0, 0, 0) if n == 1 else 0
        for k in self.ups:
            for d in range(1, min(k, n - 1) + 1):
                weight = h_size(self.vset, 0, d, k)
                if weight:
                    total += weight * self.Q(k, d, 1, n - 1)
        return total

    def _Q(self, drop: int, d: int, last_lo: int, n: int) -> int:
        """Weighted sequences of ``d`` primary pieces with total drop ``drop``,
        total length ``n`` and a last drop of at least ``last_lo``."""
        if d == 1:
            return self.W(drop, n) if drop >= last_lo else 0
        total = 0
        for m1 in range(1, drop - (d - 2) - last_lo + 1):
            for n1 in range(1, n - (d - 1) + 1):
                w = self.W(m1, n1)
                if w:
                    total += w * self.Q(drop - m1, d - 1, last_lo, n - n1)
        return total


__all__ = [
    "BijectionError", "WeightedPath", "h_pairs", "h_rank", "h_size", "h_unrank",
    "map_f", "map_g", "path_weight_bounds", "step_weight", "weight_of_path",
    "weighted_count",
]

