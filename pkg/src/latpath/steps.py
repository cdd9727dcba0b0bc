"""Steps, step sets and the five named families.

A step is either the vertical step ``V = (0, -1)`` or a non-vertical step
``S_k = (1, k)``.  Up steps ``U_k`` have ``k >= 0``; down steps ``D_p`` are
``S_{-p}`` with ``p >= 1``.

Step lists are always ordered with ``V`` first and non-vertical steps by
ascending rise; every rank-dependent construction relies on that order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple


class StepSetError(ValueError):
    """Raised for invalid step sets or family parameters."""


@dataclass(frozen=True, order=True)
class Step:
    dx: int
    dy: int

    def __post_init__(self) -> None:
        if (self.dx, self.dy) != (0, -1) and self.dx != 1:
            raise ValueError(f"unsupported step ({self.dx}, {self.dy})")

    @property
    def is_vertical(self) -> bool:
        return self.dx == 0

    @property
    def rise(self) -> int:
        return self.dy

    def __str__(self) -> str:
        if self.is_vertical:
            return "V"
        if self.dy >= 0:
            return f"U{self.dy}"
        return f"D{-self.dy}"

    __repr__ = __str__


V = Step(0, -1)


def S(k: int) -> Step:
    return Step(1, k)


def U(k: int) -> Step:
    if k < 0:
        raise ValueError("up steps have k >= 0")
    return Step(1, k)


def D(p: int) -> Step:
    if p < 1:
        raise ValueError("down steps have p >= 1")
    return Step(1, -p)


_STEP_RE = re.compile(r"^(V|U(\d+)|D(\d+)|S(-?\d+))$")


def parse_step(token: str) -> Step:
    m = _STEP_RE.match(token.strip())
    if not m:
        raise ValueError(f"cannot parse step {token!r}")
    if m.group(1) == "V":
        return V
    if m.group(2) is not None:
        return U(int(m.group(2)))
    if m.group(3) is not None:
        return D(int(m.group(3)))
    return S(int(m.group(4)))


@dataclass(frozen=True)
class StepSet:
    """A set of steps drawn from ``{V} | {S_k : k <= N}``.

    ``all_downs`` stands for the infinite tail ``D_1, D_2, ...``; it is never
    materialised and ``downs`` is then empty.
    """

    has_vertical: bool
    ups: FrozenSet[int]
    downs: FrozenSet[int] = field(default_factory=frozenset)
    all_downs: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "ups", frozenset(self.ups))
        object.__setattr__(self, "downs", frozenset(self.downs))
        if not self.ups:
            raise StepSetError("a step set needs at least one up step")
        if any(k < 0 for k in self.ups):
            raise StepSetError("up rises must be >= 0")
        if any(p < 1 for p in self.downs):
            raise StepSetError("down drops must be >= 1")
        if self.all_downs and self.downs:
            object.__setattr__(self, "downs", frozenset())

    @property
    def N(self) -> int:
        return max(self.ups)

    @property
    def K(self) -> Optional[int]:
        """Largest finite drop; ``None`` for the infinite tail or no downs."""
        if self.all_downs or not self.downs:
            return None
        return max(self.downs)

    @property
    def is_finite(self) -> bool:
        return not self.all_downs

    def __contains__(self, step: object) -> bool:
        if not isinstance(step, Step):
            return False
        if step.is_vertical:
            return self.has_vertical
        k = step.rise
        if k >= 0:
            return k in self.ups
        return self.all_downs or -k in self.downs

    def rises(self, floor: Optional[int] = None) -> List[int]:
        """Rises of the non-vertical steps, ascending.

        ``floor`` is mandatory for ``all_downs`` sets; rises below it are cut.
        """
        if self.all_downs:
            if floor is None:
                raise StepSetError("infinite step set needs an explicit floor")
            lows = list(range(floor, 0))
        else:
            lows = sorted(-p for p in self.downs)
        out = lows + sorted(self.ups)
        if floor is not None:
            out = [k for k in out if k >= floor]
        return out

    def steps(self, floor: Optional[int] = None) -> List[Step]:
        out = [V] if self.has_vertical else []
        return out + [S(k) for k in self.rises(floor)]

    def steps_geq(self, k: int) -> List[int]:
        """All ``h`` with ``S_h`` in the set and ``h >= k``, ascending."""
        return self.rises(floor=k)

    def with_vertical(self) -> "StepSet":
        return StepSet(True, self.ups, self.downs, self.all_downs)

    def without_vertical(self) -> "StepSet":
        return StepSet(False, self.ups, self.downs, self.all_downs)

    def __str__(self) -> str:
        parts = ["V"] if self.has_vertical else []
        parts += [f"U{k}" for k in sorted(self.ups, reverse=True)]
        parts += [f"D{p}" for p in sorted(self.downs)]
        if self.all_downs:
            parts.append("D*")
        return ",".join(parts)

    @classmethod
    def parse(cls, text: str) -> "StepSet":
        has_v = False
        ups, downs = set(), set()
        all_downs = False
        for token in text.split(","):
            token = token.strip()
            if not token:
                continue
            if token == "D*":
                all_downs = True
                continue
            step = parse_step(token)
            if step.is_vertical:
                has_v = True
            elif step.rise >= 0:
                ups.add(step.rise)
            else:
                downs.add(-step.rise)
        return cls(has_v, frozenset(ups), frozenset(downs), all_downs)

    @classmethod
    def from_steps(cls, steps: Iterable[Step]) -> "StepSet":
        has_v = False
        ups, downs = set(), set()
        for st in steps:
            if st.is_vertical:
                has_v = True
            elif st.rise >= 0:
                ups.add(st.rise)
            else:
                downs.add(-st.rise)
        return cls(has_v, frozenset(ups), frozenset(downs))


FAMILIES = ("A", "B", "C", "D", "E")


def make_family(name: str, N: Optional[int] = None, K: Optional[int] = None) -> StepSet:
    """Build family A, B, C, D or E.

    A: ``{V, U_N..U_0, D_1..D_K}``; B: ``{V, U_N..U_0, D_1}``;
    C: ``{V, U_N..U_0, D_1, D_2, ...}``; D: ``{V, U_N, D_K}``;
    E: ``{V, U_1, U_0}`` (parameters ignored).
    """
    name = name.upper()
    if name == "E":
        return StepSet(True, frozenset({0, 1}))
    if name not in FAMILIES:
        raise StepSetError(f"unknown family {name!r}")
    if N is None or N < 0:
        raise StepSetError(f"family {name} needs N >= 0, got {N}")
    ups = frozenset(range(N + 1))
    if name == "B":
        return StepSet(True, ups, frozenset({1}))
    if name == "C":
        return StepSet(True, ups, all_downs=True)
    if K is None or K < 1:
        raise StepSetError(f"family {name} needs K >= 1, got {K}")
    if name == "A":
        return StepSet(True, ups, frozenset(range(1, K + 1)))
    return StepSet(True, frozenset({N}), frozenset({K}))


def companion_L(vset: StepSet) -> StepSet:
    """The vertical-free companion set: drop ``V``, add ``U_N..U_0`` and ``D_1``."""
    if not vset.has_vertical:
        raise StepSetError("companion set needs the vertical step")
    N = vset.N
    return StepSet(
        False,
        frozenset(range(N + 1)) | vset.ups,
        vset.downs | frozenset({1}) if not vset.all_downs else frozenset(),
        vset.all_downs,
    )

