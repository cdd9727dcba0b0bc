"""Paths, primary/free classification and the first-passage decomposition.

A path is a tuple of steps started at the origin.  ``n`` counts its
non-vertical steps and its endpoint is ``(n, -m)``.

Decomposition of a primary path whose first step is ``S_h``::

    S_h V^l0 mu_1 V^l1 mu_2 ... mu_d V^ld  [tail]

The cut points are the left-most lattice points at which the path first
reaches each level ``h, h-1, ..., 1-m`` (levels crossed in the middle of an
oblique step are skipped).  For ``m = 0`` the decomposition covers only the
arch up to the first return to level 0; the rest is a 0-primary ``tail``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .steps import Step, StepSet, V, parse_step


class PathError(ValueError):
    pass


class Path(tuple):
    """Immutable sequence of steps with lattice-path helpers."""

    def __new__(cls, steps: Sequence[Step] = ()) -> "Path":
        return super().__new__(cls, steps)

    @property
    def n(self) -> int:
        return sum(1 for s in self if not s.is_vertical)

    def endpoint(self) -> Tuple[int, int]:
        return endpoint(self)

    def heights(self) -> List[int]:
        """Heights of all lattice points, starting with the origin."""
        out = [0]
        y = 0
        for s in self:
            y += s.dy
            out.append(y)
        return out

    def __add__(self, other: Sequence[Step]) -> "Path":  # type: ignore[override]
        return Path(tuple(self) + tuple(other))

    def __getitem__(self, item):  # type: ignore[override]
        out = super().__getitem__(item)
        return Path(out) if isinstance(item, slice) else out

    def __str__(self) -> str:
        return format_path(self)

    def __repr__(self) -> str:
        return f"Path({format_path(self)!r})"


def endpoint(p: Sequence[Step]) -> Tuple[int, int]:
    x = y = 0
    for s in p:
        x += s.dx
        y += s.dy
    return x, y


_TOKEN_RE = re.compile(r"^(V)(\d*)$|^([USD]-?\d+)(?:\^(\d+))?$")


def parse_path(text: str) -> Path:
    """Parse a word such as ``"U3 D2 U1 V U2 V3 U1 D1"``.

    ``V3`` is three vertical steps; other steps take a ``^e`` exponent,
    e.g. ``U1^2``.  The empty path is written ``-``.
    """
    text = text.strip()
    if text in ("", "-"):
        return Path()
    steps: List[Step] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise PathError(f"cannot parse path token {token!r}")
        if m.group(1):
            steps.extend([V] * int(m.group(2) or 1))
        else:
            steps.extend([parse_step(m.group(3))] * int(m.group(4) or 1))
    return Path(steps)


def format_path(p: Sequence[Step]) -> str:
    if not p:
        return "-"
    out: List[str] = []
    i = 0
    while i < len(p):
        s = p[i]
        if s.is_vertical:
            j = i
            while j < len(p) and p[j].is_vertical:
                j += 1
            out.append("V" if j - i == 1 else f"V{j - i}")
            i = j
        else:
            out.append(str(s))
            i += 1
    return " ".join(out)


class PathClass(enum.Enum):
    PRIMARY = "primary"
    FREE_ONLY = "free"
    NOT_IN_SET = "not-in-set"


class Classification(NamedTuple):
    kind: PathClass
    m: Optional[int] = None


def is_primary(p: Sequence[Step]) -> bool:
    """True when every lattice point but the last is on or above the axis,
    the endpoint is on or below it, and the path does not start with ``V``.

    The last condition only matters for ``V^m`` with no non-vertical step;
    such paths are treated as free (see the length-zero convention in
    :mod:`latpath.count`).
    """
    if p and p[0].is_vertical:
        return False
    y = 0
    for s in p[:-1] if p else ():
        y += s.dy
        if y < 0:
            return False
    return endpoint(p)[1] <= 0


def classify(p: Sequence[Step], S: StepSet) -> Classification:
    if any(s not in S for s in p):
        return Classification(PathClass.NOT_IN_SET)
    if is_primary(p):
        return Classification(PathClass.PRIMARY, -endpoint(p)[1])
    return Classification(PathClass.FREE_ONLY)


@dataclass(frozen=True)
class Decomposition:
    """Result of :func:`decompose`.

    ``shape`` is ``(m, d, k)`` with ``k = h - sum(lambdas)``.  ``lambdas`` has
    ``d + 1`` entries for ``m in {0, 1}`` and ``d`` entries for ``m >= 2``
    (the trailing run is then empty).  A negative ``k`` marks the
    single-step cases ``S_h V^(h+1)`` (``k = -1``) and ``D_m`` (``k = -m``).
    """

    first: Step
    shape: Tuple[int, int, int]
    lambdas: Tuple[int, ...]
    subpaths: Tuple[Tuple[int, Path], ...]
    tail: Path = Path()

    @property
    def m(self) -> int:
        return self.shape[0]

    @property
    def d(self) -> int:
        return self.shape[1]

    @property
    def k(self) -> int:
        return self.shape[2]

    @property
    def is_terminal(self) -> bool:
        return self.k < 0


def _arch_end(p: Sequence[Step]) -> int:
    """Number of steps up to the first return of a 0-primary path to level 0."""
    y = 0
    for i, s in enumerate(p):
        y += s.dy
        if y == 0:
            return i + 1
    raise PathError("0-primary path never returns to level 0")


def _cut(p: Sequence[Step], target: int) -> List[int]:
    """Step positions of the cut points for a path descending to ``target``.

    The first cut follows the first step; later cuts are left-most lattice
    points on new levels down to ``target + 1``.
    """
    h = p[0].dy
    cuts = [1] if h >= target + 1 else []
    low = h
    y = h
    for i in range(1, len(p)):
        y += p[i].dy
        if y < low:
            low = y
            if y >= target + 1:
                cuts.append(i + 1)
    return cuts


def decompose(p: Sequence[Step], S: Optional[StepSet] = None) -> Decomposition:
    """Decompose a primary path with at least one non-vertical step."""
    p = Path(p)
    if S is not None:
        cls = classify(p, S)
        if cls.kind is not PathClass.PRIMARY:
            raise PathError(f"{format_path(p)} is not primary over {S}")
    elif not is_primary(p):
        raise PathError(f"{format_path(p)} is not primary")
    if not p:
        raise PathError("the empty path has no decomposition")
    m = -endpoint(p)[1]
    tail = Path()
    body = p
    if m == 0:
        end = _arch_end(p)
        body, tail = p[:end], p[end:]
    first = body[0]
    h = first.dy
    cuts = _cut(body, -m)
    bounds = cuts + [len(body)]
    lambdas = [0]
    subs: List[Tuple[int, Path]] = []
    for a, b in zip(bounds, bounds[1:]):
        seg = body[a:b]
        if len(seg) == 1 and seg[0].is_vertical:
            lambdas[-1] += 1
        else:
            subs.append((-endpoint(seg)[1], seg))
            lambdas.append(0)
    if m >= 2:
        if lambdas[-1] != 0:
            raise PathError("m >= 2 path cannot end with a vertical run")
        lambdas.pop()
    k = h - sum(lambdas)
    return Decomposition(first, (m, len(subs), k), tuple(lambdas), tuple(subs), tail)


def recompose(dec: Decomposition) -> Path:
    m, d, k = dec.shape
    lambdas = list(dec.lambdas)
    if len(dec.subpaths) != d:
        raise PathError("subpath count does not match shape")
    expected = d if m >= 2 else d + 1
    if len(lambdas) != expected or any(x < 0 for x in lambdas):
        raise PathError(f"bad lambdas {dec.lambdas} for shape {dec.shape}")
    if dec.first.dy - sum(lambdas) != k:
        raise PathError("h - sum(lambdas) must equal k")
    if m >= 2:
        lambdas.append(0)
    for i, (mi, sub) in enumerate(dec.subpaths):
        if mi < 1 or -endpoint(sub)[1] != mi:
            raise PathError(f"subpath {i} does not drop by {mi}")
    if sum(mi for mi, _ in dec.subpaths) != k + m:
        raise PathError(f"subpath drops must add up to {k + m}")
    if dec.tail and m != 0:
        raise PathError("only 0-primary paths carry a tail")
    out: List[Step] = [dec.first] + [V] * lambdas[0]
    for (mi, sub), lam in zip(dec.subpaths, lambdas[1:]):
        out.extend(sub)
        out.extend([V] * lam)
    out.extend(dec.tail)
    return Path(out)
