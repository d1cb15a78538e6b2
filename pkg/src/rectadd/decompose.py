"""Greedy square decomposition of a rectangle.

Each step packs squares of the current shorter side into the rectangle as
many times as they fit, starting from the min-coordinate corner along the
longer axis; the leftover strip at the max-coordinate end is the next
rectangle.  The per-step counts follow the continued fraction of the aspect
ratio, the side trace at least halves every two steps, and summing any
corner-difference function over the tiles telescopes back to its value on
the original rectangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .geometry import Rect
from .numeric import QNum
from .rectfn import RectFunction

__all__ = [
    "Step",
    "Decomposition",
    "HalvingCheck",
    "HalvingCertificate",
    "greedy_step",
    "decompose",
    "verify_halving",
    "telescope",
    "continued_fraction_counts",
]


@dataclass(frozen=True)
class Step:
    """Squares of one common side packed in a single pass."""

    side: QNum
    count: int
    squares: tuple[Rect, ...]


@dataclass(frozen=True)
class Decomposition:
    """Result of iterating greedy steps.

    `sides` is the trace of shorter sides at entry to each step, preceded by
    the longer side of the original rectangle; `terminated` is True exactly
    when the last packing was exact and no remainder is left, which happens
    iff the aspect ratio is rational (finite continued fraction).
    """

    original: Rect
    steps: tuple[Step, ...]
    remainder: Optional[Rect]
    terminated: bool
    sides: tuple[QNum, ...]

    @property
    def counts(self) -> list[int]:
        return [s.count for s in self.steps]

    @property
    def total_squares(self) -> int:
        return sum(s.count for s in self.steps)

    def all_squares(self) -> list[Rect]:
        return [sq for s in self.steps for sq in s.squares]


def greedy_step(r: Rect) -> tuple[Step, Optional[Rect]]:
    """Pack floor(longer/shorter) squares of the shorter side into r.

    Squares are laid from the min-coordinate corner along the longer axis;
    when they fill r exactly (a square, or commensurable sides at this step)
    the remainder is None, otherwise it is the strip of the remaining length
    at the max-coordinate end.
    """
    w, h = r.width, r.height
    if w >= h:
        count = math.floor(w / h)
        squares = tuple(
            Rect(r.x1 + h * i, r.x1 + h * (i + 1), r.y1, r.y2)
            for i in range(count)
        )
        used = r.x1 + h * count
        rem = None if used == r.x2 else Rect(used, r.x2, r.y1, r.y2)
        return Step(side=h, count=count, squares=squares), rem
    count = math.floor(h / w)
    squares = tuple(
        Rect(r.x1, r.x2, r.y1 + w * i, r.y1 + w * (i + 1))
        for i in range(count)
    )
    used = r.y1 + w * count
    rem = None if used == r.y2 else Rect(r.x1, r.x2, used, r.y2)
    return Step(side=w, count=count, squares=squares), rem


def decompose(r: Rect, max_steps: int) -> Decomposition:
    """Iterate greedy steps until the packing is exact or max_steps is hit.

    Incommensurable side ratios never terminate; max_steps is therefore
    mandatory and the `terminated` flag carries the distinction between the
    finite and the truncated-infinite case.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    w, h = r.width, r.height
    sides = [w if w > h else h]
    steps: list[Step] = []
    current: Optional[Rect] = r
    terminated = False
    while current is not None and len(steps) < max_steps:
        cw, ch = current.width, current.height
        sides.append(cw if cw < ch else ch)
        step, rem = greedy_step(current)
        steps.append(step)
        if rem is None:
            terminated = True
        current = rem
    return Decomposition(
        original=r,
        steps=tuple(steps),
        remainder=current,
        terminated=terminated,
        sides=tuple(sides),
    )


@dataclass(frozen=True)
class HalvingCheck:
    """One exact comparison backing the halving guarantee."""

    index: int
    kind: str  # "monotone" or "halving"
    lhs: QNum
    rhs: QNum
    holds: bool


@dataclass(frozen=True)
class HalvingCertificate:
    ok: bool
    checks: tuple[HalvingCheck, ...]


def verify_halving(d: Decomposition) -> HalvingCertificate:
    """Check sides[n+1] <= sides[n] and sides[n+2] <= sides[n]/2 for every n.

    All comparisons are exact field comparisons and are returned as the
    certificate; traces shorter than 3 make the halving part vacuous.
    """
    sides = d.sides
    checks: list[HalvingCheck] = []
    for n in range(len(sides) - 1):
        lhs, rhs = sides[n + 1], sides[n]
        checks.append(HalvingCheck(n, "monotone", lhs, rhs, lhs <= rhs))
    for n in range(len(sides) - 2):
        lhs, rhs = sides[n + 2], sides[n] / 2
        checks.append(HalvingCheck(n, "halving", lhs, rhs, lhs <= rhs))
    return HalvingCertificate(all(c.holds for c in checks), tuple(checks))


def telescope(F: RectFunction, d: Decomposition) -> QNum:
    """Sum of F over all packed squares plus the remainder (when present).

    For corner-difference F this equals F(original) exactly: shared-edge
    corner terms cancel in pairs across the tiling.
    """
    total = QNum(0)
    for step in d.steps:
        for sq in step.squares:
            total = total + F.value(sq)
    if d.remainder is not None:
        total = total + F.value(d.remainder)
    return total


def continued_fraction_counts(r: Rect, max_terms: int) -> list[int]:
    """Continued-fraction coefficients of (longer side)/(shorter side) by
    exact floor-and-invert, truncated at max_terms or exact termination.

    Serves as an independent oracle for the greedy per-step counts: packing
    "as many times as possible" is precisely the floor of the running ratio.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    w, h = r.width, r.height
    x = w / h if w >= h else h / w
    terms: list[int] = []
    while len(terms) < max_terms:
        a = math.floor(x)
        terms.append(a)
        frac = x - QNum(a)
        if not frac:
            break
        x = QNum(1) / frac
    return terms
