"""Machine-checked reports for the library's headline constructions.

Each command returns a Report whose findings carry exact field values next
to display decimals; a finding is `verified` or `violated` only when the
claim is exactly decidable, and sampled liminf evidence is always
`evidence-only`.  Reports serialize to JSON (schema 1) and decompositions
render to static SVG.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional

from .decompose import Decomposition, decompose, telescope, verify_halving
from .geometry import DyadicSquare, Rect, dyadic_inner_cover_rect, parse_rect
from .numeric import ONE, QNum, SQRT2, ZERO, parse_qnum, qnum
from .rectfn import (
    RectFunction,
    liminf_quotient_probe,
    named_rect_function,
)
from . import suites

__all__ = [
    "Finding",
    "Report",
    "report_to_dict",
    "write_report_json",
    "write_decomposition_svg",
    "cmd_counterexample",
    "cmd_decompose",
    "cmd_dyadic_approx",
    "cmd_probe",
    "cmd_proptest",
]

SCHEMA_VERSION = 1
DISPLAY_DIGITS = 6

VERIFIED = "verified"
VIOLATED = "violated"
EVIDENCE = "evidence-only"

# Canonical witness: unit-width rectangle sitting on the rational line y = 1
# with irrational top edge y = sqrt2.
WITNESS_RECT = Rect(ZERO, ONE, ONE, SQRT2)


@dataclass(frozen=True)
class Finding:
    claim: str
    status: str
    exact_values: tuple[str, ...] = ()
    approximations: tuple[str, ...] = ()


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict
    findings: tuple[Finding, ...]

    @property
    def exit_status(self) -> int:
        return 1 if any(f.status == VIOLATED for f in self.findings) else 0


def _lits(*values: QNum) -> tuple[str, ...]:
    return tuple(v.literal() for v in values)


def _approxs(*values: QNum) -> tuple[str, ...]:
    return tuple(v.approximate(DISPLAY_DIGITS) for v in values)


def report_to_dict(report: Report, timestamp: Optional[str] = None) -> dict:
    """JSON-ready dict.  `generated_at` is the only field excluded from
    byte-for-byte determinism guarantees."""
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat()
    return {
        "schema": SCHEMA_VERSION,
        "command": report.command,
        "generated_at": timestamp,
        "inputs": report.inputs,
        "findings": [
            {
                "claim": f.claim,
                "status": f.status,
                "exact_values": list(f.exact_values),
                "approximations": list(f.approximations),
            }
            for f in report.findings
        ],
        "exit_status": report.exit_status,
    }


def write_report_json(report: Report, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report_to_dict(report), fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# counterexample


def cmd_counterexample(
    *,
    min_order: int = 0,
    max_order: int = 12,
    samples: int = 1000,
    seed: int = 7,
    function: str = "counterexample",
) -> Report:
    """Check F = area > 0 on random dyadic squares, then evaluate F on the
    witness rectangle [0,1]x[1,sqrt2] and test its strict negativity.

    Dyadic squares are drawn as (order, k, m) with order uniform on
    [min_order, max_order] and k, m uniform on [-2^15, 2^15], using Python's
    seeded Mersenne Twister so identical seeds reproduce identical reports.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not (0 <= min_order <= max_order):
        raise ValueError("need 0 <= min_order <= max_order")
    F = named_rect_function(function)
    rng = random.Random(seed)
    bad: Optional[DyadicSquare] = None
    bad_value: Optional[QNum] = None
    for _ in range(samples):
        sq = DyadicSquare(
            order=rng.randint(min_order, max_order),
            k=rng.randint(-(2**15), 2**15),
            m=rng.randint(-(2**15), 2**15),
        )
        r = sq.to_rect()
        v = F.value(r)
        if not (v == r.area() and v.sign() > 0):
            bad, bad_value = sq, v
            break
    findings = []
    if bad is None:
        findings.append(
            Finding(
                claim=f"F equals the area and is positive on all {samples} sampled "
                f"dyadic squares (orders {min_order}..{max_order})",
                status=VERIFIED,
            )
        )
    else:
        findings.append(
            Finding(
                claim="F equals the area and is positive on every sampled dyadic square",
                status=VIOLATED,
                exact_values=(bad.to_rect().literal(), bad_value.literal()),
                approximations=_approxs(bad_value),
            )
        )
    witness_value = F.value(WITNESS_RECT)
    negative = witness_value.sign() < 0
    findings.append(
        Finding(
            claim=f"F({WITNESS_RECT.literal()}) is strictly negative",
            status=VERIFIED if negative else VIOLATED,
            exact_values=_lits(witness_value),
            approximations=_approxs(witness_value),
        )
    )
    if function == "counterexample":
        findings.append(
            Finding(
                claim="witness value equals -1 exactly",
                status=VERIFIED if witness_value == -1 else VIOLATED,
                exact_values=_lits(witness_value),
            )
        )
    return Report(
        command="counterexample",
        inputs={
            "min_order": min_order,
            "max_order": max_order,
            "samples": samples,
            "seed": seed,
            "function": function,
        },
        findings=tuple(findings),
    )


# ---------------------------------------------------------------------------
# decompose


def cmd_decompose(
    *,
    rect: "Rect | str",
    max_steps: int = 20,
    function: str = "counterexample",
    svg_path: Optional[str] = None,
) -> Report:
    """Run the greedy decomposition and certify tiling, halving, and
    telescoping exactly; optionally render the figure to SVG."""
    r = parse_rect(rect) if isinstance(rect, str) else rect
    d = decompose(r, max_steps)
    findings = []

    tiled = sum((sq.area() for sq in d.all_squares()), ZERO)
    if d.remainder is not None:
        tiled = tiled + d.remainder.area()
    findings.append(
        Finding(
            claim=f"{d.total_squares} squares in {len(d.steps)} steps "
            f"(terminated={d.terminated}) tile the rectangle exactly",
            status=VERIFIED if tiled == r.area() else VIOLATED,
            exact_values=_lits(r.area(), tiled),
            approximations=_approxs(r.area()),
        )
    )

    cert = verify_halving(d)
    findings.append(
        Finding(
            claim="side trace is monotone and halves at least every two steps",
            status=VERIFIED if cert.ok else VIOLATED,
            exact_values=_lits(*d.sides),
            approximations=_approxs(*d.sides),
        )
    )

    F = named_rect_function(function)
    total = telescope(F, d)
    direct = F.value(r)
    findings.append(
        Finding(
            claim=f"sum of F over the tiles equals F(rectangle) exactly (F={F.label})",
            status=VERIFIED if total == direct else VIOLATED,
            exact_values=_lits(total, direct),
            approximations=_approxs(total, direct),
        )
    )

    if svg_path is not None:
        drawn = write_decomposition_svg(d, svg_path)
        findings.append(
            Finding(
                claim=f"SVG at {svg_path} draws one element per packed square",
                status=VERIFIED if drawn == d.total_squares else VIOLATED,
                exact_values=(str(drawn), str(d.total_squares)),
            )
        )

    return Report(
        command="decompose",
        inputs={
            "rect": r.literal(),
            "max_steps": max_steps,
            "function": function,
            "svg": svg_path,
        },
        findings=tuple(findings),
    )


# ---------------------------------------------------------------------------
# dyadic-approx


def inner_cover_sum(F: RectFunction, r: Rect, order: int) -> QNum:
    """Sum of F over the order-n inner cover of r, computed in O(1).

    The cover is a full grid of mesh squares, so for an additive
    corner-difference F the sum telescopes to F of the covered rectangle;
    no per-square enumeration is needed at any order.
    """
    covered = dyadic_inner_cover_rect(r, order)
    return ZERO if covered is None else F.value(covered)


def shrink_bound(r: Rect, order: int) -> QNum:
    """Inner-approximation error bound 2^(1-n)*(w+h) + 4*4^(-n)."""
    return (r.width + r.height) * QNum(Fraction(2, 2**order)) + QNum(
        Fraction(4, 4**order)
    )


def cmd_dyadic_approx(
    *,
    rect: "Rect | str",
    function: str = "product",
    max_order: int = 6,
) -> Report:
    """Compare F(rect) against sums of F over inner dyadic covers of rising
    order; the per-order gaps are exact.

    A function continuous in measure must see |gap| fall inside the shrink
    bound at every order, which is the decidable claim checked here; the
    per-order gap trail itself is reported as evidence.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    r = parse_rect(rect) if isinstance(rect, str) else rect
    F = named_rect_function(function)
    target = F.value(r)
    gaps: list[QNum] = []
    failures: list[int] = []
    for n in range(1, max_order + 1):
        gap = target - inner_cover_sum(F, r, n)
        gaps.append(gap)
        if abs(gap) > shrink_bound(r, n):
            failures.append(n)
    findings = [
        Finding(
            claim=f"|F(rect) - inner cover sum| obeys the shrink bound "
            f"2^(1-n)(w+h)+4*4^(-n) for n=1..{max_order}"
            + (f" (fails at orders {failures})" if failures else ""),
            status=VIOLATED if failures else VERIFIED,
            exact_values=_lits(*(gaps[n - 1] for n in failures)),
            approximations=_approxs(*(gaps[n - 1] for n in failures)),
        ),
        Finding(
            claim=f"exact gaps F(rect) - S_n for n = 1..{max_order}",
            status=EVIDENCE,
            exact_values=_lits(*gaps),
            approximations=_approxs(*gaps),
        ),
    ]
    return Report(
        command="dyadic-approx",
        inputs={"rect": r.literal(), "function": function, "max_order": max_order},
        findings=tuple(findings),
    )


# ---------------------------------------------------------------------------
# probe


def cmd_probe(
    *,
    function: str = "product",
    point: tuple = (Fraction(1, 2), Fraction(1, 2)),
    alpha: Fraction = Fraction(1),
    depth: int = 4,
    offsets: int = 3,
    within: "Rect | str | None" = None,
) -> Report:
    """Sample quotients F(Q)/|Q|^alpha on shrinking squares containing the
    point.  Finite samples cannot certify a liminf, so every finding is
    evidence-only and the report can never come out `verified`."""
    F = named_rect_function(function)
    px = parse_qnum(point[0]) if isinstance(point[0], str) else qnum(point[0])
    py = parse_qnum(point[1]) if isinstance(point[1], str) else qnum(point[1])
    w = parse_rect(within) if isinstance(within, str) else within
    probe = liminf_quotient_probe(F, (px, py), alpha, depth, offsets, within=w)
    findings = []
    for scale in probe.scales:
        exact = [s.quotient for s in scale.samples if s.quotient is not None]
        flagged = sum(1 for s in scale.samples if s.flagged)
        desc = (
            f"scale 2^-{scale.level}: {len(scale.samples)} squares"
            + (f", {flagged} non-field quotients approximated" if flagged else "")
        )
        findings.append(
            Finding(
                claim=desc,
                status=EVIDENCE,
                exact_values=_lits(*exact),
                approximations=tuple(s.quotient_approx for s in scale.samples),
            )
        )
    mins = [s.min_quotient for s in probe.scales if s.min_quotient is not None]
    findings.append(
        Finding(
            claim="per-scale minimum quotients (finite evidence, not a certificate)",
            status=EVIDENCE,
            exact_values=_lits(*mins),
            approximations=_approxs(*mins),
        )
    )
    return Report(
        command="probe",
        inputs={
            "function": function,
            "point": [px.literal(), py.literal()],
            "alpha": str(alpha),
            "depth": depth,
            "offsets": offsets,
            "within": w.literal() if w is not None else None,
        },
        findings=tuple(findings),
    )


# ---------------------------------------------------------------------------
# proptest


def cmd_proptest(*, suite: str, cases: int = 200, seed: int = 1) -> Report:
    """Run one named invariant suite with deterministic seeding."""
    result = suites.run_suite(suite, cases=cases, seed=seed)
    if result.violations:
        first = result.violations[0]
        finding = Finding(
            claim=f"suite {suite}: invariant violated (case echo: {first})",
            status=VIOLATED,
            exact_values=tuple(result.violations[:5]),
        )
    else:
        finding = Finding(
            claim=f"suite {suite}: invariant held on {result.cases_run} cases",
            status=VERIFIED,
        )
    return Report(
        command="proptest",
        inputs={"suite": suite, "cases": cases, "seed": seed},
        findings=(finding,),
    )


# ---------------------------------------------------------------------------
# SVG rendering

_SVG_HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def write_decomposition_svg(d: Decomposition, path: str, width_px: float = 720.0) -> int:
    """Render the decomposition: packed squares outlined, remainder hatched.

    The viewport is scaled to the original rectangle and stroke width is
    proportional to the smallest packed square so deep traces stay legible.
    Returns the number of square elements written.
    """
    r = d.original
    w = float(r.width)
    h = float(r.height)
    scale = width_px / w
    height_px = h * scale
    margin = 8.0

    smallest = min((float(s.side) for s in d.steps), default=w)
    stroke = max(0.3, min(2.5, smallest * scale * 0.04))

    x_off = float(r.x1)
    y_top = float(r.y2)

    def sx(q: QNum) -> float:
        return (float(q) - x_off) * scale + margin

    def sy(q: QNum) -> float:
        return (y_top - float(q)) * scale + margin  # SVG y grows downward

    def rect_el(rc: Rect, cls: str, style: str) -> str:
        x = sx(rc.x1)
        y = sy(rc.y2)
        return (
            f'  <rect class="{cls}" x="{x:.3f}" y="{y:.3f}" '
            f'width="{float(rc.width) * scale:.3f}" height="{float(rc.height) * scale:.3f}" '
            f"{style}/>"
        )

    lines = [
        _SVG_HEADER,
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width_px + 2 * margin:.0f}" height="{height_px + 2 * margin:.0f}">',
        "  <defs>",
        '    <pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)">',
        '      <line x1="0" y1="0" x2="0" y2="6" stroke="#777" stroke-width="1.2"/>',
        "    </pattern>",
        "  </defs>",
        rect_el(r, "original", f'fill="none" stroke="#000" stroke-width="{stroke:.3f}"'),
    ]
    drawn = 0
    for step in d.steps:
        for sq in step.squares:
            lines.append(
                rect_el(
                    sq,
                    "square",
                    f'fill="#fff" stroke="#000" stroke-width="{stroke:.3f}"',
                )
            )
            drawn += 1
    if d.remainder is not None:
        lines.append(
            rect_el(
                d.remainder,
                "remainder",
                f'fill="url(#hatch)" stroke="#000" stroke-width="{stroke:.3f}"',
            )
        )
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return drawn
