"""Wall-and-chamber structure as the polarization and degree vary.

For a fixed ordering the attachment ratios k_{X_i} trace out a point in a
product of intervals (0, h_{X_i}]; the walls are the integer hyperplanes
k_{X_i} = a with 1 <= a <= h_{X_i}, and chambers are the connected
components of their complement.  Off the walls a point is tagged by the
floor tuple (floor k_{X_1}, ..., floor k_{X_{N-1}}); the stable
multidegree is constant on lattice points sharing a polarization, a floor
tuple, and a quotient t.  On a wall the row carries the graded degrees
instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .curve import Component, CurveGraph
from .degrees import compute_dX, detect_walls, make_context
from .errors import NonPositivePolarization, SweepTooLarge
from .jh import compute_jh_degrees
from .ordering import AdmissibleOrdering, verify_ordering

SWEEP_POINT_CAP = 20000


@dataclass(frozen=True)
class ChamberPoint:
    polarization: tuple[tuple[str, int], ...]
    d: int
    t: int
    b: int
    chamber_id: tuple[int, ...] | None
    on_wall: bool


@dataclass(frozen=True)
class SweepRow:
    point: ChamberPoint
    degrees: dict[str, int]
    graded: bool


@dataclass(frozen=True)
class SweepTable:
    ordering: AdmissibleOrdering
    rows: tuple[SweepRow, ...]


def wall_hyperplanes(X: CurveGraph, ordering: AdmissibleOrdering) -> list[tuple[int, int]]:
    """All wall levels (i, a) with 1 <= a <= h_{X_i} for the given polarization."""
    out = []
    for i, (sub, _node) in enumerate(ordering.attachments, start=1):
        h_sub = sum(X.component(c).h for c in sub.members)
        out.extend((i, a) for a in range(1, h_sub + 1))
    return out


def repolarize(X: CurveGraph, pol: Mapping[str, int]) -> CurveGraph:
    """The same curve with per-component polarization degrees replaced.

    Components missing from `pol` keep their current degree.
    """
    comps = []
    for c in X.components:
        h = pol.get(c.id, c.h)
        if h < 1:
            raise NonPositivePolarization(f"polarization degree for {c.id} must be >= 1")
        comps.append(Component(c.id, c.genus, h))
    return CurveGraph(tuple(comps), X.nodes)


def classify_point(
    X: CurveGraph, ordering: AdmissibleOrdering, pol: Mapping[str, int], d: int
) -> ChamberPoint:
    """Chamber membership of one (polarization, d) lattice point."""
    Xp = repolarize(X, pol)
    ordp = verify_ordering(Xp, ordering.sequence)
    ctx = make_context(Xp, d)
    report = detect_walls(ctx, ordp)
    floors = tuple(e.k.numerator // e.k.denominator for e in report.entries)
    on_wall = report.first_wall_index is not None
    return ChamberPoint(
        polarization=tuple(sorted((c.id, c.h) for c in Xp.components)),
        d=d,
        t=ctx.t,
        b=ctx.b,
        chamber_id=None if on_wall else floors,
        on_wall=on_wall,
    )


def sweep(
    X: CurveGraph,
    ordering: AdmissibleOrdering,
    pol_ranges: Mapping[str, tuple[int, int]],
    d_range: tuple[int, int],
    max_points: int = SWEEP_POINT_CAP,
) -> SweepTable:
    """One row per lattice point of the polarization box times the d range.

    Off-wall rows carry the stable multidegree; on-wall rows carry the
    graded degrees of the splitting recursion (sides reordered
    canonically).  Rows are ordered lexicographically by polarization
    vector, then by d.
    """
    ids = sorted(X.component_ids)
    spans = []
    for cid in ids:
        lo, hi = pol_ranges.get(cid, (X.component(cid).h, X.component(cid).h))
        if lo < 1:
            raise NonPositivePolarization(f"polarization range for {cid} starts below 1")
        if hi < lo:
            raise NonPositivePolarization(f"empty polarization range for {cid}")
        spans.append(range(lo, hi + 1))
    d_lo, d_hi = d_range
    if d_hi < d_lo:
        raise SweepTooLarge("empty d range")
    count = len(range(d_lo, d_hi + 1))
    for span in spans:
        count *= len(span)
    if count > max_points:
        raise SweepTooLarge(f"sweep of {count} lattice points exceeds cap {max_points}")

    rows = []
    for values in itertools.product(*spans):
        pol = dict(zip(ids, values))
        Xp = repolarize(X, pol)
        ordp = verify_ordering(Xp, ordering.sequence)
        for d in range(d_lo, d_hi + 1):
            point = classify_point(X, ordering, pol, d)
            ctx = make_context(Xp, d)
            if point.on_wall:
                degs = compute_jh_degrees(ctx, ordp).pieces
            else:
                degs = compute_dX(ctx, ordp)
            rows.append(SweepRow(point=point, degrees=degs, graded=point.on_wall))
    return SweepTable(ordering=ordering, rows=tuple(rows))
