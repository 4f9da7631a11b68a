"""Degree arithmetic: the (t, b) context, subcurve ratios k_D, stable
multidegrees, and wall detection.

Everything is exact.  Writing g for the arithmetic genus and h for the
total polarization degree, the total degree d is divided Euclideanly as

    d - g = h*t + b,   0 <= b < h,

and every subcurve D gets the rational ratio

    k_D = h_D * (b + 1) / h,

which lies in (0, h_D].  A stable line bundle forces, for each attachment
subcurve X_i of an admissible ordering, the restricted degree to satisfy
an open unit-length bound containing an integer exactly when k_{X_i} is
not an integer; the resulting per-component degrees are the stable
multidegree d_i^X.  Indices i with k_{X_i} integral are walls: there the
stable locus is empty.

Rationals are stdlib fractions.Fraction values: always reduced, positive
denominator, and math.floor is the floor toward minus infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curve import CurveGraph, Subcurve, global_invariants, subcurve_invariants
from .ordering import AdmissibleOrdering


@dataclass(frozen=True)
class DegreeContext:
    """Curve plus the global degree data (d, g, chi, h, t, b)."""

    curve: CurveGraph
    d: int
    g: int
    chi: int
    h: int
    t: int
    b: int


@dataclass(frozen=True)
class WallEntry:
    index: int
    subcurve: Subcurve
    node_id: str
    k: Fraction
    is_wall: bool


@dataclass(frozen=True)
class WallReport:
    ordering: AdmissibleOrdering
    entries: tuple[WallEntry, ...]
    first_wall_index: int | None


def make_context(X: CurveGraph, d: int) -> DegreeContext:
    """Euclidean division d - g = h*t + b with 0 <= b < h."""
    g, chi, h = global_invariants(X)
    t, b = divmod(d - g, h)
    return DegreeContext(curve=X, d=d, g=g, chi=chi, h=h, t=t, b=b)


def k_of(ctx: DegreeContext, D: Subcurve) -> Fraction:
    """The reduced rational h_D * (b + 1) / h."""
    inv = subcurve_invariants(ctx.curve, D)
    return Fraction(inv.h * (ctx.b + 1), ctx.h)


def inductive_degrees(
    ctx: DegreeContext, ordering: AdmissibleOrdering, total: int
) -> dict[str, int]:
    """Run the attachment recursion for a given total degree.

    For each attachment subcurve W at position i the restricted degree of
    a stable line bundle is pinned to -chi(O_W) + h_W*t + floor(k_W) + 1;
    subtracting the degrees already assigned to the earlier members of W
    yields the degree of the component at position i, and the last
    component absorbs the remainder so the values sum to `total`.

    k-values always use the global h and b from `ctx`, which is what makes
    the same recursion valid on subcurves of the splitting algorithm.
    """
    out: dict[str, int] = {}
    for i, cid in enumerate(ordering.sequence[:-1], start=1):
        sub, _node = ordering.attachments[i - 1]
        inv = subcurve_invariants(ctx.curve, sub)
        k = Fraction(inv.h * (ctx.b + 1), ctx.h)
        out[cid] = (
            -inv.chi
            + inv.h * ctx.t
            + math.floor(k)
            + 1
            - sum(out[m] for m in sub.members if m != cid)
        )
    out[ordering.sequence[-1]] = total - sum(out.values())
    return out


def compute_dX(ctx: DegreeContext, ordering: AdmissibleOrdering) -> dict[str, int]:
    """The stable multidegree d_i^X for the given admissible ordering.

    Defined for every context, walls included; whether the values describe
    stable line bundles is decided by the classification, not here.
    """
    return inductive_degrees(ctx, ordering, ctx.d)


def detect_walls(ctx: DegreeContext, ordering: AdmissibleOrdering) -> WallReport:
    """k-table over the attachments; a wall is an integral k_{X_i}."""
    entries = []
    first = None
    for i, (sub, node_id) in enumerate(ordering.attachments, start=1):
        k = k_of(ctx, sub)
        is_wall = k.denominator == 1
        if is_wall and first is None:
            first = i
        entries.append(WallEntry(index=i, subcurve=sub, node_id=node_id, k=k, is_wall=is_wall))
    return WallReport(ordering=ordering, entries=tuple(entries), first_wall_index=first)


def dXi_interval(
    ctx: DegreeContext, i: int, ordering: AdmissibleOrdering
) -> tuple[Fraction, Fraction]:
    """Open bounds (lo, lo+1) for the degree restricted to X_i.

    lo = (h_{X_i} d + h_{X_i} chi(O_X) - h chi(O_{X_i})) / h, which equals
    -chi(O_{X_i}) + h_{X_i} t + k_{X_i}.  A stable line bundle needs an
    integer strictly inside, and one exists iff k_{X_i} is not an integer.
    """
    sub, _node = ordering.attachment(i)
    inv = subcurve_invariants(ctx.curve, sub)
    lo = Fraction(inv.h * ctx.d + inv.h * ctx.chi - ctx.h * inv.chi, ctx.h)
    return lo, lo + 1


def first_wall_index(ctx: DegreeContext, ordering: AdmissibleOrdering) -> int | None:
    """Least attachment index with integral k, or None."""
    for i, (sub, _node) in enumerate(ordering.attachments, start=1):
        if k_of(ctx, sub).denominator == 1:
            return i
    return None
