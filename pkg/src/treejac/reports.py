"""Report payloads shared by the CLI: JSON, plain-table, and CSV rendering.

Payloads are plain dicts of JSON-safe values.  Rationals are rendered as
reduced "p/q" strings (plain integers when q = 1), maps are keyed by
component id and emitted in sorted order, so identical inputs always
produce byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .chambers import SweepTable
from .curve import CurveGraph, Subcurve
from .degrees import DegreeContext, WallReport
from .jh import GradedDecomposition, TheoremReport
from .ordering import AdmissibleOrdering
from .stability import StabilityVerdict, TorsionFreeProfile


def fraction_str(q: Fraction) -> str:
    return str(q)


def degree_map_payload(m: dict[str, int]) -> dict[str, int]:
    return {cid: m[cid] for cid in sorted(m)}


def subcurve_payload(D: Subcurve) -> list[str]:
    return list(D.sorted_members)


def curve_payload(X: CurveGraph) -> dict:
    from .curve import global_invariants

    g, chi, h = global_invariants(X)
    return {
        "components": len(X.components),
        "nodes": len(X.nodes),
        "g": g,
        "chi": chi,
        "h": h,
    }


def context_payload(ctx: DegreeContext) -> dict:
    return {"d": ctx.d, "g": ctx.g, "chi": ctx.chi, "h": ctx.h, "t": ctx.t, "b": ctx.b}


def ordering_payload(ordering: AdmissibleOrdering) -> dict:
    return {
        "sequence": list(ordering.sequence),
        "attachments": [
            {"index": i, "members": subcurve_payload(sub), "node": node_id}
            for i, (sub, node_id) in enumerate(ordering.attachments, start=1)
        ],
    }


def wall_payload(report: WallReport) -> dict:
    return {
        "entries": [
            {
                "index": e.index,
                "members": subcurve_payload(e.subcurve),
                "node": e.node_id,
                "k": fraction_str(e.k),
                "wall": e.is_wall,
            }
            for e in report.entries
        ],
        "first_wall_index": report.first_wall_index,
    }


def graded_payload(g: GradedDecomposition) -> dict:
    return {
        "pieces": degree_map_payload(g.pieces),
        "splits": [
            {
                "node": s.node_id,
                "side_y": subcurve_payload(s.side_y),
                "side_z": subcurve_payload(s.side_z),
                "target_y": s.target_y,
                "target_z": s.target_z,
            }
            for s in g.splits
        ],
    }


def theorem_payload(report: TheoremReport) -> dict:
    return {
        "has_wall": report.has_wall,
        "stable_multidegree": (
            None
            if report.stable_multidegree is None
            else degree_map_payload(report.stable_multidegree)
        ),
        "graded": None if report.graded is None else graded_payload(report.graded),
        "narrative": list(report.narrative),
    }


def profile_payload(p: TorsionFreeProfile) -> dict:
    return {
        "degrees": degree_map_payload(p.degree_map),
        "non_locally_free": sorted(p.non_locally_free),
    }


def bounds_payload(rows: list[tuple[Subcurve, bool]]) -> list[dict]:
    return [{"members": subcurve_payload(D), "within": within} for D, within in rows]


def verdict_payload(v: StabilityVerdict) -> dict:
    out: dict = {
        "status": v.status.value,
        "witness": None if v.witness is None else subcurve_payload(v.witness),
    }
    if v.graded is not None:
        out["graded"] = graded_payload(v.graded)
    return out


def sweep_payload(table: SweepTable) -> dict:
    rows = []
    for row in table.rows:
        rows.append(
            {
                "polarization": {cid: h for cid, h in row.point.polarization},
                "d": row.point.d,
                "t": row.point.t,
                "b": row.point.b,
                "chamber": (
                    None if row.point.chamber_id is None else list(row.point.chamber_id)
                ),
                "on_wall": row.point.on_wall,
                "kind": "graded" if row.graded else "stable",
                "degrees": degree_map_payload(row.degrees),
            }
        )
    return {"ordering": list(table.ordering.sequence), "rows": rows}


def sweep_csv(table: SweepTable) -> str:
    ids = sorted(table.ordering.curve.component_ids)
    header = [f"h_{c}" for c in ids] + ["d", "t", "b", "chamber"] + [f"d_{c}" for c in ids]
    lines = [",".join(header)]
    for row in table.rows:
        pol = dict(row.point.polarization)
        chamber = (
            "WALL"
            if row.point.on_wall
            else ";".join(str(v) for v in row.point.chamber_id)
        )
        cells = (
            [str(pol[c]) for c in ids]
            + [str(row.point.d), str(row.point.t), str(row.point.b), chamber]
            + [str(row.degrees[c]) for c in ids]
        )
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def to_table(payload: dict) -> str:
    lines: list[str] = []
    _walk(payload, 0, lines)
    return "\n".join(lines) + "\n"


def _scalar(v) -> bool:
    return v is None or isinstance(v, (str, int, float, bool))


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _walk(value, depth: int, lines: list[str], key: str | None = None) -> None:
    pad = "  " * depth
    label = f"{pad}{key}: " if key is not None else pad
    if _scalar(value):
        lines.append(label + _fmt(value))
        return
    if isinstance(value, list):
        if all(_scalar(v) for v in value):
            lines.append(label + "[" + ", ".join(_fmt(v) for v in value) + "]")
            return
        if key is not None:
            lines.append(f"{pad}{key}:")
        for item in value:
            lines.append(f"{pad}  -")
            _walk_members(item, depth + 2, lines)
        return
    if isinstance(value, dict):
        if key is not None:
            lines.append(f"{pad}{key}:")
            _walk_members(value, depth + 1, lines)
        else:
            _walk_members(value, depth, lines)
        return
    lines.append(label + repr(value))


def _walk_members(value, depth: int, lines: list[str]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _walk(value[k], depth, lines, key=str(k))
    else:
        _walk(value, depth, lines)
