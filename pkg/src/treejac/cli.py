"""Command-line surface.

Subcommands: validate, order, analyze, check, enumerate, chambers,
examples.  Reports go to stdout as JSON (--format json) or plain text
(--format table, the default); errors go to stderr.  Exit codes: 0 on
success, 1 for structural errors, 2 for degree/profile mismatches, 3 when
a resource cap is hit.
"""

from __future__ import annotations

import argparse
import sys

from . import demos
from .chambers import sweep
from .curvefile import CurveFile, load_curve_file, to_dot
from .degrees import detect_walls, make_context
from .errors import (
    CurveError,
    CurveFileError,
    DegreeMismatch,
    SweepTooLarge,
    TooManyComponents,
)
from .jh import classify
from .ordering import AdmissibleOrdering, canonical_ordering, verify_ordering
from .reports import (
    bounds_payload,
    context_payload,
    curve_payload,
    ordering_payload,
    profile_payload,
    sweep_csv,
    sweep_payload,
    theorem_payload,
    to_json,
    to_table,
    verdict_payload,
    wall_payload,
)
from .stability import (
    TorsionFreeProfile,
    bounds_check,
    check_semistability,
    enumerate_profiles,
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CurveFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SweepTooLarge, TooManyComponents) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DegreeMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treejac",
        description="Degree combinatorics of compactified Jacobians on tree-like curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, curve: bool = True) -> None:
        if curve:
            p.add_argument("--curve", required=True, help="curve description file (JSON)")
        p.add_argument(
            "--format", choices=("table", "json"), default="table", help="output format"
        )

    p = sub.add_parser("validate", help="check a curve file and print its invariants")
    common(p)
    p.add_argument("--dot", action="store_true", help="print the dual tree in DOT")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("order", help="print an admissible ordering with attachments")
    common(p)
    p.add_argument("--ordering", help="comma-separated component ids to verify")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("analyze", help="context, k-table, walls and classification")
    common(p)
    p.add_argument("--d", type=int, required=True, help="total degree")
    p.add_argument("--ordering", help="comma-separated component ids to verify")
    p.add_argument(
        "--reorder",
        action="append",
        default=[],
        metavar="IDS=SEQ",
        help="per-side override, e.g. 'C1,C2,C3=C1,C3,C2' (repeatable)",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="stability verdict for one profile")
    common(p)
    p.add_argument("--d", type=int, required=True, help="total degree")
    p.add_argument(
        "--degrees", required=True, metavar="MAP", help="per-component degrees, e.g. 'C1=0,C2=1'"
    )
    p.add_argument(
        "--not-locally-free",
        default="",
        metavar="NODES",
        help="comma-separated node ids where the sheaf is not locally free",
    )
    p.add_argument("--verbose", action="store_true", help="include the degree-window table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="brute-force list of (semi)stable profiles")
    common(p)
    p.add_argument("--d", type=int, required=True, help="total degree")
    p.add_argument(
        "--kind", choices=("stable", "semistable"), default="semistable", help="which profiles"
    )
    p.add_argument("--window", type=int, default=1, help="search window beyond the degree box")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("chambers", help="lattice sweep over polarizations and degrees")
    common(p)
    p.add_argument(
        "--h-range",
        default="",
        metavar="RANGES",
        help="per-component ranges, e.g. 'C1=1:2,C2=2' (missing ids stay fixed)",
    )
    p.add_argument("--d-range", required=True, metavar="LO:HI", help="degree range")
    p.add_argument("--ordering", help="comma-separated component ids to verify")
    p.add_argument("--csv", action="store_true", help="emit CSV rows instead of a report")
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("examples", help="run a built-in demonstration")
    common(p, curve=False)
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.set_defaults(func=cmd_examples)

    return parser


def _emit(payload: dict, fmt: str) -> None:
    sys.stdout.write(to_json(payload) if fmt == "json" else to_table(payload))


def _resolve_ordering(cf: CurveFile, explicit: str | None) -> AdmissibleOrdering:
    if explicit:
        return verify_ordering(cf.curve, _split_ids(explicit))
    if cf.ordering is not None:
        return verify_ordering(cf.curve, cf.ordering)
    return canonical_ordering(cf.curve)


def _split_ids(text: str) -> tuple[str, ...]:
    return tuple(s.strip() for s in text.split(",") if s.strip())


def _parse_degree_map(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise CurveFileError(f"bad degree assignment {chunk!r} (want ID=INT)")
        cid, _, value = chunk.partition("=")
        try:
            out[cid.strip()] = int(value)
        except ValueError:
            raise CurveFileError(f"bad integer in {chunk!r}") from None
    return out


def _parse_reorder_flags(flags: list[str]) -> dict[frozenset, tuple[str, ...]]:
    out: dict[frozenset, tuple[str, ...]] = {}
    for flag in flags:
        if "=" not in flag:
            raise CurveFileError(f"bad --reorder value {flag!r} (want IDS=SEQ)")
        members, _, seq = flag.partition("=")
        out[frozenset(_split_ids(members))] = _split_ids(seq)
    return out


def _parse_ranges(text: str) -> dict[str, tuple[int, int]]:
    out: dict[str, tuple[int, int]] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise CurveFileError(f"bad range {chunk!r} (want ID=LO:HI or ID=VALUE)")
        cid, _, span = chunk.partition("=")
        out[cid.strip()] = _parse_span(span)
    return out


def _parse_span(span: str) -> tuple[int, int]:
    try:
        if ":" in span:
            lo, _, hi = span.partition(":")
            return int(lo), int(hi)
        value = int(span)
        return value, value
    except ValueError:
        raise CurveFileError(f"bad integer range {span!r}") from None


def cmd_validate(args) -> int:
    cf = load_curve_file(args.curve)
    if args.dot:
        sys.stdout.write(to_dot(cf.curve))
        return 0
    payload = {"command": "validate", "ok": True, "curve": curve_payload(cf.curve)}
    _emit(payload, args.format)
    return 0


def cmd_order(args) -> int:
    cf = load_curve_file(args.curve)
    ordering = _resolve_ordering(cf, args.ordering)
    payload = {"command": "order", "ordering": ordering_payload(ordering)}
    _emit(payload, args.format)
    return 0


def cmd_analyze(args) -> int:
    cf = load_curve_file(args.curve)
    ordering = _resolve_ordering(cf, args.ordering)
    ctx = make_context(cf.curve, args.d)
    reorderings = dict(cf.reorderings)
    reorderings.update(_parse_reorder_flags(args.reorder))
    report = classify(ctx, ordering, reorderings or None)
    payload = {
        "command": "analyze",
        "curve": curve_payload(cf.curve),
        "context": context_payload(ctx),
        "ordering": list(ordering.sequence),
        "walls": wall_payload(detect_walls(ctx, ordering)),
        "classification": theorem_payload(report),
    }
    _emit(payload, args.format)
    return 0


def cmd_check(args) -> int:
    cf = load_curve_file(args.curve)
    ctx = make_context(cf.curve, args.d)
    profile = TorsionFreeProfile.from_map(
        _parse_degree_map(args.degrees), _split_ids(args.not_locally_free)
    )
    verdict = check_semistability(ctx, profile, with_graded=True)
    payload = {
        "command": "check",
        "context": context_payload(ctx),
        "profile": profile_payload(profile),
        "verdict": verdict_payload(verdict),
    }
    if args.verbose:
        payload["bounds"] = bounds_payload(bounds_check(ctx, profile))
    _emit(payload, args.format)
    return 0


def cmd_enumerate(args) -> int:
    cf = load_curve_file(args.curve)
    ctx = make_context(cf.curve, args.d)
    profiles = enumerate_profiles(ctx, args.kind, window=args.window)
    items = []
    counts = {"stable": 0, "strictly-semistable": 0}
    for p in profiles:
        verdict = check_semistability(ctx, p)
        counts[verdict.status.value] += 1
        entry = profile_payload(p)
        entry["status"] = verdict.status.value
        items.append(entry)
    payload = {
        "command": "enumerate",
        "context": context_payload(ctx),
        "kind": args.kind,
        "window": args.window,
        "count": len(items),
        "counts": counts,
        "profiles": items,
    }
    _emit(payload, args.format)
    return 0


def cmd_chambers(args) -> int:
    cf = load_curve_file(args.curve)
    ordering = _resolve_ordering(cf, args.ordering)
    table = sweep(
        cf.curve,
        ordering,
        _parse_ranges(args.h_range),
        _parse_span(args.d_range),
    )
    if args.csv:
        sys.stdout.write(sweep_csv(table))
        return 0
    payload = {"command": "chambers", **sweep_payload(table)}
    _emit(payload, args.format)
    return 0


def cmd_examples(args) -> int:
    payload = demos.run_example(args.which)
    _emit(payload, args.format)
    for rel in payload["relations"]:
        mark = "ok" if rel["ok"] else "FAIL"
        sys.stdout.write(f"{rel['name']}: {rel['lhs']} vs {rel['rhs']} [{mark}]\n")
    return 0 if payload["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
