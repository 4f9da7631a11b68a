"""Curve description files: a strict JSON schema plus DOT export.

Schema::

    {
      "components": [{"id": "C1", "genus": 0, "h": 1}, ...],
      "nodes":      [{"id": "P1", "joins": ["C1", "C2"]}, ...],
      "ordering":   ["C1", "C2"],                    # optional
      "reorderings": {"C1,C2,C3": ["C1", "C3", "C2"]} # optional, per split side
    }

Unknown fields are rejected everywhere.  "reorderings" keys are the sorted
member ids of a split side joined by commas; values are the explicit
admissible sequence to use for that side during the splitting recursion.
Serialization preserves the component and node order, so parse/serialize
round-trips are lossless.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .curve import Component, CurveGraph, NodePoint
from .errors import CurveFileError

_COMPONENT_FIELDS = {"id", "genus", "h"}
_NODE_FIELDS = {"id", "joins"}
_TOP_FIELDS = {"components", "nodes", "ordering", "reorderings"}


@dataclass(frozen=True)
class CurveFile:
    curve: CurveGraph
    ordering: tuple[str, ...] | None = None
    reorderings: dict[frozenset, tuple[str, ...]] = field(default_factory=dict)


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise CurveFileError(message)


def _str_list(value, what: str) -> tuple[str, ...]:
    _expect(isinstance(value, list) and all(isinstance(x, str) for x in value),
            f"{what} must be a list of strings")
    return tuple(value)


def parse_curve_file(text: str) -> CurveFile:
    """Parse and fully validate a curve description document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"not valid JSON: {exc}") from exc
    _expect(isinstance(doc, dict), "top level must be an object")
    unknown = set(doc) - _TOP_FIELDS
    _expect(not unknown, f"unknown top-level fields {sorted(unknown)}")
    _expect("components" in doc, "missing 'components'")
    _expect(isinstance(doc["components"], list), "'components' must be a list")

    comps = []
    for raw in doc["components"]:
        _expect(isinstance(raw, dict), "each component must be an object")
        unknown = set(raw) - _COMPONENT_FIELDS
        _expect(not unknown, f"unknown component fields {sorted(unknown)}")
        _expect(_COMPONENT_FIELDS <= set(raw), "components need id, genus and h")
        _expect(isinstance(raw["id"], str), "component id must be a string")
        _expect(isinstance(raw["genus"], int) and not isinstance(raw["genus"], bool),
                f"component {raw['id']}: genus must be an integer")
        _expect(isinstance(raw["h"], int) and not isinstance(raw["h"], bool),
                f"component {raw['id']}: h must be an integer")
        comps.append(Component(raw["id"], raw["genus"], raw["h"]))

    nodes = []
    for raw in doc.get("nodes", []):
        _expect(isinstance(raw, dict), "each node must be an object")
        unknown = set(raw) - _NODE_FIELDS
        _expect(not unknown, f"unknown node fields {sorted(unknown)}")
        _expect(_NODE_FIELDS <= set(raw), "nodes need id and joins")
        _expect(isinstance(raw["id"], str), "node id must be a string")
        joins = _str_list(raw["joins"], f"node {raw['id']}: joins")
        _expect(len(joins) == 2, f"node {raw['id']}: joins must name two components")
        nodes.append(NodePoint(raw["id"], (joins[0], joins[1])))

    curve = CurveGraph(tuple(comps), tuple(nodes))

    ordering = None
    if "ordering" in doc:
        ordering = _str_list(doc["ordering"], "'ordering'")

    reorderings: dict[frozenset, tuple[str, ...]] = {}
    if "reorderings" in doc:
        _expect(isinstance(doc["reorderings"], dict), "'reorderings' must be an object")
        for key, value in doc["reorderings"].items():
            members = frozenset(key.split(","))
            seq = _str_list(value, f"reordering for {key}")
            _expect(frozenset(seq) == members,
                    f"reordering for {key} must be a permutation of those ids")
            reorderings[members] = seq
    return CurveFile(curve=curve, ordering=ordering, reorderings=reorderings)


def serialize_curve_file(cf: CurveFile) -> str:
    doc: dict = {
        "components": [
            {"id": c.id, "genus": c.genus, "h": c.h} for c in cf.curve.components
        ],
        "nodes": [
            {"id": n.id, "joins": [n.joins[0], n.joins[1]]} for n in cf.curve.nodes
        ],
    }
    if cf.ordering is not None:
        doc["ordering"] = list(cf.ordering)
    if cf.reorderings:
        doc["reorderings"] = {
            ",".join(sorted(members)): list(seq)
            for members, seq in sorted(cf.reorderings.items(),
                                       key=lambda kv: sorted(kv[0]))
        }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def load_curve_file(path: str) -> CurveFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_curve_file(fh.read())
    except OSError as exc:
        raise CurveFileError(f"cannot read {path}: {exc}") from exc


def to_dot(X: CurveGraph) -> str:
    """DOT rendering of the dual tree, labels carrying genus and h."""
    lines = ["graph curve {"]
    for c in X.components:
        lines.append(f'  "{c.id}" [label="{c.id} (g={c.genus}, h={c.h})"];')
    for n in X.nodes:
        lines.append(f'  "{n.joins[0]}" -- "{n.joins[1]}" [label="{n.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
