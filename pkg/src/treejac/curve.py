"""Tree-like curve model: components, intersection nodes, subcurves.

A curve is encoded by its dual graph: one vertex per irreducible component
(carrying the arithmetic genus g_i and the degree h_i of the polarization
restricted to it) and one edge per intersection node.  The curves handled
here are exactly those whose dual graph is a tree, i.e. every intersection
node is a disconnecting ordinary double point.

All types are immutable values; every operation is a pure function, so
values can be shared freely between concurrent workers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    CycleDetected,
    DanglingNodeReference,
    DisconnectedCurve,
    DisconnectedSubcurve,
    DuplicateId,
    EmptySubcurve,
    FullCurve,
    InvalidComponent,
    SelfLoop,
    TooManyComponents,
    UnknownComponent,
    UnknownNode,
)

# Subset enumeration (proper_subcurves and friends) is exponential in the
# number of components; refuse curves where 2^N would get out of hand.
SUBSET_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class Component:
    """Irreducible component: identifier, arithmetic genus, polarization degree."""

    id: str
    genus: int
    h: int

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvalidComponent("component id must be a non-empty string")
        if self.genus < 0:
            raise InvalidComponent(f"component {self.id}: genus must be >= 0")
        if self.h < 1:
            raise InvalidComponent(f"component {self.id}: polarization degree h must be >= 1")

    @property
    def euler_char(self) -> int:
        """chi(O_C) = 1 - genus."""
        return 1 - self.genus


@dataclass(frozen=True)
class NodePoint:
    """Intersection node joining two distinct components."""

    id: str
    joins: tuple[str, str]

    def __post_init__(self):
        object.__setattr__(self, "joins", tuple(self.joins))
        if not isinstance(self.id, str) or not self.id:
            raise InvalidComponent("node id must be a non-empty string")
        if len(self.joins) != 2:
            raise InvalidComponent(f"node {self.id}: joins must name exactly two components")
        if self.joins[0] == self.joins[1]:
            raise SelfLoop(f"node {self.id} joins component {self.joins[0]} to itself")

    def other_end(self, cid: str) -> str:
        a, b = self.joins
        return b if cid == a else a


@dataclass(frozen=True)
class Subcurve:
    """A subset of component ids, not necessarily connected."""

    members: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def of(cls, *ids: str) -> "Subcurve":
        return cls(frozenset(ids))

    @property
    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))

    @property
    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        """Canonical order: fewest components first, ties lexicographic."""
        return (len(self.members), self.sorted_members)

    def __iter__(self):
        return iter(self.sorted_members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, cid: str) -> bool:
        return cid in self.members

    def __repr__(self) -> str:
        return "{" + ",".join(self.sorted_members) + "}"


@dataclass(frozen=True)
class CurveGraph:
    """A generalized tree-like curve: components plus disconnecting nodes.

    Construction validates the full set of structural invariants: unique
    ids, nodes referencing existing components, no self-loops, no double
    edges, connectedness, and the tree condition |nodes| = N - 1.
    """

    components: tuple[Component, ...]
    nodes: tuple[NodePoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "nodes", tuple(self.nodes))
        _check_structure(self)

    @property
    def component_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.components)

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes)

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise UnknownComponent(f"unknown component {cid}")

    def node(self, nid: str) -> NodePoint:
        for n in self.nodes:
            if n.id == nid:
                return n
        raise UnknownNode(f"unknown node {nid}")

    def full_subcurve(self) -> Subcurve:
        return Subcurve(frozenset(self.component_ids))


class SubcurveData(NamedTuple):
    h: int
    chi: int
    alpha: int
    parts: tuple[Subcurve, ...]


class GlobalInvariants(NamedTuple):
    g: int
    chi: int
    h: int


def _check_structure(X: CurveGraph) -> None:
    seen: set[str] = set()
    for c in X.components:
        if c.id in seen:
            raise DuplicateId(f"duplicate component id {c.id}")
        seen.add(c.id)
    node_seen: set[str] = set()
    pairs: set[frozenset[str]] = set()
    for n in X.nodes:
        if n.id in node_seen:
            raise DuplicateId(f"duplicate node id {n.id}")
        node_seen.add(n.id)
        for cid in n.joins:
            if cid not in seen:
                raise DanglingNodeReference(f"node {n.id} references unknown component {cid}")
        pair = frozenset(n.joins)
        if pair in pairs:
            raise CycleDetected(
                f"nodes {n.id} and an earlier node both join {sorted(pair)}: "
                "a double edge closes a cycle"
            )
        pairs.add(pair)
    if not X.components:
        raise EmptySubcurve("a curve needs at least one component")

    adj: dict[str, list[str]] = {cid: [] for cid in seen}
    for n in X.nodes:
        a, b = n.joins
        adj[a].append(b)
        adj[b].append(a)
    start = X.components[0].id
    reached = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(seen):
        missing = sorted(seen - reached)
        raise DisconnectedCurve(f"components {missing} are not connected to {start}")
    if len(X.nodes) != len(X.components) - 1:
        raise CycleDetected(
            f"{len(X.nodes)} nodes on {len(X.components)} components: the dual "
            "graph contains a cycle, so some node is not disconnecting"
        )


def validate_curve(components: Iterable[Component], nodes: Iterable[NodePoint]) -> CurveGraph:
    """Build a CurveGraph, raising a specific structural error on failure."""
    return CurveGraph(tuple(components), tuple(nodes))


@functools.lru_cache(maxsize=None)
def adjacency(X: CurveGraph) -> dict[str, tuple[tuple[str, str], ...]]:
    """Map component id -> ((neighbor id, node id), ...) sorted by neighbor."""
    out: dict[str, list[tuple[str, str]]] = {cid: [] for cid in X.component_ids}
    for n in X.nodes:
        a, b = n.joins
        out[a].append((b, n.id))
        out[b].append((a, n.id))
    return {cid: tuple(sorted(pairs)) for cid, pairs in out.items()}


def _require_subcurve(X: CurveGraph, D: Subcurve) -> None:
    if not D.members:
        raise EmptySubcurve("subcurve must contain at least one component")
    unknown = D.members - set(X.component_ids)
    if unknown:
        raise UnknownComponent(f"unknown components {sorted(unknown)}")


def connected_parts(X: CurveGraph, D: Subcurve) -> tuple[Subcurve, ...]:
    """Connected components of the subgraph induced on D, in canonical order."""
    _require_subcurve(X, D)
    adj = adjacency(X)
    left = set(D.members)
    parts = []
    while left:
        start = min(left)
        part = {start}
        stack = [start]
        while stack:
            for w, _nid in adj[stack.pop()]:
                if w in left and w not in part:
                    part.add(w)
                    stack.append(w)
        parts.append(Subcurve(frozenset(part)))
        left -= part
    return tuple(sorted(parts, key=lambda s: s.sort_key))


def is_connected_subcurve(X: CurveGraph, D: Subcurve) -> bool:
    return len(connected_parts(X, D)) == 1


def interior_node_ids(X: CurveGraph, D: Subcurve) -> frozenset[str]:
    """Nodes with both endpoints in D."""
    m = D.members
    return frozenset(n.id for n in X.nodes if n.joins[0] in m and n.joins[1] in m)


def crossing_node_ids(X: CurveGraph, D: Subcurve) -> frozenset[str]:
    """Nodes with exactly one endpoint in D."""
    m = D.members
    return frozenset(n.id for n in X.nodes if (n.joins[0] in m) != (n.joins[1] in m))


def subcurve_invariants(X: CurveGraph, D: Subcurve) -> SubcurveData:
    """Polarization degree h_D, Euler characteristic chi(O_D), crossing count.

    chi(O_D) = sum of per-component chi minus the number of nodes interior
    to D (the induced subgraph of a tree is a forest, so each interior node
    glues two sheets and drops chi by one).  alpha counts the intersection
    points of D with its complement.
    """
    _require_subcurve(X, D)
    h = 0
    chi = 0
    for cid in D.members:
        c = X.component(cid)
        h += c.h
        chi += c.euler_char
    chi -= len(interior_node_ids(X, D))
    alpha = len(crossing_node_ids(X, D))
    return SubcurveData(h=h, chi=chi, alpha=alpha, parts=connected_parts(X, D))


def complement(X: CurveGraph, D: Subcurve) -> Subcurve:
    """Components of X not in D; requires D proper."""
    _require_subcurve(X, D)
    rest = frozenset(X.component_ids) - D.members
    if not rest:
        raise FullCurve("the complement of the whole curve is empty")
    return Subcurve(rest)


def global_invariants(X: CurveGraph) -> GlobalInvariants:
    """Whole-curve invariants: chi(O_X) = sum chi_i - (N-1), g = 1 - chi, h = sum h_i."""
    chi = sum(c.euler_char for c in X.components) - (len(X.components) - 1)
    h = sum(c.h for c in X.components)
    return GlobalInvariants(g=1 - chi, chi=chi, h=h)


def induced_graph(X: CurveGraph, D: Subcurve) -> CurveGraph:
    """The sub-curve as a curve in its own right; D must be connected."""
    if not is_connected_subcurve(X, D):
        raise DisconnectedSubcurve(f"subcurve {D} is not connected")
    interior = interior_node_ids(X, D)
    return CurveGraph(
        tuple(c for c in X.components if c.id in D.members),
        tuple(n for n in X.nodes if n.id in interior),
    )


def split_at_nodes(X: CurveGraph, node_ids: Iterable[str]) -> tuple[Subcurve, ...]:
    """Connected component subcurves of X after removing the given nodes."""
    cut = frozenset(node_ids)
    unknown = cut - set(X.node_ids)
    if unknown:
        raise UnknownNode(f"unknown nodes {sorted(unknown)}")
    adj: dict[str, list[str]] = {cid: [] for cid in X.component_ids}
    for n in X.nodes:
        if n.id in cut:
            continue
        a, b = n.joins
        adj[a].append(b)
        adj[b].append(a)
    left = set(X.component_ids)
    parts = []
    while left:
        start = min(left)
        part = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w in left and w not in part:
                    part.add(w)
                    stack.append(w)
        parts.append(Subcurve(frozenset(part)))
        left -= part
    return tuple(sorted(parts, key=lambda s: s.sort_key))


def _cap_enumeration(X: CurveGraph) -> None:
    if len(X.components) > SUBSET_ENUMERATION_CAP:
        raise TooManyComponents(
            f"subset enumeration over {len(X.components)} components exceeds "
            f"the cap of {SUBSET_ENUMERATION_CAP}"
        )


@functools.lru_cache(maxsize=None)
def proper_subcurves(X: CurveGraph) -> tuple[Subcurve, ...]:
    """All proper non-empty subcurves, canonically ordered (size, then lex)."""
    _cap_enumeration(X)
    ids = sorted(X.component_ids)
    n = len(ids)
    out = []
    for mask in range(1, (1 << n) - 1):
        out.append(Subcurve(frozenset(ids[i] for i in range(n) if mask >> i & 1)))
    return tuple(sorted(out, key=lambda s: s.sort_key))


@functools.lru_cache(maxsize=None)
def connected_proper_subcurves(X: CurveGraph) -> tuple[Subcurve, ...]:
    """Proper subcurves whose induced subgraph is connected, canonically ordered."""
    return tuple(D for D in proper_subcurves(X) if is_connected_subcurve(X, D))
