"""Admissible component orderings and their attachment data.

A sequence C_1, ..., C_N of the components is admissible when, for every
i <= N-1, all but one of the connected components of X - C_i consist
entirely of components appearing earlier in the sequence.  Each such index
then determines a connected attachment subcurve X_i (C_i together with the
earlier parts) meeting its complement in exactly one node P_i.  Because the
dual graph is a tree, the parts of X - C_i correspond one-to-one to the
neighbors of C_i, so both X_i and P_i are computed directly from adjacency.

Post-orders of the rooted dual tree always satisfy the condition; they are
the deterministic orderings produced here.  User-supplied sequences are
checked against the condition itself, so admissible orderings that are not
post-orders are accepted too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .curve import CurveGraph, Subcurve, adjacency, crossing_node_ids
from .errors import DuplicateId, IndexOutOfRange, NotAdmissible, UnknownComponent


class Attachment(NamedTuple):
    subcurve: Subcurve
    node_id: str


@dataclass(frozen=True)
class AdmissibleOrdering:
    """A verified ordering with its attachment subcurves X_i and nodes P_i."""

    curve: CurveGraph
    sequence: tuple[str, ...]
    attachments: tuple[Attachment, ...]

    def __len__(self) -> int:
        return len(self.sequence)

    def index_of(self, cid: str) -> int:
        """1-based position of a component in the sequence."""
        try:
            return self.sequence.index(cid) + 1
        except ValueError:
            raise UnknownComponent(f"{cid} is not in this ordering") from None

    def attachment(self, i: int) -> Attachment:
        if not 1 <= i <= len(self.attachments):
            raise IndexOutOfRange(
                f"attachment index {i} outside 1..{len(self.attachments)}"
            )
        return self.attachments[i - 1]


def ordering_from_root(X: CurveGraph, root: str) -> AdmissibleOrdering:
    """Post-order of the dual tree rooted at `root`, children in id order.

    The attachment subcurve of each non-root component is its subtree and
    the attachment node is the edge to its parent.
    """
    if root not in X.component_ids:
        raise UnknownComponent(f"unknown component {root}")
    adj = adjacency(X)
    sequence: list[str] = []
    subtree: dict[str, frozenset[str]] = {}
    parent_node: dict[str, str] = {}

    def visit(v: str, parent: str | None) -> frozenset[str]:
        acc = {v}
        for w, nid in adj[v]:
            if w != parent:
                acc |= visit(w, v)
            else:
                parent_node[v] = nid
        sequence.append(v)
        subtree[v] = frozenset(acc)
        return subtree[v]

    visit(root, None)
    attachments = tuple(
        Attachment(Subcurve(subtree[cid]), parent_node[cid]) for cid in sequence[:-1]
    )
    return AdmissibleOrdering(X, tuple(sequence), attachments)


def canonical_ordering(X: CurveGraph) -> AdmissibleOrdering:
    """The deterministic default: root at the lexicographically greatest id."""
    return ordering_from_root(X, max(X.component_ids))


def verify_ordering(X: CurveGraph, seq: Iterable[str]) -> AdmissibleOrdering:
    """Check the admissibility condition for a user-supplied sequence.

    Raises NotAdmissible at the first index i <= N-1 where two or more
    parts of X - C_i contain later components; otherwise returns the
    ordering with its computed attachments.
    """
    sequence = tuple(seq)
    ids = set(X.component_ids)
    if len(set(sequence)) != len(sequence):
        raise DuplicateId("ordering repeats a component id")
    if set(sequence) != ids:
        extra = sorted(set(sequence) - ids)
        if extra:
            raise UnknownComponent(f"ordering names unknown components {extra}")
        raise UnknownComponent(
            f"ordering omits components {sorted(ids - set(sequence))}"
        )

    index = {cid: i + 1 for i, cid in enumerate(sequence)}
    adj = adjacency(X)
    attachments: list[Attachment] = []
    for i, cid in enumerate(sequence[:-1], start=1):
        # Parts of X - C_i correspond to the neighbors of C_i in the tree.
        late_parts: list[tuple[str, frozenset[str]]] = []
        early_members: set[str] = {cid}
        for w, nid in adj[cid]:
            part = _part_from(adj, w, cid)
            if any(index[m] > i for m in part):
                late_parts.append((nid, part))
            else:
                early_members |= part
        if len(late_parts) > 1:
            offenders = frozenset(
                m for _nid, part in late_parts for m in part if index[m] > i
            )
            raise NotAdmissible(
                i,
                offenders,
                f"position {i} ({cid}): {len(late_parts)} parts of the complement "
                f"contain later components (need exactly one); offenders "
                f"{sorted(offenders)}",
            )
        # Some part holds the component at position i+1, so exactly one is late.
        assert late_parts, "a later component must sit in some part"
        node_id = late_parts[0][0]
        attachments.append(Attachment(Subcurve(frozenset(early_members)), node_id))
    return AdmissibleOrdering(X, sequence, tuple(attachments))


def _part_from(adj, start: str, banned: str) -> frozenset[str]:
    part = {start}
    stack = [start]
    while stack:
        for w, _nid in adj[stack.pop()]:
            if w != banned and w not in part:
                part.add(w)
                stack.append(w)
    return frozenset(part)


def attachment_data(ordering: AdmissibleOrdering, i: int) -> Attachment:
    """The pair (X_i, P_i) stored at 1-based index i."""
    return ordering.attachment(i)


def check_attachment_invariants(ordering: AdmissibleOrdering) -> None:
    """Assert the structural facts every admissible ordering must satisfy.

    Used by tests: each X_i is connected, contains C_i and only earlier
    components, and crosses its complement exactly at P_i; the map i -> P_i
    is injective onto the node set.
    """
    X = ordering.curve
    seen_nodes: set[str] = set()
    for i, (sub, node_id) in enumerate(ordering.attachments, start=1):
        cid = ordering.sequence[i - 1]
        assert cid in sub
        assert all(ordering.index_of(m) <= i for m in sub)
        crossing = crossing_node_ids(X, sub)
        assert crossing == {node_id}
        assert node_id not in seen_nodes
        seen_nodes.add(node_id)
    if len(ordering.sequence) > 1:
        assert seen_nodes == set(X.node_ids)
