import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treejac import (
    Component,
    CurveGraph,
    NodePoint,
    Subcurve,
    attachment_data,
    canonical_ordering,
    induced_graph,
    ordering_from_root,
    verify_ordering,
)
from treejac.errors import (
    DuplicateId,
    IndexOutOfRange,
    NotAdmissible,
    UnknownComponent,
)
from treejac.ordering import check_attachment_invariants

from helpers import tree_curves


def path3():
    return CurveGraph(
        (Component("C1", 0, 1), Component("C2", 0, 1), Component("C3", 0, 1)),
        (NodePoint("P1", ("C1", "C2")), NodePoint("P2", ("C2", "C3"))),
    )


def test_canonical_chain(fixa):
    ordering = canonical_ordering(fixa)
    assert ordering.sequence == ("C1", "C2")
    assert ordering.attachments == ((Subcurve.of("C1"), "P1"),)


def test_canonical_star(fixc):
    ordering = canonical_ordering(fixc)
    assert ordering.sequence == ("C1", "C2", "C3", "C4")
    assert ordering.attachments[0] == (Subcurve.of("C1"), "P1")
    assert ordering.attachments[1] == (Subcurve.of("C2"), "P2")
    assert ordering.attachments[2] == (Subcurve.of("C1", "C2", "C3"), "P3")


def test_postorder_of_path():
    ordering = ordering_from_root(path3(), "C3")
    assert ordering.sequence == ("C1", "C2", "C3")
    assert ordering.attachments[1] == (Subcurve.of("C1", "C2"), "P2")


def test_verify_accepts_canonical(fixc):
    ordering = verify_ordering(fixc, ("C1", "C2", "C3", "C4"))
    assert ordering.attachments == canonical_ordering(fixc).attachments


def test_verify_rejects_hub_first(fixc):
    with pytest.raises(NotAdmissible) as err:
        verify_ordering(fixc, ("C3", "C1", "C2", "C4"))
    assert err.value.index == 1
    assert err.value.offenders == {"C1", "C2", "C4"}


def test_verify_rejects_hub_second(fixc):
    # After (C1, C3) the components C2 and C4 sit in two different parts of
    # X - C3, so no admissible ordering of the whole star continues with C3.
    with pytest.raises(NotAdmissible) as err:
        verify_ordering(fixc, ("C1", "C3", "C2", "C4"))
    assert err.value.index == 2


def test_side_reordering_of_star(fixc):
    # The same sequence restricted to the side {C1, C2, C3} is admissible:
    # its second attachment is {C1, C3} hanging at node P2.
    side = induced_graph(fixc, Subcurve.of("C1", "C2", "C3"))
    ordering = verify_ordering(side, ("C1", "C3", "C2"))
    assert ordering.attachments[0] == (Subcurve.of("C1"), "P1")
    assert ordering.attachments[1] == (Subcurve.of("C1", "C3"), "P2")


def test_attachment_data(fixa, fixc):
    ordering = canonical_ordering(fixc)
    assert attachment_data(ordering, 3) == (Subcurve.of("C1", "C2", "C3"), "P3")
    assert attachment_data(ordering, 1) == (Subcurve.of("C1"), "P1")
    assert attachment_data(canonical_ordering(fixa), 1) == (Subcurve.of("C1"), "P1")
    with pytest.raises(IndexOutOfRange):
        attachment_data(ordering, 0)
    with pytest.raises(IndexOutOfRange):
        attachment_data(ordering, 4)


def test_malformed_sequences(fixa):
    with pytest.raises(DuplicateId):
        verify_ordering(fixa, ("C1", "C1"))
    with pytest.raises(UnknownComponent):
        verify_ordering(fixa, ("C1", "C9"))
    with pytest.raises(UnknownComponent):
        verify_ordering(fixa, ("C1",))


def test_single_component_ordering():
    X = CurveGraph((Component("C1", 2, 3),), ())
    ordering = canonical_ordering(X)
    assert ordering.sequence == ("C1",)
    assert ordering.attachments == ()


@given(tree_curves(), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_any_root_gives_admissible_postorder(X, rnd):
    root = rnd.choice(X.component_ids)
    ordering = ordering_from_root(X, root)
    check_attachment_invariants(ordering)
    verified = verify_ordering(X, ordering.sequence)
    assert verified.attachments == ordering.attachments
    check_attachment_invariants(verified)


@given(tree_curves(min_n=2))
@settings(max_examples=40, deadline=None)
def test_attachments_cover_all_nodes(X):
    ordering = canonical_ordering(X)
    assert {node for _sub, node in ordering.attachments} == set(X.node_ids)
