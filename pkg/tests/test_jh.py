from fractions import Fraction

import pytest
from hypothesis import given, settings

from treejac import (
    Component,
    CurveGraph,
    Subcurve,
    canonical_ordering,
    classify,
    compute_dX,
    compute_jh_degrees,
    detect_walls,
    final_degrees,
    induced_graph,
    is_final,
    k_of,
    make_context,
    split_targets,
    subcurve_invariants,
    verify_ordering,
)
from treejac.errors import DegreeMismatch, NotAWall, NotFinal
from treejac.fixtures import star4_prime

from helpers import curve_contexts


def side_ordering(X, members, seq):
    return verify_ordering(induced_graph(X, Subcurve(frozenset(members))), seq)


def test_is_final(fixc):
    ctx = make_context(fixc, 2)
    single = Subcurve.of("C4")
    assert is_final(ctx, single, canonical_ordering(induced_graph(fixc, single)))
    assert not is_final(ctx, fixc.full_subcurve(), canonical_ordering(fixc))
    side = Subcurve.of("C1", "C2", "C3")
    sigma = side_ordering(fixc, side.members, ("C1", "C3", "C2"))
    assert k_of(ctx, sigma.attachments[0].subcurve) == Fraction(1, 2)
    assert k_of(ctx, sigma.attachments[1].subcurve) == Fraction(3, 2)
    assert is_final(ctx, side, sigma)


def test_final_degrees_single(fixc):
    ctx = make_context(fixc, 2)
    D = Subcurve.of("C4")
    ordering = canonical_ordering(induced_graph(fixc, D))
    assert final_degrees(ctx, D, ordering, 0) == {"C4": 0}
    with pytest.raises(DegreeMismatch):
        final_degrees(ctx, D, ordering, 1)


def test_final_degrees_side(fixc):
    ctx = make_context(fixc, 2)
    side = Subcurve.of("C1", "C2", "C3")
    sigma = side_ordering(fixc, side.members, ("C1", "C3", "C2"))
    assert final_degrees(ctx, side, sigma, 1) == {"C1": 0, "C3": 1, "C2": 0}


def test_final_degrees_whole_curve_no_wall(fixa):
    ctx = make_context(fixa, 0)
    ordering = canonical_ordering(fixa)
    assert final_degrees(ctx, fixa.full_subcurve(), ordering, 0) == compute_dX(
        ctx, ordering
    )


def test_final_degrees_rejects_non_final(fixc):
    ctx = make_context(fixc, 2)
    with pytest.raises(NotFinal):
        final_degrees(ctx, fixc.full_subcurve(), canonical_ordering(fixc), 2)


def test_split_targets(fixa, fixc, fixd):
    assert split_targets(
        make_context(fixa, 1), Subcurve.of("C1"), Subcurve.of("C2")
    ) == (0, 0)
    assert split_targets(
        make_context(fixc, 2), Subcurve.of("C1", "C2", "C3"), Subcurve.of("C4")
    ) == (1, 0)
    assert split_targets(
        make_context(fixd, 2), Subcurve.of("C1"), Subcurve.of("C2")
    ) == (0, 1)
    with pytest.raises(NotAWall):
        split_targets(make_context(fixa, 0), Subcurve.of("C1"), Subcurve.of("C2"))


def test_jh_chain_wall(fixa):
    ctx = make_context(fixa, 1)
    graded = compute_jh_degrees(ctx, canonical_ordering(fixa))
    assert graded.pieces == {"C1": 0, "C2": 0}
    assert len(graded.splits) == 1
    assert graded.splits[0].node_id == "P1"


def test_jh_star_wall(fixc):
    ctx = make_context(fixc, 2)
    graded = compute_jh_degrees(ctx, canonical_ordering(fixc))
    assert graded.pieces == {"C1": 0, "C2": 0, "C3": 1, "C4": 0}
    assert [s.node_id for s in graded.splits] == ["P3"]
    assert (graded.splits[0].target_y, graded.splits[0].target_z) == (1, 0)


def test_jh_star_wall_with_reordering(fixc):
    ctx = make_context(fixc, 2)
    graded = compute_jh_degrees(
        ctx,
        canonical_ordering(fixc),
        reorderings={frozenset({"C1", "C2", "C3"}): ("C1", "C3", "C2")},
    )
    assert graded.pieces == {"C1": 0, "C2": 0, "C3": 1, "C4": 0}
    used = dict((D.sorted_members, o.sequence) for D, o in graded.orderings_used)
    assert used[("C1", "C2", "C3")] == ("C1", "C3", "C2")


def test_jh_top_residue_cascade():
    # prime total polarization with b = h-1: every node splits and each
    # component keeps h_i(t+1) - chi_i
    X = star4_prime()
    ctx = make_context(X, 6)  # d - g = 6 = 7*0 + 6
    assert (ctx.t, ctx.b) == (0, 6)
    graded = compute_jh_degrees(ctx, canonical_ordering(X))
    assert len(graded.splits) == 3
    assert graded.pieces == {
        c.id: c.h * (ctx.t + 1) - c.euler_char for c in X.components
    }


def test_classify_parts(fixa, fixd):
    rep = classify(make_context(fixa, 0), canonical_ordering(fixa))
    assert not rep.has_wall
    assert rep.stable_multidegree == {"C1": 0, "C2": 0}
    assert rep.graded is None
    assert any("Pic^0(C1) x Pic^0(C2)" in line for line in rep.narrative)

    rep = classify(make_context(fixa, 1), canonical_ordering(fixa))
    assert rep.has_wall
    assert rep.stable_multidegree is None
    assert rep.graded.pieces == {"C1": 0, "C2": 0}

    rep = classify(make_context(fixd, 2), canonical_ordering(fixd))
    assert rep.has_wall
    assert rep.graded.pieces == {"C1": 0, "C2": 1}


def test_classify_single_component():
    X = CurveGraph((Component("C1", 2, 3),), ())
    rep = classify(make_context(X, 5), canonical_ordering(X))
    assert not rep.has_wall
    assert rep.stable_multidegree == {"C1": 5}


@given(curve_contexts())
@settings(max_examples=120, deadline=None)
def test_jh_conservation(ctx):
    ordering = canonical_ordering(ctx.curve)
    graded = compute_jh_degrees(ctx, ordering)
    assert sum(graded.pieces.values()) == ctx.d - len(graded.splits)
    assert len(graded.splits) <= len(ctx.curve.components) - 1

    # each split's parent total is one more than its two targets combined
    targets = {}
    for s in graded.splits:
        parent = Subcurve(s.side_y.members | s.side_z.members)
        parent_total = (
            ctx.d if parent.members == set(ctx.curve.component_ids) else targets[parent]
        )
        assert s.target_y + s.target_z == parent_total - 1
        targets[s.side_y] = s.target_y
        targets[s.side_z] = s.target_z

    # role swap at any split yields the same targets
    for s in graded.splits:
        assert split_targets(ctx, s.side_z, s.side_y) == (s.target_z, s.target_y)


@given(curve_contexts())
@settings(max_examples=100, deadline=None)
def test_jh_agrees_with_dX_off_walls(ctx):
    ordering = canonical_ordering(ctx.curve)
    graded = compute_jh_degrees(ctx, ordering)
    if detect_walls(ctx, ordering).first_wall_index is None:
        assert graded.splits == ()
        assert graded.pieces == compute_dX(ctx, ordering)
    else:
        assert graded.splits


@given(curve_contexts())
@settings(max_examples=80, deadline=None)
def test_jh_pieces_inside_sanity_envelope(ctx):
    graded = compute_jh_degrees(ctx, canonical_ordering(ctx.curve))
    for c in ctx.curve.components:
        single = Subcurve.of(c.id)
        inv = subcurve_invariants(ctx.curve, single)
        center = -inv.chi + inv.h * ctx.t + k_of(ctx, single)
        assert center - 1 <= graded.pieces[c.id] <= center + inv.alpha
