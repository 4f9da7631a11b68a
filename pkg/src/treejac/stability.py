"""Slope (semi)stability of rank-1 torsion-free profiles, and the
brute-force enumeration oracle.

A profile records the discrete invariants of a rank-1 torsion-free sheaf:
its degree on each component and the set S of nodes where it is not
locally free.  The total degree is sum(degrees) + |S|, and the degree of
the restriction to a subcurve D adds one for every S-node interior to D.

With the slope normalization where the whole-curve slope equals the total
degree d, a line bundle L is semistable iff for every proper subcurve D
the kernel of L -> L_D has slope at most d:

    mu(L^D) = (h d - h d_D + h_D chi(O_X) - h chi(O_D)) / (h - h_D) <= d
          <=> h d_D >= h_D (d + chi(O_X)) - h chi(O_D),

so the whole check is integer arithmetic.  Stability is the strict form.

A profile with S nonempty splits as a direct sum of the line-bundle
profiles induced on the connected pieces of X cut at S; it is never
stable, and it is semistable exactly when every piece is semistable on
its own curve and all pieces have equal slope.  A reported witness is
always the quantifier subcurve D whose kernel violates (or meets) the
bound, so for a destabilizing direct summand supported on a piece P the
witness is the complement of P.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .curve import (
    CurveGraph,
    Subcurve,
    adjacency,
    complement,
    connected_parts,
    connected_proper_subcurves,
    crossing_node_ids,
    induced_graph,
    interior_node_ids,
    proper_subcurves,
    split_at_nodes,
    subcurve_invariants,
)
from .degrees import DegreeContext, k_of, make_context
from .errors import (
    DegreeMismatch,
    EmptySubcurve,
    FullCurve,
    NotSemistable,
    TooManyComponents,
    UnknownComponent,
    UnknownNode,
)
from .jh import GradedDecomposition, compute_jh_degrees
from .ordering import canonical_ordering

ENUMERATION_COMPONENT_CAP = 8


class Verdict(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class TorsionFreeProfile:
    """Per-component degrees plus the nodes where local freeness fails."""

    degrees: tuple[tuple[str, int], ...]
    non_locally_free: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        object.__setattr__(self, "non_locally_free", frozenset(self.non_locally_free))

    @classmethod
    def from_map(
        cls, degrees: Mapping[str, int], non_locally_free: Iterable[str] = ()
    ) -> "TorsionFreeProfile":
        return cls(tuple(degrees.items()), frozenset(non_locally_free))

    @property
    def degree_map(self) -> dict[str, int]:
        return dict(self.degrees)

    @property
    def is_line_bundle(self) -> bool:
        return not self.non_locally_free

    @property
    def total_degree(self) -> int:
        return sum(v for _c, v in self.degrees) + len(self.non_locally_free)

    def __repr__(self) -> str:
        degs = ",".join(f"{c}={v}" for c, v in self.degrees)
        if self.non_locally_free:
            return f"Profile({degs}; S={{{','.join(sorted(self.non_locally_free))}}})"
        return f"Profile({degs})"


@dataclass(frozen=True)
class StabilityVerdict:
    status: Verdict
    witness: Subcurve | None
    graded: GradedDecomposition | None = None


def _check_profile(ctx: DegreeContext, p: TorsionFreeProfile) -> None:
    X = ctx.curve
    ids = set(X.component_ids)
    given = {c for c, _v in p.degrees}
    if len(given) != len(p.degrees):
        raise DegreeMismatch("profile assigns a degree to some component twice")
    if given != ids:
        extra = sorted(given - ids)
        if extra:
            raise UnknownComponent(f"profile names unknown components {extra}")
        raise UnknownComponent(f"profile omits components {sorted(ids - given)}")
    unknown = p.non_locally_free - set(X.node_ids)
    if unknown:
        raise UnknownNode(f"profile names unknown nodes {sorted(unknown)}")
    if p.total_degree != ctx.d:
        raise DegreeMismatch(
            f"profile total degree {p.total_degree} (degrees plus |S|) "
            f"does not match d = {ctx.d}"
        )


def restriction_degree(X: CurveGraph, p: TorsionFreeProfile, D: Subcurve) -> int:
    """Degree of the restriction-mod-torsion to D.

    Component degrees sum over D; every non-locally-free node interior to
    D contributes one more, exactly as in the whole-curve degree formula.
    """
    degs = p.degree_map
    unknown = D.members - degs.keys()
    if unknown:
        raise UnknownComponent(f"unknown components {sorted(unknown)}")
    if not D.members:
        raise EmptySubcurve("subcurve must contain at least one component")
    total = sum(degs[c] for c in D.members)
    if p.non_locally_free:
        total += len(p.non_locally_free & interior_node_ids(X, D))
    return total


def kernel_slope(ctx: DegreeContext, p: TorsionFreeProfile, D: Subcurve) -> Fraction:
    """Exact slope of the kernel of the restriction map to a proper D."""
    inv = subcurve_invariants(ctx.curve, D)
    if inv.h >= ctx.h:
        raise FullCurve("kernel slopes are defined for proper subcurves only")
    d_D = restriction_degree(ctx.curve, p, D)
    num = ctx.h * ctx.d - ctx.h * d_D + inv.h * ctx.chi - ctx.h * inv.chi
    return Fraction(num, ctx.h - inv.h)


@functools.lru_cache(maxsize=None)
def _subcurve_table(
    X: CurveGraph,
) -> tuple[tuple[Subcurve, tuple[str, ...], frozenset[str], int, int], ...]:
    """(D, members, interior nodes, h_D, chi_D) for all proper D, canonical order."""
    rows = []
    for D in proper_subcurves(X):
        inv = subcurve_invariants(X, D)
        rows.append((D, D.sorted_members, interior_node_ids(X, D), inv.h, inv.chi))
    return tuple(rows)


def _line_bundle_scan(
    ctx: DegreeContext, degs: Mapping[str, int], S: frozenset[str]
) -> tuple[Verdict, Subcurve | None]:
    """Quantify the kernel bound over all proper subcurves.

    Returns the verdict together with the first violating subcurve (for
    unstable) or the first slope-equal subcurve (for strictly semistable)
    in canonical order.
    """
    d_plus_chi = ctx.d + ctx.chi
    h = ctx.h
    equal_at: Subcurve | None = None
    for D, members, interior, h_D, chi_D in _subcurve_table(ctx.curve):
        d_D = sum(degs[c] for c in members)
        if S:
            d_D += len(S & interior)
        bound = h_D * d_plus_chi - h * chi_D
        lhs = h * d_D
        if lhs < bound:
            return Verdict.UNSTABLE, D
        if lhs == bound and equal_at is None:
            equal_at = D
    if equal_at is not None:
        return Verdict.STRICTLY_SEMISTABLE, equal_at
    return Verdict.STABLE, None


@functools.lru_cache(maxsize=None)
def _pieces_of(X: CurveGraph, S: frozenset[str]) -> tuple[Subcurve, ...]:
    return split_at_nodes(X, S)


def check_semistability(
    ctx: DegreeContext, p: TorsionFreeProfile, with_graded: bool = False
) -> StabilityVerdict:
    """Decide the stability status of a profile, with a witness subcurve.

    Line-bundle profiles run the kernel-slope quantifier directly.  A
    profile with S nonempty is the direct sum of its S-cut pieces: it is
    strictly semistable iff the pieces all have slope equal to d and each
    induced piece profile is semistable on its own curve; otherwise it is
    unstable.  It is never stable.

    When `with_graded` is set and the verdict is strictly semistable, the
    graded degrees of the wall-splitting recursion are attached.
    """
    _check_profile(ctx, p)
    degs = p.degree_map
    S = p.non_locally_free

    if not S:
        status, witness = _line_bundle_scan(ctx, degs, S)
    else:
        status, witness = _decomposed_scan(ctx, degs, S)

    graded = None
    if with_graded and status is Verdict.STRICTLY_SEMISTABLE:
        graded = compute_jh_degrees(ctx, canonical_ordering(ctx.curve))
    return StabilityVerdict(status=status, witness=witness, graded=graded)


def _decomposed_scan(
    ctx: DegreeContext, degs: Mapping[str, int], S: frozenset[str]
) -> tuple[Verdict, Subcurve | None]:
    X = ctx.curve
    pieces = _pieces_of(X, S)
    # Slope of the direct summand on piece P, in whole-curve terms:
    # mu(F_P) = h (d_P + chi(O_P)) / h_P - chi(O_X).
    slopes = []
    for P in pieces:
        inv = subcurve_invariants(X, P)
        d_P = sum(degs[c] for c in P.members)
        slopes.append((Fraction(ctx.h * (d_P + inv.chi), inv.h) - ctx.chi, P, d_P))
    top = max(s for s, _P, _d in slopes)
    if any(s != top for s, _P, _d in slopes):
        for s, P, _d in slopes:
            if s == top:
                return Verdict.UNSTABLE, complement(X, P)
    for _s, P, d_P in slopes:
        if len(P) == 1:
            continue
        sub_ctx = make_context(induced_graph(X, P), d_P)
        status, witness = _line_bundle_scan(
            sub_ctx, {c: degs[c] for c in P.members}, frozenset()
        )
        if status is Verdict.UNSTABLE:
            assert witness is not None
            outside = frozenset(X.component_ids) - P.members
            return Verdict.UNSTABLE, Subcurve(witness.members | outside)
    return Verdict.STRICTLY_SEMISTABLE, complement(X, pieces[0])


def bounds_check(
    ctx: DegreeContext, p: TorsionFreeProfile, closed: bool = False
) -> list[tuple[Subcurve, bool]]:
    """Degree-window report over connected proper subcurves.

    For each connected proper D the restricted degree of a stable profile
    must lie strictly between -chi(O_D) + h_D t + k_D and the same plus
    alpha (the number of crossing nodes); semistable profiles satisfy the
    closed version, selected with `closed=True`.
    """
    rows = []
    for D in connected_proper_subcurves(ctx.curve):
        inv = subcurve_invariants(ctx.curve, D)
        lo = -inv.chi + inv.h * ctx.t + k_of(ctx, D)
        hi = lo + inv.alpha
        d_D = restriction_degree(ctx.curve, p, D)
        if closed:
            within = lo <= d_D <= hi
        else:
            within = lo < d_D < hi
        rows.append((D, within))
    return rows


def _sum_vectors(
    bounds: list[tuple[int, int]], total: int
) -> Iterator[tuple[int, ...]]:
    """Integer vectors within per-slot inclusive bounds with a fixed sum."""
    n = len(bounds)
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_lo[i] = suffix_lo[i + 1] + bounds[i][0]
        suffix_hi[i] = suffix_hi[i + 1] + bounds[i][1]

    acc: list[int] = []

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        lo = max(bounds[i][0], remaining - suffix_hi[i + 1])
        hi = min(bounds[i][1], remaining - suffix_lo[i + 1])
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(i + 1, remaining - v)
            acc.pop()

    yield from rec(0, total)


def enumerate_profiles(
    ctx: DegreeContext,
    kind: str,
    window: int = 1,
    max_components: int = ENUMERATION_COMPONENT_CAP,
) -> list[TorsionFreeProfile]:
    """Exhaustively list the profiles of total degree d with the given status.

    `kind` is "stable" or "semistable" (the latter includes stable).  The
    per-component search box is the closed degree window widened by
    `window` on both sides; any semistable profile has its component
    degrees inside the closed window, so the search is complete for every
    window >= 0.  Non-locally-free sets range over all node subsets; they
    are skipped for kind "stable" since a direct sum is never stable.
    """
    if kind not in ("stable", "semistable"):
        raise ValueError(f"kind must be 'stable' or 'semistable', got {kind!r}")
    if window < 0:
        raise ValueError("window must be >= 0")
    X = ctx.curve
    n = len(X.components)
    if n > max_components:
        raise TooManyComponents(
            f"enumeration over {n} components exceeds the cap of {max_components}"
        )
    ids = sorted(X.component_ids)
    adj = adjacency(X)
    bounds = []
    for cid in ids:
        comp = X.component(cid)
        base = -comp.euler_char + comp.h * ctx.t + (comp.h * (ctx.b + 1)) // ctx.h
        alpha = len(adj[cid])
        bounds.append((base - window, base + alpha + window))

    wanted = (
        (Verdict.STABLE,)
        if kind == "stable"
        else (Verdict.STABLE, Verdict.STRICTLY_SEMISTABLE)
    )
    results: list[TorsionFreeProfile] = []
    node_ids = sorted(X.node_ids)
    for size in range(0, len(node_ids) + 1):
        if size > 0 and kind == "stable":
            break
        for S in itertools.combinations(node_ids, size):
            target = ctx.d - size
            for vector in _sum_vectors(bounds, target):
                p = TorsionFreeProfile(tuple(zip(ids, vector)), frozenset(S))
                verdict = check_semistability(ctx, p)
                if verdict.status in wanted:
                    results.append(p)
    return results


def profile_graded_pieces(ctx: DegreeContext, p: TorsionFreeProfile) -> dict[str, int]:
    """Graded degrees of a semistable profile by equal-slope splitting.

    This is the oracle-side construction, independent of the wall
    recursion: find a proper subcurve whose kernel has slope exactly d,
    peel the filtration step it defines (the kernel loses one unit of
    degree at every crossing node), and recurse on both sides until every
    factor is stable.  A stable factor contributes its own multidegree.
    """
    _check_profile(ctx, p)
    X = ctx.curve
    out: dict[str, int] = {}

    def descend(W: Subcurve, degs: dict[str, int]) -> None:
        if len(W) == 1:
            out.update(degs)
            return
        G = induced_graph(X, W)
        d_W = sum(degs.values())
        ctx_W = make_context(G, d_W)
        status, witness = _line_bundle_scan(ctx_W, degs, frozenset())
        if status is Verdict.UNSTABLE:
            raise NotSemistable(f"restriction to {W} is unstable at {witness}")
        if status is Verdict.STABLE:
            out.update(degs)
            return
        assert witness is not None
        for part in connected_parts(G, witness):
            descend(part, {c: degs[c] for c in part.members})
        rest = Subcurve(W.members - witness.members)
        boundary = crossing_node_ids(G, witness)
        twisted = {}
        for c in rest.members:
            drops = sum(1 for nid in boundary if c in G.node(nid).joins)
            twisted[c] = degs[c] - drops
        for part in connected_parts(G, rest):
            descend(part, {c: twisted[c] for c in part.members})

    degs = p.degree_map
    if p.non_locally_free:
        verdict = check_semistability(ctx, p)
        if verdict.status is Verdict.UNSTABLE:
            raise NotSemistable("profile is unstable")
        for piece in _pieces_of(X, p.non_locally_free):
            descend(piece, {c: degs[c] for c in piece.members})
    else:
        descend(X.full_subcurve(), degs)
    return out
