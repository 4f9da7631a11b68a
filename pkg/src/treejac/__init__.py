"""Exact degree combinatorics of compactified Jacobians on tree-like curves.

The package models a reduced connected projective curve whose components
meet only at disconnecting nodes (a tree dual graph), and computes, for a
polarization and total degree: the stable multidegrees, wall detection,
graded degrees of strictly semistable classes at walls, stability verdicts
for explicit rank-1 torsion-free profiles, a brute-force enumeration
oracle, and wall-and-chamber sweeps over varying polarizations.
"""

from .chambers import (
    ChamberPoint,
    SweepRow,
    SweepTable,
    classify_point,
    repolarize,
    sweep,
    wall_hyperplanes,
)
from .curve import (
    Component,
    CurveGraph,
    NodePoint,
    Subcurve,
    complement,
    connected_parts,
    connected_proper_subcurves,
    global_invariants,
    induced_graph,
    is_connected_subcurve,
    proper_subcurves,
    split_at_nodes,
    subcurve_invariants,
    validate_curve,
)
from .curvefile import (
    CurveFile,
    load_curve_file,
    parse_curve_file,
    serialize_curve_file,
    to_dot,
)
from .degrees import (
    DegreeContext,
    WallEntry,
    WallReport,
    compute_dX,
    detect_walls,
    dXi_interval,
    k_of,
    make_context,
)
from .jh import (
    GradedDecomposition,
    SplitRecord,
    TheoremReport,
    classify,
    compute_jh_degrees,
    final_degrees,
    is_final,
    split_targets,
)
from .ordering import (
    AdmissibleOrdering,
    Attachment,
    attachment_data,
    canonical_ordering,
    ordering_from_root,
    verify_ordering,
)
from .stability import (
    StabilityVerdict,
    TorsionFreeProfile,
    Verdict,
    bounds_check,
    check_semistability,
    enumerate_profiles,
    kernel_slope,
    profile_graded_pieces,
    restriction_degree,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AdmissibleOrdering",
    "Attachment",
    "ChamberPoint",
    "Component",
    "CurveFile",
    "CurveGraph",
    "DegreeContext",
    "GradedDecomposition",
    "NodePoint",
    "SplitRecord",
    "StabilityVerdict",
    "Subcurve",
    "SweepRow",
    "SweepTable",
    "TheoremReport",
    "TorsionFreeProfile",
    "Verdict",
    "WallEntry",
    "WallReport",
    "attachment_data",
    "bounds_check",
    "canonical_ordering",
    "check_semistability",
    "classify",
    "classify_point",
    "complement",
    "compute_dX",
    "compute_jh_degrees",
    "connected_parts",
    "connected_proper_subcurves",
    "detect_walls",
    "dXi_interval",
    "enumerate_profiles",
    "errors",
    "final_degrees",
    "global_invariants",
    "induced_graph",
    "is_connected_subcurve",
    "is_final",
    "k_of",
    "kernel_slope",
    "load_curve_file",
    "make_context",
    "ordering_from_root",
    "parse_curve_file",
    "profile_graded_pieces",
    "proper_subcurves",
    "repolarize",
    "restriction_degree",
    "serialize_curve_file",
    "split_at_nodes",
    "split_targets",
    "subcurve_invariants",
    "sweep",
    "to_dot",
    "validate_curve",
    "verify_ordering",
    "wall_hyperplanes",
]
