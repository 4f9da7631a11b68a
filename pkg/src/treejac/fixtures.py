"""Built-in curves used by the example reproductions and the test suite."""

from __future__ import annotations

from .curve import Component, CurveGraph, NodePoint


def chain2_unit() -> CurveGraph:
    """Two rational components, unit polarization on each, one node."""
    return CurveGraph(
        (Component("C1", 0, 1), Component("C2", 0, 1)),
        (NodePoint("P1", ("C1", "C2")),),
    )


def chain2_mixed() -> CurveGraph:
    """Two rational components with polarization degrees 1 and 2."""
    return CurveGraph(
        (Component("C1", 0, 1), Component("C2", 0, 2)),
        (NodePoint("P1", ("C1", "C2")),),
    )


def star4() -> CurveGraph:
    """Four rational components: C3 is the hub joined to C1, C2, C4."""
    return CurveGraph(
        (
            Component("C1", 0, 1),
            Component("C2", 0, 1),
            Component("C3", 0, 2),
            Component("C4", 0, 2),
        ),
        (
            NodePoint("P1", ("C1", "C3")),
            NodePoint("P2", ("C2", "C3")),
            NodePoint("P3", ("C3", "C4")),
        ),
    )


def chain2_genus12() -> CurveGraph:
    """Two components of genus 1 and 2, unit polarization; g(X) = 3."""
    return CurveGraph(
        (Component("C1", 1, 1), Component("C2", 2, 1)),
        (NodePoint("P1", ("C1", "C2")),),
    )


def star4_prime() -> CurveGraph:
    """The star4 shape with polarization degrees (1, 1, 2, 3); total 7 is prime."""
    return CurveGraph(
        (
            Component("C1", 0, 1),
            Component("C2", 0, 1),
            Component("C3", 0, 2),
            Component("C4", 0, 3),
        ),
        (
            NodePoint("P1", ("C1", "C3")),
            NodePoint("P2", ("C2", "C3")),
            NodePoint("P3", ("C3", "C4")),
        ),
    )
