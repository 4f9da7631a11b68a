"""Shared generators for the test suite: random trees and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from treejac import Component, CurveGraph, NodePoint


def random_tree_curve(
    rng: random.Random, n: int, max_genus: int = 3, max_h: int = 5
) -> CurveGraph:
    """A random labelled tree: component i+1 attaches to a random earlier one."""
    comps = tuple(
        Component(f"C{i}", rng.randint(0, max_genus), rng.randint(1, max_h))
        for i in range(1, n + 1)
    )
    nodes = tuple(
        NodePoint(f"P{i}", (f"C{rng.randint(1, i)}", f"C{i + 1}"))
        for i in range(1, n)
    )
    return CurveGraph(comps, nodes)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@st.composite
def tree_curves(draw, min_n=1, max_n=6, max_genus=3, max_h=4):
    n = draw(st.integers(min_n, max_n))
    comps = tuple(
        Component(
            f"C{i}",
            draw(st.integers(0, max_genus)),
            draw(st.integers(1, max_h)),
        )
        for i in range(1, n + 1)
    )
    nodes = tuple(
        NodePoint(f"P{i}", (f"C{draw(st.integers(1, i))}", f"C{i + 1}"))
        for i in range(1, n)
    )
    return CurveGraph(comps, nodes)


@st.composite
def curve_contexts(draw, min_n=1, max_n=6, max_genus=3, max_h=4, d_lo=-5, d_hi=15):
    from treejac import make_context

    X = draw(tree_curves(min_n=min_n, max_n=max_n, max_genus=max_genus, max_h=max_h))
    d = draw(st.integers(d_lo, d_hi))
    return make_context(X, d)
