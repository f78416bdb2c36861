"""Library of standard weighted graphs.

Ids run 0..n-1. Chains are numbered along the path; the branch vertex of
D_n and E_n is the last id.
"""

from __future__ import annotations

import re

from .graph import WeightedGraph


def point() -> WeightedGraph:
    return WeightedGraph.point()


def chain(n: int, weight: int = 2) -> WeightedGraph:
    """A_n: a path of n vertices of weight (0, weight)."""
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    return WeightedGraph({i: (0, weight) for i in range(n)}, [(i, i + 1) for i in range(n - 1)])


def d_graph(n: int) -> WeightedGraph:
    """D_n: path 0..n-2 with vertex n-1 attached to n-3."""
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return WeightedGraph({i: (0, 2) for i in range(n)}, edges)


def e_graph(n: int) -> WeightedGraph:
    """E_n: path 0..n-2 with vertex n-1 attached to 2."""
    if n not in (6, 7, 8):
        raise ValueError("E_n needs n in 6, 7, 8")
    edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    return WeightedGraph({i: (0, 2) for i in range(n)}, edges)


def star(center: int, k: int) -> WeightedGraph:
    """Center 0 of weight (0, center) with k leaves 1..k of weight (0, 1)."""
    verts = {0: (0, center)}
    verts.update({i: (0, 1) for i in range(1, k + 1)})
    return WeightedGraph(verts, [(0, i) for i in range(1, k + 1)])


_PATTERNS = [
    (re.compile(r"point$"), lambda m: point()),
    (re.compile(r"A(\d+)$"), lambda m: chain(int(m[1]))),
    (re.compile(r"D(\d+)$"), lambda m: d_graph(int(m[1]))),
    (re.compile(r"E(\d+)$"), lambda m: e_graph(int(m[1]))),
    (re.compile(r"star-(\d+)-(\d+)$"), lambda m: star(int(m[1]), int(m[2]))),
]


def named(name: str) -> WeightedGraph:
    """Build ``point``, ``A<n>``, ``D<n>``, ``E6``/``E7``/``E8`` or ``star-<c>-<k>``."""
    for pattern, build in _PATTERNS:
        m = pattern.match(name)
        if m:
            return build(m)
    raise KeyError(f"unknown graph name {name!r}")


def golden_names() -> list[str]:
    names = ["point"]
    names += [f"A{n}" for n in range(1, 10)]
    names += [f"D{n}" for n in range(4, 9)]
    names += ["E6", "E7", "E8"]
    names += ["star-1-0", "star-2-1", "star-3-2", "star-4-3", "star-5-2"]
    return names
