"""Regular and sandwiched graphs.

A connected graph is regular when it is a modification of the point graph
(one vertex of weight (0, 1)); it is sandwiched when it embeds into a
regular graph. Both tests here return replayable witnesses.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .graph import Embedding, GraphError, Violation, WeightedGraph, is_connected
from .matrix import determinant, intersection_matrix, is_negative_definite
from .modification import (
    ModSequence,
    ModStep,
    VERTEX,
    apply_sequence,
    blowdown,
    blowdown_candidates,
)

log = logging.getLogger(__name__)

POINT = WeightedGraph.point()


@dataclass(frozen=True)
class RegularityWitness:
    blowdown_order: tuple[int, ...]
    construction: ModSequence
    iso: Embedding


@dataclass(frozen=True)
class SandwichWitness:
    leaves: dict[int, int]
    augmented: WeightedGraph
    regularity: RegularityWitness
    embedding: Embedding


@dataclass(frozen=True)
class NoWithinBudget:
    budget: int
    reason: str = "no leaf augmentation within budget is regular"


@dataclass(frozen=True)
class DefinitelyNot:
    reason: str


def regular_prefilter(g: WeightedGraph) -> str | None:
    """Cheap necessary conditions for regularity; returns the failed one."""
    if len(g) == 0:
        return "empty graph"
    if not is_connected(g):
        return "not connected"
    if any(g.genus(v) for v in g):
        return "positive genus"
    m = intersection_matrix(g)
    if not is_negative_definite(m):
        return "intersection matrix not negative definite"
    if abs(determinant(m)) != 1:
        return "|det| != 1"
    return None


def _blowdown_search(g: WeightedGraph) -> list[tuple[int, ModStep]] | None:
    dead: set[WeightedGraph] = set()

    def search(h: WeightedGraph) -> list[tuple[int, ModStep]] | None:
        if len(h) == 1:
            return [] if h.label(h.vertices[0]) == (0, 1) else None
        if h in dead:
            return None
        for v in blowdown_candidates(h):
            smaller, undone = blowdown(h, v)
            rest = search(smaller)
            if rest is not None:
                return [(v, undone)] + rest
        dead.add(h)
        return None

    return search(g)


def _construction(g: WeightedGraph, order: list[tuple[int, ModStep]]) -> RegularityWitness:
    """Reverse a blowdown sequence into a construction from the point graph."""
    if order:
        h = g
        for v, _ in order:
            h, _ = blowdown(h, v)
        last = h.vertices[0]
    else:
        last = g.vertices[0]
    to_point = {last: 0}
    steps = []
    for new_index, (v, undone) in enumerate(reversed(order), start=1):
        if undone.kind == VERTEX:
            steps.append(ModStep.at_vertex(to_point[undone.center], new_index))
        else:
            a, b = undone.center
            steps.append(ModStep.at_edge(to_point[a], to_point[b], new_index))
        to_point[v] = new_index
    seq = ModSequence(POINT, tuple(steps))
    built, _ = apply_sequence(seq)
    iso = Embedding(built, g, {p: v for v, p in to_point.items()})
    return RegularityWitness(tuple(v for v, _ in order), seq, iso)


def is_regular(g: WeightedGraph) -> RegularityWitness | None:
    """Backtracking blowdown search; a witness iff ``g`` reduces to the point."""
    if regular_prefilter(g) is not None:
        return None
    order = _blowdown_search(g)
    if order is None:
        return None
    return _construction(g, order)


def verify_regularity(g: WeightedGraph, w: RegularityWitness) -> Violation | None:
    """Replay both halves of the witness from scratch."""
    h = g
    for v in w.blowdown_order:
        try:
            h, _ = blowdown(h, v)
        except GraphError as exc:
            return Violation("blowdown", v, f"blowdown of {v} fails: {exc}")
    if len(h) != 1 or h.label(h.vertices[0]) != (0, 1):
        return Violation("blowdown", None, "blowdowns do not end at the point graph")
    if w.construction.base != POINT:
        return Violation("construction", None, "construction does not start at the point graph")
    try:
        built, _ = apply_sequence(w.construction)
    except GraphError as exc:
        return Violation("construction", None, str(exc))
    if w.iso.source != built or w.iso.target != g:
        return Violation("iso", None, "isomorphism has wrong source or target")
    problem = w.iso.check()
    if problem is not None:
        return problem
    if len(built) != len(g) or len(built.edge_set) != len(g.edge_set):
        return Violation("iso", None, "map is not bijective")
    return None


def attach_leaves(g: WeightedGraph, leaves: dict[int, int]) -> WeightedGraph:
    """Attach ``n`` fresh (0,1) leaves at each vertex; new ids follow max id."""
    labels = g.labels()
    edges = g.edges
    nxt = g.fresh_id()
    for v in sorted(leaves):
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
        for _ in range(leaves[v]):
            labels[nxt] = (0, 1)
            edges.append((v, nxt))
            nxt += 1
    return WeightedGraph(labels, edges)


def _reduced_rows(g: WeightedGraph, ids: list[int], counts: list[int]) -> list[list[int]]:
    # A (0,1) leaf at v is eliminated by a Schur complement that raises the
    # diagonal entry at v by one and flips the determinant sign, so the
    # augmented matrix is negative definite with |det| = 1 iff this one is.
    m = intersection_matrix(g.subgraph(ids)).rows()
    for i, n in enumerate(counts):
        m[i][i] += n
    return m


def leaf_assignments(g: WeightedGraph, budget: int) -> Iterator[dict[int, int]]:
    """Leaf assignments of total exactly ``budget`` passing the matrix filter.

    Counts are enumerated over vertices in ascending id order, lexicographically
    ascending in the count vector. A vertex of weight e takes at most e - 1
    leaves and every leading principal block must stay negative definite.
    """
    ids = g.vertices
    caps = [g.weight(v) - 1 for v in ids]
    tail = [0] * (len(ids) + 1)
    for i in range(len(ids) - 1, -1, -1):
        tail[i] = tail[i + 1] + caps[i]
    counts: list[int] = []

    def rec(i: int, left: int) -> Iterator[dict[int, int]]:
        if i == len(ids):
            if left == 0:
                rows = _reduced_rows(g, ids, counts)
                if abs(determinant(rows)) == 1:
                    yield {v: n for v, n in zip(ids, counts) if n}
            return
        lo = max(0, left - tail[i + 1])
        for n in range(lo, min(caps[i], left) + 1):
            counts.append(n)
            if is_negative_definite(_reduced_rows(g, ids[: i + 1], counts)):
                yield from rec(i + 1, left - n)
            counts.pop()

    if budget <= tail[0]:
        yield from rec(0, budget)


def default_budget(g: WeightedGraph) -> int:
    return 2 * g.weight_sum()


def sandwich_obstruction(g: WeightedGraph) -> str | None:
    """Proven obstructions to being sandwiched."""
    bad = [v for v in g if g.genus(v) > 0]
    if bad:
        return f"positive genus at {bad[0]}"
    if not is_negative_definite(intersection_matrix(g)):
        return "intersection matrix not negative definite"
    return None


def is_sandwiched(
    g: WeightedGraph, max_budget: int | None = None
) -> SandwichWitness | NoWithinBudget | DefinitelyNot:
    """Search leaf augmentations of ``g`` by increasing total leaf count.

    A ``NoWithinBudget`` answer is not a proof that ``g`` is not sandwiched.
    """
    if len(g) == 0 or not is_connected(g):
        raise GraphError("input graph is not connected")
    reason = sandwich_obstruction(g)
    if reason is not None:
        return DefinitelyNot(reason)
    if max_budget is None:
        max_budget = default_budget(g)
    for budget in range(max_budget + 1):
        for leaves in leaf_assignments(g, budget):
            augmented = attach_leaves(g, leaves)
            regularity = is_regular(augmented)
            if regularity is not None:
                log.debug("sandwiched with %d leaves: %s", budget, leaves)
                emb = Embedding(g, augmented, {v: v for v in g})
                return SandwichWitness(dict(leaves), augmented, regularity, emb)
    return NoWithinBudget(max_budget)


def verify_sandwich(g: WeightedGraph, w: SandwichWitness) -> Violation | None:
    if any(n < 0 for n in w.leaves.values()):
        return Violation("leaves", None, "negative leaf count")
    try:
        expected = attach_leaves(g, w.leaves)
    except GraphError as exc:
        return Violation("leaves", None, str(exc))
    if expected != w.augmented:
        return Violation("augmented", None, "augmented graph is not g plus the declared leaves")
    if w.embedding.source != g or w.embedding.target != w.augmented:
        return Violation("embedding", None, "embedding has wrong source or target")
    problem = w.embedding.check()
    if problem is not None:
        return problem
    return verify_regularity(w.augmented, w.regularity)


def is_regular_greedy(g: WeightedGraph) -> bool:
    """Always blow down the smallest candidate; no backtracking."""
    if regular_prefilter(g) is not None:
        return False
    while len(g) > 1:
        cands = blowdown_candidates(g)
        if not cands:
            return False
        g, _ = blowdown(g, cands[0])
    return g.label(g.vertices[0]) == (0, 1)

