"""Simple modifications (blowups), blowdowns, transforms and induced modifications.

Vertex ids persist through every step, so the strict transform of a vertex
is the vertex with the same id. It is still recorded explicitly in
:class:`TransformMaps`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Union

from .graph import Edge, Embedding, GraphError, Violation, WeightedGraph, check_embedding, edge

VERTEX = "vertex"
EDGE = "edge"


class ModificationError(GraphError):
    """A step cannot be applied, or a blowdown precondition fails."""


@dataclass(frozen=True)
class ModStep:
    kind: Literal["vertex", "edge"]
    center: Union[int, Edge]
    new_id: int

    def __post_init__(self):
        if self.kind == EDGE:
            u, v = self.center
            object.__setattr__(self, "center", edge(u, v))
        elif self.kind != VERTEX:
            raise ValueError(f"unknown step kind {self.kind!r}")

    @classmethod
    def at_vertex(cls, v: int, new_id: int) -> ModStep:
        return cls(VERTEX, v, new_id)

    @classmethod
    def at_edge(cls, u: int, w: int, new_id: int) -> ModStep:
        return cls(EDGE, (u, w), new_id)

    def __str__(self) -> str:
        if self.kind == VERTEX:
            return f"vertex@{self.center}->{self.new_id}"
        return f"edge@<{self.center[0]},{self.center[1]}>->{self.new_id}"


def blowup_vertex(g: WeightedGraph, v: int, new_id: int) -> WeightedGraph:
    if v not in g:
        raise ModificationError(f"unknown vertex {v}")
    if new_id in g:
        raise ModificationError(f"id collision: {new_id} already in graph")
    labels = g.labels()
    gv, ev = labels[v]
    labels[v] = (gv, ev + 1)
    labels[new_id] = (0, 1)
    return WeightedGraph(labels, g.edges + [(v, new_id)])


def blowup_edge(g: WeightedGraph, e: Edge, new_id: int) -> WeightedGraph:
    v0, v1 = e
    if not g.has_edge(v0, v1) or v0 == v1:
        raise ModificationError(f"{[v0, v1]} is not an edge")
    if new_id in g:
        raise ModificationError(f"id collision: {new_id} already in graph")
    labels = g.labels()
    for v in (v0, v1):
        gv, ev = labels[v]
        labels[v] = (gv, ev + 1)
    labels[new_id] = (0, 1)
    center = edge(v0, v1)
    edges = [x for x in g.edges if x != center] + [(v0, new_id), (v1, new_id)]
    return WeightedGraph(labels, edges)


def apply_step(g: WeightedGraph, step: ModStep) -> WeightedGraph:
    if step.kind == VERTEX:
        return blowup_vertex(g, step.center, step.new_id)
    return blowup_edge(g, step.center, step.new_id)


@dataclass(frozen=True)
class ModSequence:
    """A modification ``result ⇝ base`` given as a list of simple steps."""

    base: WeightedGraph
    steps: tuple[ModStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def nontrivial(self) -> bool:
        return bool(self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class TransformMaps:
    strict: dict[int, int]
    result: WeightedGraph
    stages: tuple[WeightedGraph, ...] = field(default=(), repr=False)


def apply_sequence(seq: ModSequence) -> tuple[WeightedGraph, TransformMaps]:
    g = seq.base
    stages = [g]
    for i, step in enumerate(seq.steps):
        try:
            g = apply_step(g, step)
        except ModificationError as exc:
            raise ModificationError(f"step {i} ({step}): {exc}") from None
        stages.append(g)
    strict = {v: v for v in seq.base}
    return g, TransformMaps(strict, g, tuple(stages))


class SequenceBuilder:
    """Accumulates steps with automatic ``max id + 1`` allocation."""

    def __init__(self, base: WeightedGraph):
        self.base = base
        self.graph = base
        self.steps: list[ModStep] = []

    def vertex(self, v: int) -> int:
        return self._push(ModStep.at_vertex(v, self.graph.fresh_id()))

    def edge(self, u: int, w: int) -> int:
        return self._push(ModStep.at_edge(u, w, self.graph.fresh_id()))

    def _push(self, step: ModStep) -> int:
        self.graph = apply_step(self.graph, step)
        self.steps.append(step)
        return step.new_id

    def sequence(self) -> ModSequence:
        return ModSequence(self.base, tuple(self.steps))


@dataclass(frozen=True)
class Subgraph:
    """A vertex set together with a set of edges among those vertices."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    @classmethod
    def of(cls, vertices: Iterable[int], edges: Iterable = ()) -> Subgraph:
        return cls(frozenset(vertices), frozenset(edge(u, v) for u, v in edges))

    @classmethod
    def whole(cls, g: WeightedGraph) -> Subgraph:
        return cls(frozenset(g.vertices), g.edge_set)

    @classmethod
    def induced(cls, g: WeightedGraph, vertices: Iterable[int]) -> Subgraph:
        vs = frozenset(vertices)
        return cls(vs, frozenset(e for e in g.edge_set if e[0] in vs and e[1] in vs))

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        start = min(self.vertices)
        seen = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in adj[x] - seen:
                seen.add(y)
                todo.append(y)
        return seen == self.vertices

    def is_subgraph_of(self, g: WeightedGraph) -> bool:
        return all(v in g for v in self.vertices) and all(
            u in self.vertices and v in self.vertices and g.has_edge(u, v) for u, v in self.edges
        )

    def image(self, mapping) -> Subgraph:
        return Subgraph(
            frozenset(mapping[v] for v in self.vertices),
            frozenset(edge(mapping[u], mapping[v]) for u, v in self.edges),
        )


def total_transform_step(sub: Subgraph, step: ModStep) -> Subgraph:
    verts, edges, new = set(sub.vertices), set(sub.edges), step.new_id
    if step.kind == VERTEX:
        if step.center in verts:
            verts.add(new)
            edges.add(edge(step.center, new))
    else:
        u, w = step.center
        inside = [x for x in (u, w) if x in verts]
        if inside:
            verts.add(new)
            edges.discard(step.center)
            for x in inside:
                edges.add(edge(x, new))
    return Subgraph(frozenset(verts), frozenset(edges))


def total_transform(seq: ModSequence, sub: Subgraph) -> Subgraph:
    """Track a connected subgraph of ``seq.base`` through the modification."""
    if not sub.is_subgraph_of(seq.base):
        raise ModificationError("not a subgraph of the base graph")
    if not sub.is_connected():
        raise ModificationError("subgraph is not connected")
    for step in seq.steps:
        sub = total_transform_step(sub, step)
    return sub


def blowdown_problem(g: WeightedGraph, v: int) -> str | None:
    if v not in g:
        return f"unknown vertex {v}"
    if g.genus(v) != 0:
        return f"vertex {v} has genus {g.genus(v)}, need 0"
    if g.weight(v) != 1:
        return f"vertex {v} has weight {g.weight(v)}, need 1"
    nbrs = sorted(g.link(v))
    if len(nbrs) not in (1, 2):
        return f"vertex {v} has valency {len(nbrs)}, need 1 or 2"
    for u in nbrs:
        if g.weight(u) < 2:
            return f"neighbor {u} of {v} has weight 1"
    if len(nbrs) == 2 and g.has_edge(*nbrs):
        return f"neighbors {nbrs[0]} and {nbrs[1]} of {v} are adjacent"
    return None


def blowdown_candidates(g: WeightedGraph) -> list[int]:
    return [v for v in g if g.label(v) == (0, 1) and blowdown_problem(g, v) is None]


def blowdown(g: WeightedGraph, v: int) -> tuple[WeightedGraph, ModStep]:
    """Contract the (0,1) vertex ``v``; the returned step re-creates it."""
    problem = blowdown_problem(g, v)
    if problem is not None:
        raise ModificationError(problem)
    nbrs = sorted(g.link(v))
    labels = g.labels()
    del labels[v]
    for u in nbrs:
        gu, eu = labels[u]
        labels[u] = (gu, eu - 1)
    edges = [e for e in g.edges if v not in e]
    if len(nbrs) == 2:
        edges.append(tuple(nbrs))
        undone = ModStep.at_edge(nbrs[0], nbrs[1], v)
    else:
        undone = ModStep.at_vertex(nbrs[0], v)
    return WeightedGraph(labels, edges), undone


def induced_modification(
    delta_seq: ModSequence, emb: Embedding
) -> tuple[ModSequence, Embedding]:
    """Lift a modification of Δ along ``emb: Δ ↪ Γ`` to a modification of Γ.

    Every Δ-step centered at v (or at ⟨v, w⟩) becomes the Γ-step centered at
    emb(v) (or at ⟨emb(v), emb(w)⟩); the new Γ vertex gets the next free id
    and the new Δ vertex is sent to it. This is the lift with least total
    weight.
    """
    if emb.source != delta_seq.base:
        raise ModificationError("embedding source is not the base of the sequence")
    problem = emb.check()
    if problem is not None:
        raise ModificationError(f"invalid embedding: {problem}")
    delta, gamma = delta_seq.base, emb.target
    phi = dict(emb.mapping)
    steps = []
    for i, step in enumerate(delta_seq.steps):
        new = gamma.fresh_id()
        if step.kind == VERTEX:
            lifted = ModStep.at_vertex(phi[step.center], new)
        else:
            u, w = step.center
            lifted = ModStep.at_edge(phi[u], phi[w], new)
        try:
            delta = apply_step(delta, step)
        except ModificationError as exc:
            raise ModificationError(f"step {i} ({step}): {exc}") from None
        gamma = apply_step(gamma, lifted)
        phi[step.new_id] = new
        steps.append(lifted)
    return ModSequence(emb.target, tuple(steps)), Embedding(delta, gamma, phi)


def check_compatible(
    gamma_seq: ModSequence, delta_seq: ModSequence, emb: Embedding, emb_after: Embedding
) -> Violation | None:
    """Check that the step lists pair up under rules (i)-(v) of compatibility.

    Walks both sequences simultaneously, carrying the intermediate embedding,
    and reports the first step where the Δ side does not follow the Γ side.
    """
    delta, gamma = delta_seq.base, gamma_seq.base
    if emb.source != delta or emb.target != gamma:
        return Violation("compat", None, "initial embedding does not match the bases")
    phi = dict(emb.mapping)
    d_steps = list(delta_seq.steps)
    for i, gstep in enumerate(gamma_seq.steps):
        image = {w: v for v, w in phi.items()}
        if gstep.kind == VERTEX:
            expected = (
                ModStep.at_vertex(image[gstep.center], None) if gstep.center in image else None
            )
        else:
            a, b = gstep.center
            if a in image and b in image:
                expected = ModStep.at_edge(image[a], image[b], None)
                if not delta.has_edge(image[a], image[b]):
                    return Violation("compat", i, f"step {i}: image edge without a Δ edge")
            elif a in image or b in image:
                expected = ModStep.at_vertex(image[a] if a in image else image[b], None)
            else:
                expected = None
        gamma = apply_step(gamma, gstep)
        if expected is None:
            continue
        if not d_steps:
            return Violation("compat", i, f"step {i}: Δ sequence ended early")
        dstep = d_steps.pop(0)
        if (dstep.kind, dstep.center) != (expected.kind, expected.center):
            return Violation("compat", i, f"step {i}: Δ step {dstep} does not follow {gstep}")
        delta = apply_step(delta, dstep)
        phi[dstep.new_id] = gstep.new_id
        problem = check_embedding(delta, gamma, phi)
        if problem is not None:
            return Violation("compat", i, f"step {i}: {problem}")
    if d_steps:
        return Violation("compat", None, "unused Δ steps")
    if dict(emb_after.mapping) != phi or emb_after.source != delta or emb_after.target != gamma:
        return Violation("compat", None, "final embedding differs from the composed one")
    return None
