"""Seeded random graph generators and the sandwiched/self-similar round trip.

Generator contract (reproducible from the seed via :class:`random.Random`):

* ``random_regular``: start from the point graph and apply ``depth`` simple
  modifications (depth uniform in 0..max_depth); each center is drawn
  uniformly from the current vertices followed by the current edges.
* ``random_connected_subgraph``: pick a uniform start vertex, then repeatedly
  add a uniform vertex from the frontier, up to a uniform target size in
  1..min(max_size, n). The result is the induced subgraph.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .classify import SandwichWitness, is_regular, is_sandwiched
from .graph import WeightedGraph, find_embeddings
from .matrix import intersection_matrix, is_negative_definite
from .modification import ModSequence, SequenceBuilder, apply_sequence
from .selfsim import extract_sandwich, plant_witness, verify_witness


def random_sequence(base: WeightedGraph, depth: int, rng: random.Random) -> ModSequence:
    builder = SequenceBuilder(base)
    for _ in range(depth):
        g = builder.graph
        centers = [("v", v) for v in g.vertices] + [("e", e) for e in g.edges]
        kind, c = centers[rng.randrange(len(centers))]
        if kind == "v":
            builder.vertex(c)
        else:
            builder.edge(*c)
    return builder.sequence()


def random_regular(rng: random.Random, max_depth: int = 8) -> tuple[WeightedGraph, ModSequence]:
    seq = random_sequence(WeightedGraph.point(), rng.randint(0, max_depth), rng)
    return apply_sequence(seq)[0], seq


def random_connected_subset(g: WeightedGraph, rng: random.Random, max_size: int = 10) -> list[int]:
    ids = g.vertices
    target = rng.randint(1, min(max_size, len(ids)))
    chosen = [ids[rng.randrange(len(ids))]]
    inside = set(chosen)
    while len(chosen) < target:
        frontier = sorted({w for v in chosen for w in g.link(v)} - inside)
        if not frontier:
            break
        w = frontier[rng.randrange(len(frontier))]
        chosen.append(w)
        inside.add(w)
    return sorted(chosen)


def random_connected_subgraph(
    g: WeightedGraph, rng: random.Random, max_size: int = 10
) -> WeightedGraph:
    return g.subgraph(random_connected_subset(g, rng, max_size))


def sandwiched_corpus(seed: int, count: int, max_depth: int = 8, max_size: int = 10):
    """Yield ``(subgraph, regular supergraph)`` pairs."""
    rng = random.Random(seed)
    for _ in range(count):
        regular, _ = random_regular(rng, max_depth)
        yield random_connected_subgraph(regular, rng, max_size), regular


def random_graph(
    rng: random.Random,
    max_vertices: int = 8,
    max_weight: int = 5,
    max_genus: int = 0,
    edge_prob: float = 0.35,
    connected: bool = False,
) -> WeightedGraph:
    """Random simple weighted graph; ``connected`` grows a random spanning tree first."""
    n = rng.randint(1, max_vertices)
    verts = {i: (rng.randint(0, max_genus), rng.randint(1, max_weight)) for i in range(n)}
    edges = set()
    if connected:
        for i in range(1, n):
            edges.add((rng.randrange(i), i))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                edges.add((i, j))
    return WeightedGraph(verts, sorted(edges))


def random_negative_definite(rng: random.Random, max_vertices: int = 8) -> WeightedGraph:
    while True:
        g = random_graph(rng, max_vertices=max_vertices, max_weight=6, edge_prob=0.25)
        if is_negative_definite(intersection_matrix(g)):
            return g


@dataclass
class RoundTripReport:
    total: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.total == self.passed


def roundtrip_case(g: WeightedGraph, budget: int = 16) -> str | None:
    """Sandwiched search, planting and extraction on one graph; None on success."""
    verdict = is_sandwiched(g, budget)
    if not isinstance(verdict, SandwichWitness):
        return f"is_sandwiched returned {verdict}"
    witness = plant_witness(g, verdict)
    problem = verify_witness(witness)
    if problem is not None:
        return f"plant_witness: {problem}"
    extraction = extract_sandwich(witness)
    if is_regular(extraction.regular) is None:
        return "extracted graph is not regular"
    problem = extraction.embedding.check()
    if problem is not None:
        return f"extracted embedding: {problem}"
    if not find_embeddings(g, extraction.regular, 1):
        return "input does not embed into the extracted graph"
    return None


def roundtrip_suite(seed: int, count: int, budget: int = 16) -> RoundTripReport:
    report = RoundTripReport()
    start = time.perf_counter()
    for i, (g, _) in enumerate(sandwiched_corpus(seed, count)):
        report.total += 1
        problem = roundtrip_case(g, budget)
        if problem is None:
            report.passed += 1
        else:
            report.failures.append(f"case {i}: {problem}")
    report.seconds = time.perf_counter() - start
    return report
