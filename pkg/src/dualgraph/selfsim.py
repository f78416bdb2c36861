"""Self-similar graphs: witnesses, towers, and the two directions of the
equivalence with sandwiched graphs.

A witness ``(base, seq, emb)`` is a nontrivial modification ``Γ' ⇝ Γ`` of the
base graph together with an embedding ``Γ ↪ Γ'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import (
    DefinitelyNot,
    NoWithinBudget,
    RegularityWitness,
    SandwichWitness,
    is_regular,
    is_sandwiched,
    verify_sandwich,
)
from .graph import Embedding, GraphError, Violation, WeightedGraph, identity_embedding
from .modification import (
    VERTEX,
    ModSequence,
    ModStep,
    apply_sequence,
    apply_step,
    induced_modification,
)

DEFAULT_K_MAX = 64


class BudgetExceeded(RuntimeError):
    pass


class InternalInconsistency(RuntimeError):
    """A result that the theory rules out; indicates a bug."""


@dataclass(frozen=True)
class SelfSimWitness:
    base: WeightedGraph
    seq: ModSequence
    emb: Embedding


def verify_witness(w: SelfSimWitness) -> Violation | None:
    if w.seq.base != w.base:
        return Violation("base", None, "sequence does not start at the base graph")
    if not w.seq.steps:
        return Violation("trivial", None, "trivial modification (no steps)")
    try:
        result, _ = apply_sequence(w.seq)
    except GraphError as exc:
        return Violation("sequence", None, str(exc))
    if w.emb.source != w.base:
        return Violation("embedding", None, "embedding source is not the base graph")
    if w.emb.target != result:
        return Violation("embedding", None, "embedding target is not the modified graph")
    return w.emb.check()


def plant_witness(
    g: WeightedGraph, sand: SandwichWitness, at: int | None = None
) -> SelfSimWitness:
    """Blow up ``at`` and grow a copy of the regular supergraph from the new vertex.

    The new root starts as a (0,1) vertex, exactly like the point graph, so
    replaying the regular construction on it produces a copy of the augmented
    graph hanging off ``at``; ``g`` embeds into that copy.
    """
    problem = verify_sandwich(g, sand)
    if problem is not None:
        raise GraphError(f"invalid sandwich witness: {problem}")
    if at is None:
        at = g.vertices[0]
    if at not in g:
        raise GraphError(f"unknown vertex {at}")
    reg: RegularityWitness = sand.regularity
    root = g.fresh_id()
    steps = [ModStep.at_vertex(at, root)]
    current = apply_step(g, steps[0])
    # construction id -> planted id
    corr = {reg.construction.base.vertices[0]: root}
    for step in reg.construction.steps:
        new = current.fresh_id()
        if step.kind == VERTEX:
            planted = ModStep.at_vertex(corr[step.center], new)
        else:
            a, b = step.center
            planted = ModStep.at_edge(corr[a], corr[b], new)
        current = apply_step(current, planted)
        steps.append(planted)
        corr[step.new_id] = new
    seq = ModSequence(g, tuple(steps))
    result, _ = apply_sequence(seq)
    # g -> augmented -> construction result -> planted copy
    to_construction = sand.regularity.iso.inverse().mapping
    mapping = {v: corr[to_construction[sand.embedding(v)]] for v in g}
    witness = SelfSimWitness(g, seq, Embedding(g, result, mapping))
    problem = verify_witness(witness)
    if problem is not None:
        raise InternalInconsistency(f"planted witness fails verification: {problem}")
    return witness


@dataclass(frozen=True)
class TowerStage:
    """Stage k: Γ_k, φ_{k-1}: Γ_{k-1} ↪ Γ_k, Φ_k: Γ ↪ Γ_k, I_k: V(Γ) → V(Γ_k)."""

    graph: WeightedGraph
    step_in: Embedding | None
    composite: Embedding
    strict: dict[int, int]
    seq: ModSequence | None = field(default=None, repr=False)

    def out_vertices(self) -> set[int]:
        """Base vertices whose strict transform avoids the planted image."""
        image = self.composite.image()
        return {v for v, s in self.strict.items() if s not in image}


class Tower:
    """Lazily built sequence Γ_0 = Γ, Γ_1 = Γ', Γ_2, ...

    Γ_{n+1} is the modification of Γ_n induced from ``Γ_n ⇝ Γ_{n-1}`` along
    φ_{n-1}; with the minimal lift this is the same step list as inducing the
    original sequence along Φ_n, and it hands back φ_n directly.
    """

    def __init__(self, w: SelfSimWitness):
        problem = verify_witness(w)
        if problem is not None:
            raise GraphError(f"invalid witness: {problem}")
        self.witness = w
        base = w.base
        result, maps = apply_sequence(w.seq)
        self.stages = [
            TowerStage(base, None, identity_embedding(base), {v: v for v in base}),
            TowerStage(result, w.emb, w.emb, dict(maps.strict), w.seq),
        ]

    def __len__(self) -> int:
        return len(self.stages)

    def __getitem__(self, k: int) -> TowerStage:
        while len(self.stages) <= k:
            self._grow()
        return self.stages[k]

    def _grow(self) -> None:
        last = self.stages[-1]
        seq, phi = induced_modification(last.seq, last.step_in)
        graph, maps = apply_sequence(seq)
        composite = last.composite.compose(phi)
        strict = {v: maps.strict[s] for v, s in last.strict.items()}
        stage = TowerStage(graph, phi, composite, strict, seq)
        if not last.out_vertices() <= stage.out_vertices():
            k = len(self.stages)
            raise InternalInconsistency(f"a vertex re-entered the image at stage {k}")
        self.stages.append(stage)


def build_tower(w: SelfSimWitness, k_max: int) -> Tower:
    tower = Tower(w)
    tower[k_max]
    return tower


@dataclass(frozen=True)
class Extraction:
    regular: WeightedGraph
    embedding: Embedding
    k: int
    regularity: RegularityWitness


def extract_sandwich(w: SelfSimWitness, k_max: int = DEFAULT_K_MAX) -> Extraction:
    """Recover a regular supergraph of ``w.base`` from a self-similarity witness.

    Finds the least k with every strict transform I_k(v) outside Φ_k(Γ),
    deletes those strict transforms from Γ_k and keeps the component holding
    Φ_k(Γ).
    """
    tower = Tower(w)
    base = w.base
    for k in range(1, k_max + 1):
        stage = tower[k]
        if len(stage.out_vertices()) == len(base):
            break
    else:
        raise BudgetExceeded(f"no admissible stage k <= {k_max}")
    pruned = stage.graph.remove(stage.strict.values())
    anchor = stage.composite(base.vertices[0])
    component = next(c for c in pruned.components() if anchor in c)
    regular = pruned.subgraph(component)
    emb = Embedding(base, regular, dict(stage.composite.mapping))
    problem = emb.check()
    if problem is not None:
        raise InternalInconsistency(f"extracted embedding invalid: {problem}")
    regularity = is_regular(regular)
    if regularity is None:
        raise InternalInconsistency(f"pruned component at stage {k} is not regular")
    return Extraction(regular, emb, k, regularity)


def is_self_similar(
    g: WeightedGraph, budget: int | None = None, at: int | None = None
) -> SelfSimWitness | NoWithinBudget | DefinitelyNot:
    verdict = is_sandwiched(g, budget)
    if isinstance(verdict, SandwichWitness):
        return plant_witness(g, verdict, at)
    if isinstance(verdict, DefinitelyNot):
        return DefinitelyNot(f"not sandwiched: {verdict.reason}")
    return NoWithinBudget(verdict.budget, f"sandwiched search: {verdict.reason}")
