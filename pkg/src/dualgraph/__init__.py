"""Weighted dual graphs: blowups, blowdowns, and tests for regular,
sandwiched and self-similar graphs."""

from .classify import (
    DefinitelyNot,
    NoWithinBudget,
    RegularityWitness,
    SandwichWitness,
    attach_leaves,
    is_regular,
    is_sandwiched,
    verify_regularity,
    verify_sandwich,
)
from .graph import (
    Embedding,
    GraphError,
    Violation,
    WeightedGraph,
    edge_distance,
    find_embeddings,
    find_isomorphism,
    is_connected,
    link,
    validate,
    valency,
)
from .matrix import IntersectionMatrix, determinant, intersection_matrix, is_negative_definite
from .modification import (
    ModificationError,
    ModSequence,
    ModStep,
    Subgraph,
    TransformMaps,
    apply_sequence,
    blowdown,
    blowdown_candidates,
    blowup_edge,
    blowup_vertex,
    induced_modification,
    total_transform,
)
from .selfsim import (
    BudgetExceeded,
    SelfSimWitness,
    Tower,
    build_tower,
    extract_sandwich,
    is_self_similar,
    plant_witness,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "apply_sequence",
    "attach_leaves",
    "blowdown",
    "blowdown_candidates",
    "blowup_edge",
    "blowup_vertex",
    "BudgetExceeded",
    "build_tower",
    "DefinitelyNot",
    "determinant",
    "edge_distance",
    "Embedding",
    "extract_sandwich",
    "find_embeddings",
    "find_isomorphism",
    "GraphError",
    "induced_modification",
    "intersection_matrix",
    "IntersectionMatrix",
    "is_connected",
    "is_negative_definite",
    "is_regular",
    "is_sandwiched",
    "is_self_similar",
    "link",
    "ModificationError",
    "ModSequence",
    "ModStep",
    "NoWithinBudget",
    "plant_witness",
    "RegularityWitness",
    "SandwichWitness",
    "SelfSimWitness",
    "Subgraph",
    "total_transform",
    "Tower",
    "TransformMaps",
    "valency",
    "validate",
    "verify_regularity",
    "verify_sandwich",
    "verify_witness",
    "Violation",
    "WeightedGraph",
]
