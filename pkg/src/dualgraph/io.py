"""Canonical JSON documents for graphs and witnesses.

Graph documents look like::

    {
      "format_version": "1",
      "kind": "graph",
      "vertices": [
        {"id": 0, "genus": 0, "weight": 1}
      ],
      "edges": []
    }

The serializer lays out every document the same way (fixed key order, one
vertex or edge per line) so ``serialize(parse(text)) == text`` for any
canonical text.
"""

from __future__ import annotations

import json
from typing import Any

from .classify import RegularityWitness, SandwichWitness
from .graph import Embedding, GraphError, WeightedGraph, validate
from .modification import ModSequence, ModStep, apply_sequence
from .selfsim import Extraction, SelfSimWitness

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    """Malformed document; ``kind`` is "syntax" or "invariant"."""

    def __init__(self, message: str, kind: str = "syntax"):
        super().__init__(message)
        self.kind = kind


# -- plain data ---------------------------------------------------------------


def graph_data(g: WeightedGraph) -> dict[str, Any]:
    return {
        "vertices": [{"id": v, "genus": g.genus(v), "weight": g.weight(v)} for v in g],
        "edges": [list(e) for e in g.edges],
    }


def raw_graph(data: Any) -> tuple[list[tuple], list]:
    """Pull vertex records and edges out of a decoded graph object."""
    if not isinstance(data, dict):
        raise DocumentError("graph must be an object")
    try:
        verts = [(r["id"], r["genus"], r["weight"]) for r in data["vertices"]]
        edges = [tuple(e) for e in data.get("edges", [])]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed graph: missing or bad field {exc}") from None
    return verts, edges


def graph_from_data(data: Any) -> WeightedGraph:
    verts, edges = raw_graph(data)
    problem = validate(verts, edges)
    if problem is not None:
        raise DocumentError(problem.message, kind="invariant")
    return WeightedGraph(verts, edges)


def step_data(s: ModStep) -> dict[str, Any]:
    center = list(s.center) if s.kind == "edge" else s.center
    return {"kind": s.kind, "center": center, "new_id": s.new_id}


def step_from_data(d: dict) -> ModStep:
    try:
        center = tuple(d["center"]) if d["kind"] == "edge" else d["center"]
        return ModStep(d["kind"], center, d["new_id"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed step {d!r}: {exc}") from None


def sequence_data(seq: ModSequence) -> dict[str, Any]:
    return {"base": graph_data(seq.base), "steps": [step_data(s) for s in seq.steps]}


def sequence_from_data(d: dict) -> ModSequence:
    return ModSequence(graph_from_data(d["base"]), tuple(step_from_data(s) for s in d["steps"]))


def pairs_data(emb: Embedding) -> list[list[int]]:
    return [list(p) for p in emb.pairs()]


def mapping_from_data(pairs) -> dict[int, int]:
    try:
        return {int(a): int(b) for a, b in pairs}
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"malformed embedding: {exc}") from None


def regularity_data(w: RegularityWitness) -> dict[str, Any]:
    return {
        "blowdown_order": list(w.blowdown_order),
        "construction": sequence_data(w.construction),
        "iso": pairs_data(w.iso),
    }


def regularity_from_data(d: dict, g: WeightedGraph) -> RegularityWitness:
    construction = sequence_from_data(d["construction"])
    try:
        built, _ = apply_sequence(construction)
    except GraphError as exc:
        raise DocumentError(str(exc), kind="invariant") from None
    return RegularityWitness(
        tuple(d["blowdown_order"]), construction, Embedding(built, g, mapping_from_data(d["iso"]))
    )


def sandwich_data(g: WeightedGraph, w: SandwichWitness) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "sandwich-witness",
        "graph": graph_data(g),
        "leaves": [[v, n] for v, n in sorted(w.leaves.items())],
        "augmented": graph_data(w.augmented),
        "regularity": regularity_data(w.regularity),
        "embedding": pairs_data(w.embedding),
    }


def sandwich_from_data(d: dict) -> tuple[WeightedGraph, SandwichWitness]:
    g = graph_from_data(d["graph"])
    augmented = graph_from_data(d["augmented"])
    return g, SandwichWitness(
        {int(v): int(n) for v, n in d["leaves"]},
        augmented,
        regularity_from_data(d["regularity"], augmented),
        Embedding(g, augmented, mapping_from_data(d["embedding"])),
    )


def selfsim_data(w: SelfSimWitness) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "selfsim-witness",
        "base": graph_data(w.base),
        "steps": [step_data(s) for s in w.seq.steps],
        "embedding": pairs_data(w.emb),
    }


def selfsim_from_data(d: dict) -> SelfSimWitness:
    base = graph_from_data(d["base"])
    seq = ModSequence(base, tuple(step_from_data(s) for s in d["steps"]))
    try:
        result, _ = apply_sequence(seq)
    except GraphError:
        # keep the witness inspectable; verify_witness reports the failure
        result = base
    return SelfSimWitness(base, seq, Embedding(base, result, mapping_from_data(d["embedding"])))


def extraction_data(x: Extraction) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "extraction",
        "k": x.k,
        "regular": graph_data(x.regular),
        "embedding": pairs_data(x.embedding),
        "blowdown_order": list(x.regularity.blowdown_order),
    }


# -- canonical text -----------------------------------------------------------


def _dump(value: Any, indent: int) -> str:
    """Objects and lists of containers go one item per line; leaves inline."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        if all(not isinstance(v, (dict, list)) for v in value.values()):
            return json.dumps(value, ensure_ascii=False)
        items = [f"{inner}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in value):
            return json.dumps(value)
        items = [inner + _dump(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(doc: dict[str, Any]) -> str:
    return _dump(doc, 0) + "\n"


def graph_document(g: WeightedGraph, name: str | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"format_version": FORMAT_VERSION, "kind": "graph"}
    if name is not None:
        doc["name"] = name
    doc.update(graph_data(g))
    return doc


def serialize(g: WeightedGraph, name: str | None = None) -> str:
    return dumps(graph_document(g, name))


def loads(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r}")
    return doc


def parse(text: str) -> WeightedGraph:
    doc = loads(text)
    if doc.get("kind", "graph") != "graph":
        raise DocumentError(f"expected a graph document, got {doc.get('kind')!r}")
    return graph_from_data(doc)


def parse_named(text: str) -> tuple[WeightedGraph, str | None]:
    doc = loads(text)
    return graph_from_data(doc), doc.get("name")
