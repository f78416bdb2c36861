"""Weighted graphs, embeddings and embedding search.

A weighted graph is a finite simple graph whose vertices carry a pair
``(genus, weight)``; for a resolution dual graph the weight is minus the
self-intersection of the corresponding exceptional curve.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]
Label = tuple[int, int]


class GraphError(ValueError):
    """Raised when graph data violates an invariant or an id is unknown."""


@dataclass(frozen=True)
class Violation:
    kind: str
    element: object
    message: str

    def __str__(self) -> str:
        return self.message


def edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


def _vertex_records(vertices) -> list[tuple[object, object, object]]:
    if isinstance(vertices, Mapping):
        return [(vid, lab[0], lab[1]) for vid, lab in vertices.items()]
    return [tuple(rec) for rec in vertices]


def validate(vertices, edges: Iterable = ()) -> Violation | None:
    """Check raw graph data; return the first violated invariant or None.

    ``vertices`` is either a mapping ``id -> (genus, weight)`` or an iterable
    of ``(id, genus, weight)`` records. A WeightedGraph may be passed
    directly, in which case it is always valid.
    """
    if isinstance(vertices, WeightedGraph):
        return None
    seen: set = set()
    for vid, genus, weight in _vertex_records(vertices):
        if not isinstance(vid, int) or isinstance(vid, bool) or vid < 0:
            return Violation("id", vid, f"vertex id {vid!r} is not a non-negative integer")
        if vid in seen:
            return Violation("duplicate-id", vid, f"duplicate vertex id {vid}")
        seen.add(vid)
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            return Violation("genus", vid, f"genus < 0 at {vid}")
        if not isinstance(weight, int) or isinstance(weight, bool) or weight < 1:
            return Violation("weight", vid, f"weight < 1 at {vid}")
    edge_set: set[Edge] = set()
    for pair in edges:
        pair = tuple(pair)
        if len(pair) != 2:
            return Violation("edge", pair, f"edge {list(pair)} is not a pair")
        u, v = pair
        if u == v:
            return Violation("loop", u, f"loop at {u}")
        for end in (u, v):
            if end not in seen:
                return Violation("endpoint", end, f"edge {[u, v]} has unknown endpoint {end}")
        key = edge(u, v)
        if key in edge_set:
            return Violation("multi-edge", key, f"multi-edge {list(key)}")
        edge_set.add(key)
    return None


class WeightedGraph:
    """Immutable weighted simple graph with stable integer vertex ids.

    Equality is id-sensitive; use :func:`find_isomorphism` to compare up to
    relabelling.
    """

    __slots__ = ("_labels", "_edges", "_adj", "_hash")

    def __init__(self, vertices, edges: Iterable = ()):
        edges = [tuple(e) for e in edges]
        problem = validate(vertices, edges)
        if problem is not None:
            raise GraphError(problem.message)
        labels = {vid: (g, e) for vid, g, e in _vertex_records(vertices)}
        self._labels = dict(sorted(labels.items()))
        self._edges = frozenset(edge(u, v) for u, v in edges)
        adj: dict[int, set[int]] = {vid: set() for vid in self._labels}
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {vid: frozenset(ns) for vid, ns in adj.items()}
        self._hash = None

    @classmethod
    def point(cls, vid: int = 0) -> WeightedGraph:
        """The one-vertex graph with weight (0, 1)."""
        return cls({vid: (0, 1)})

    @property
    def vertices(self) -> list[int]:
        return list(self._labels)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self._edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edges

    def labels(self) -> dict[int, Label]:
        return dict(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, vid) -> bool:
        return vid in self._labels

    def __iter__(self) -> Iterator[int]:
        return iter(self._labels)

    def _check(self, vid: int) -> None:
        if vid not in self._labels:
            raise GraphError(f"unknown vertex {vid}")

    def genus(self, vid: int) -> int:
        self._check(vid)
        return self._labels[vid][0]

    def weight(self, vid: int) -> int:
        self._check(vid)
        return self._labels[vid][1]

    def label(self, vid: int) -> Label:
        self._check(vid)
        return self._labels[vid]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edges

    def link(self, vid: int) -> frozenset[int]:
        self._check(vid)
        return self._adj[vid]

    def valency(self, vid: int) -> int:
        return len(self.link(vid))

    def max_id(self) -> int:
        return max(self._labels, default=-1)

    def fresh_id(self) -> int:
        return self.max_id() + 1

    def weight_sum(self) -> int:
        return sum(e for _, e in self._labels.values())

    def key(self) -> tuple:
        return (tuple((v, g, e) for v, (g, e) in self._labels.items()), tuple(self.edges))

    def subgraph(self, keep: Iterable[int]) -> WeightedGraph:
        """Induced subgraph on ``keep``."""
        keep = set(keep)
        for vid in keep:
            self._check(vid)
        return WeightedGraph(
            {v: lab for v, lab in self._labels.items() if v in keep},
            [(u, v) for u, v in self._edges if u in keep and v in keep],
        )

    def remove(self, drop: Iterable[int]) -> WeightedGraph:
        drop = set(drop)
        return self.subgraph(v for v in self._labels if v not in drop)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest id."""
        seen: set[int] = set()
        out = []
        for start in self._labels:
            if start in seen:
                continue
            comp = {start}
            todo = [start]
            while todo:
                x = todo.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        todo.append(y)
            seen |= comp
            out.append(sorted(comp))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __repr__(self) -> str:
        verts = ", ".join(f"{v}:({g},{e})" for v, (g, e) in self._labels.items())
        return f"WeightedGraph({{{verts}}}, {self.edges})"


def link(g: WeightedGraph, v: int) -> frozenset[int]:
    return g.link(v)


def valency(g: WeightedGraph, v: int) -> int:
    return g.valency(v)


def edge_distance(g: WeightedGraph, x: int, y: int) -> int | None:
    """Least number of edges on a path from x to y; None if unreachable."""
    g._check(x)
    g._check(y)
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            return dist[u]
        for w in g.link(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return None


def is_connected(g: WeightedGraph) -> bool:
    return len(g.components()) <= 1


@dataclass(frozen=True, eq=False)
class Embedding:
    """Injective, label-preserving, edge-preserving vertex map."""

    source: WeightedGraph
    target: WeightedGraph
    mapping: Mapping[int, int]

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.mapping.items())

    def image(self) -> set[int]:
        return set(self.mapping.values())

    def check(self) -> Violation | None:
        return check_embedding(self.source, self.target, self.mapping)

    def compose(self, after: Embedding) -> Embedding:
        """``after ∘ self``: first self, then ``after``."""
        return Embedding(
            self.source, after.target, {v: after.mapping[w] for v, w in self.mapping.items()}
        )

    def inverse(self) -> Embedding:
        """Inverse of a bijective embedding."""
        return Embedding(self.target, self.source, {w: v for v, w in self.mapping.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Embedding):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.mapping) == dict(other.mapping)
        )

    def __repr__(self) -> str:
        return f"Embedding({self.pairs()})"


def check_embedding(
    source: WeightedGraph, target: WeightedGraph, mapping: Mapping[int, int]
) -> Violation | None:
    if set(mapping) != set(source.vertices):
        return Violation("domain", sorted(mapping), "map domain differs from source vertices")
    if len(set(mapping.values())) != len(mapping):
        return Violation("injective", None, "map is not injective")
    for v, w in mapping.items():
        if w not in target:
            return Violation("codomain", v, f"{v} maps to unknown target vertex {w}")
        if source.label(v) != target.label(w):
            return Violation(
                "label",
                v,
                f"label mismatch at {v}->{w}: {source.label(v)} != {target.label(w)}",
            )
    for u, v in source.edges:
        if not target.has_edge(mapping[u], mapping[v]):
            return Violation(
                "edge", (u, v), f"edge {[u, v]} not sent to an edge ({mapping[u]}, {mapping[v]})"
            )
    return None


def _search(small: WeightedGraph, big: WeightedGraph, bijective: bool) -> Iterator[dict[int, int]]:
    # Source vertices are assigned in ascending id order and candidates tried in
    # ascending id order, so solutions come out lexicographically sorted.
    order = small.vertices
    if len(order) > len(big):
        return
    if bijective and (len(order) != len(big) or len(small.edge_set) != len(big.edge_set)):
        return
    candidates: dict[int, list[int]] = {}
    for v in order:
        lab, val = small.label(v), small.valency(v)
        cands = [
            w
            for w in big.vertices
            if big.label(w) == lab
            and (big.valency(w) == val if bijective else big.valency(w) >= val)
        ]
        if not cands:
            return
        candidates[v] = cands
    earlier = {
        v: [u for u in small.link(v) if u < v] for v in order
    }
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(mapping)
            return
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            if any(not big.has_edge(mapping[u], w) for u in earlier[v]):
                continue
            mapping[v] = w
            used.add(w)
            yield from extend(i + 1)
            used.discard(w)
            del mapping[v]

    yield from extend(0)


def find_embeddings(small: WeightedGraph, big: WeightedGraph, limit: int = 1) -> list[Embedding]:
    """Up to ``limit`` embeddings of ``small`` into ``big`` in lexicographic order."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    out = []
    for mapping in _search(small, big, bijective=False):
        out.append(Embedding(small, big, mapping))
        if len(out) >= limit:
            break
    return out


def find_isomorphism(a: WeightedGraph, b: WeightedGraph) -> Embedding | None:
    for mapping in _search(a, b, bijective=True):
        return Embedding(a, b, mapping)
    return None


def identity_embedding(g: WeightedGraph) -> Embedding:
    return Embedding(g, g, {v: v for v in g})
