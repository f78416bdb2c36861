"""Intersection matrices and exact integer determinant / definiteness tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import WeightedGraph

Matrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class IntersectionMatrix:
    ordering: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.ordering)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def intersection_matrix(g: WeightedGraph) -> IntersectionMatrix:
    """-e(v) on the diagonal, 1 for adjacent vertices; rows by ascending id."""
    ids = g.vertices
    index = {v: i for i, v in enumerate(ids)}
    rows = [[0] * len(ids) for _ in ids]
    for v in ids:
        rows[index[v]][index[v]] = -g.weight(v)
    for u, v in g.edges:
        rows[index[u]][index[v]] = rows[index[v]][index[u]] = 1
    return IntersectionMatrix(tuple(ids), tuple(tuple(r) for r in rows))


def _entries(m) -> list[list[int]]:
    if isinstance(m, IntersectionMatrix):
        return m.rows()
    return [list(r) for r in m]


def determinant(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = _entries(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_minors(m) -> list[int]:
    """det of the leading k x k submatrices, k = 1..n.

    Bareiss elimination without pivoting yields them as successive pivots;
    the list stops early (padded with 0) as soon as one vanishes.
    """
    a = _entries(m)
    n = len(a)
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend([0] * (n - k - 1))
            break
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * a[k][j]) // prev
        prev = pivot
    return minors


def is_negative_definite(m) -> bool:
    """Sylvester criterion: (-1)^k det(M_k) > 0 for every leading minor."""
    for k, minor in enumerate(leading_minors(m), start=1):
        if minor == 0 or (minor > 0) != (k % 2 == 0):
            return False
    return True


def is_symmetric(m) -> bool:
    a = _entries(m)
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))
