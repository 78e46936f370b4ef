"""Neighbourhood corona construction and vertex-id bookkeeping.

The corona of g1 (order n1) and g2 (order n2) lays its n1 + n1*n2
vertices out as: the g1 block on ids 0..n1-1, then the copies of g2 in
row-major order, copy i occupying ids n1 + i*n2 .. n1 + i*n2 + n2 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .graphs import Graph, GraphError, make_graph


@dataclass(frozen=True)
class BaseRole:
    i: int


@dataclass(frozen=True)
class CopyRole:
    i: int  # which copy (index of the g1 vertex it sits over)
    j: int  # which g2 vertex within the copy


Role = Union[BaseRole, CopyRole]


@dataclass(frozen=True)
class CoronaIndex:
    """Bijection between corona vertex ids and their roles."""

    n1: int
    n2: int

    @property
    def total(self) -> int:
        return self.n1 + self.n1 * self.n2

    def base_id(self, i: int) -> int:
        if not 0 <= i < self.n1:
            raise GraphError(f"base index {i} out of range")
        return i

    def copy_id(self, i: int, j: int) -> int:
        if not (0 <= i < self.n1 and 0 <= j < self.n2):
            raise GraphError(f"copy index ({i},{j}) out of range")
        return self.n1 + i * self.n2 + j

    def copy_ids(self, i: int) -> range:
        """Ids of the i-th copy block."""
        start = self.n1 + i * self.n2
        return range(start, start + self.n2)

    def role_of(self, vid: int) -> Role:
        if not 0 <= vid < self.total:
            raise GraphError(f"vertex id {vid} out of range for corona of {self.total}")
        if vid < self.n1:
            return BaseRole(vid)
        off = vid - self.n1
        return CopyRole(off // self.n2, off % self.n2)


def role_of(index: CoronaIndex, vid: int) -> Role:
    return index.role_of(vid)


@dataclass(frozen=True)
class CoronaGraph:
    graph: Graph
    index: CoronaIndex
    g1: Graph
    g2: Graph

    @property
    def n(self) -> int:
        return self.graph.n


def neighbourhood_corona(g1: Graph, g2: Graph) -> CoronaGraph:
    """One copy of g1, n1 copies of g2; the neighbours of g1's i-th vertex
    are joined to every vertex of the i-th copy."""
    if g1.n < 1 or g2.n < 1:
        raise GraphError("corona factors must be non-empty")
    idx = CoronaIndex(g1.n, g2.n)
    edges: list[Tuple[int, int]] = list(g1.edges)
    for i in range(g1.n):
        for (u, v) in g2.edges:
            edges.append((idx.copy_id(i, u), idx.copy_id(i, v)))
    for (a, b) in g1.edges:
        for j in range(g2.n):
            edges.append((a, idx.copy_id(b, j)))
            edges.append((b, idx.copy_id(a, j)))
    return CoronaGraph(make_graph(idx.total, edges), idx, g1, g2)


def splitting_graph(g: Graph) -> CoronaGraph:
    """The corona with K_1, i.e. the splitting graph of g."""
    return neighbourhood_corona(g, make_graph(1, []))
