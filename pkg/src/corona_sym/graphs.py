"""Core immutable graph, permutation, and labeling types.

Vertices are dense integer ids 0..n-1.  Labels are positive integers
starting at 1.  Everything here is immutable after construction and safe
to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are kept in canonical order (min endpoint first, then sorted
    lexicographically) so induced edge permutations and edge-labeling
    domains are deterministic.
    """

    n: int
    edges: Tuple[Edge, ...]
    _adj: Tuple[frozenset, ...] = field(repr=False, compare=False, default=())

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for graph of order {self.n}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def adjacency_masks(self) -> list[int]:
        """Neighbor sets as bitmasks, one per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def edge_index(self) -> dict[Edge, int]:
        """Map from canonical edge to its position in `edges`."""
        return {e: i for i, e in enumerate(self.edges)}

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def make_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a simple graph, deduplicating edges and checking endpoints."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        seen.add(canonical_edge(u, v))
    ordered = tuple(sorted(seen))
    adj = [set() for _ in range(n)]
    for u, v in ordered:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, ordered, tuple(frozenset(s) for s in adj))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1, stored as the image sequence."""

    image: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise GraphError(f"not a bijection on 0..{n - 1}: {self.image}")

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __len__(self) -> int:
        return len(self.image)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self*other)(v) = self(other(v))."""
        if len(other) != len(self):
            raise GraphError("length mismatch in composition")
        return Permutation(tuple(self.image[other.image[v]] for v in range(len(self))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def cycles(self) -> list[Tuple[int, ...]]:
        """Cycle decomposition, fixed points omitted, smallest element first."""
        seen = [False] * len(self)
        out = []
        for v in range(len(self)):
            if seen[v]:
                continue
            cyc = [v]
            seen[v] = True
            w = self.image[v]
            while w != v:
                seen[w] = True
                cyc.append(w)
                w = self.image[w]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    """Relabel g's vertices through p."""
    if len(p) != g.n:
        raise GraphError("permutation length does not match graph order")
    return make_graph(g.n, [(p(u), p(v)) for u, v in g.edges])


def is_automorphism(g: Graph, p: Permutation) -> bool:
    """True iff p preserves adjacency and non-adjacency."""
    if len(p) != g.n:
        raise GraphError("permutation length does not match graph order")
    edge_set = set(g.edges)
    return all(canonical_edge(p(u), p(v)) in edge_set for u, v in g.edges)


class LabelingError(ValueError):
    """Labeling does not fit its graph or uses invalid labels."""


@dataclass(frozen=True)
class VertexLabeling:
    """Map from vertex ids to positive integer labels."""

    labels: Tuple[int, ...]

    def __post_init__(self):
        if any(l < 1 for l in self.labels):
            raise LabelingError("labels must be positive integers")

    @property
    def label_count(self) -> int:
        return len(set(self.labels))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class EdgeLabeling:
    """Map from canonical edges to positive integer labels."""

    labels: Mapping[Edge, int]

    def __post_init__(self):
        object.__setattr__(self, "labels", dict(self.labels))
        if any(l < 1 for l in self.labels.values()):
            raise LabelingError("labels must be positive integers")

    @property
    def label_count(self) -> int:
        return len(set(self.labels.values()))

    def __getitem__(self, e: Edge) -> int:
        return self.labels[e]

    def matches(self, g: Graph) -> bool:
        return set(self.labels) == set(g.edges)

    def as_sequence(self, g: Graph) -> Tuple[int, ...]:
        """Labels in the graph's canonical edge order."""
        if not self.matches(g):
            raise LabelingError("labeling domain does not match the edge set")
        return tuple(self.labels[e] for e in g.edges)


def vertex_labeling(labels: Sequence[int]) -> VertexLabeling:
    return VertexLabeling(tuple(labels))


def edge_labeling(g: Graph, labels: Sequence[int]) -> EdgeLabeling:
    """Labeling from a sequence in the graph's canonical edge order."""
    if len(labels) != g.m:
        raise LabelingError("need one label per edge")
    return EdgeLabeling(dict(zip(g.edges, labels)))
