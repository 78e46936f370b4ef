"""Deterministic generators for the named graph families.

Vertex numbering is fixed and documented per family so that search
results and constructive labelings are reproducible bit for bit.
"""

from __future__ import annotations

import random

from .graphs import Graph, GraphError, make_graph


def path(n: int) -> Graph:
    """Path P_n: vertices 0..n-1, edges (i, i+1)."""
    if n < 1:
        raise GraphError("path requires n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise GraphError("cycle requires n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise GraphError("complete requires n >= 1")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star K_{1,n}: vertex 0 is the center, adjacent to 1..n."""
    if n < 1:
        raise GraphError("star requires n >= 1")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def friendship(n: int) -> Graph:
    """Friendship graph F_n: n triangles sharing the central vertex 0.

    Triangle i (1-based) has base vertices 2i-1 and 2i, so the center has
    degree 2n and every other vertex has degree 2.
    """
    if n < 2:
        raise GraphError("friendship requires n >= 2")
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return make_graph(2 * n + 1, edges)


FAMILY_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "friendship": friendship,
}


def random_graph(n: int, rng: random.Random) -> Graph:
    """Erdos-Renyi graph with edge probability 1/2 from a seeded generator."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return make_graph(n, edges)


def random_connected_graph(n: int, rng: random.Random, max_tries: int = 10000) -> Graph:
    """Resample seeded ER(1/2) graphs until one is connected."""
    for _ in range(max_tries):
        g = random_graph(n, rng)
        if g.is_connected():
            return g
    raise GraphError(f"no connected sample after {max_tries} tries (n={n})")
