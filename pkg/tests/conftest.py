"""Shared independent oracles for the test suite.

These deliberately use naive full enumeration (no pruning, no canonical
form) so they stay independent of the code paths they check.
"""

from __future__ import annotations

from itertools import permutations, product

from corona_sym.graphs import Graph, Permutation, canonical_edge


def brute_force_automorphisms(g: Graph) -> list[Permutation]:
    """All automorphisms by checking every one of the n! permutations."""
    edge_set = set(g.edges)
    out = []
    for img in permutations(range(g.n)):
        if all(canonical_edge(img[u], img[v]) in edge_set for u, v in g.edges):
            out.append(Permutation(img))
    return out


def brute_force_distinguishing_number(g: Graph) -> int:
    """Minimum k admitting a vertex labeling preserved by no non-identity
    automorphism, by scanning all k^n labelings."""
    autos = [p for p in brute_force_automorphisms(g) if not p.is_identity()]
    if not autos:
        return 1
    for k in range(2, g.n + 1):
        for labels in product(range(1, k + 1), repeat=g.n):
            if all(any(labels[v] != labels[p(v)] for v in range(g.n)) for p in autos):
                return k
    raise AssertionError("unreachable: distinct labels always distinguish")


def brute_force_distinguishing_index(g: Graph) -> int:
    """Minimum k admitting a distinguishing edge labeling, by scanning all
    k^m labelings of the canonical edge sequence."""
    index = g.edge_index()
    autos = []
    for p in brute_force_automorphisms(g):
        if p.is_identity():
            continue
        ep = tuple(index[canonical_edge(p(u), p(v))] for u, v in g.edges)
        autos.append(ep)
    if not autos:
        return 1
    if any(all(ep[i] == i for i in range(g.m)) for ep in autos):
        raise ValueError("degenerate: an automorphism fixes every edge")
    for k in range(2, g.m + 1):
        for labels in product(range(1, k + 1), repeat=g.m):
            if all(any(labels[i] != labels[ep[i]] for i in range(g.m)) for ep in autos):
                return k
    raise AssertionError("unreachable")
