"""Exact brute-force oracles for the distinguishing number and index.

Labelings are enumerated as base-k counters in canonical first-use order
(label j+1 may first appear only after label j), with early accept once
no non-identity group element is still consistent with the prefix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .automorphisms import (
    DEFAULT_GROUP_CAP,
    DEFAULT_VERTEX_CAP,
    AutomorphismGroup,
    SearchCapExceeded,
    enumerate_automorphisms,
    induced_edge_permutation,
)
from .graphs import (
    EdgeLabeling,
    Graph,
    GraphError,
    Permutation,
    VertexLabeling,
    edge_labeling,
)

DEFAULT_LABELING_CAP = 10**8


class DegenerateEdgeCase(ValueError):
    """No finite distinguishing index under the pointwise definition
    (some non-identity automorphism fixes every edge; K2 among connected
    graphs)."""


@dataclass(frozen=True)
class DistinguishingReport:
    value: int
    witness: Union[VertexLabeling, EdgeLabeling]
    labelings_tested: int
    group_order: int


def is_distinguishing_vertex(g: Graph, group: AutomorphismGroup, lab: VertexLabeling) -> bool:
    """True iff no non-identity element of the group preserves lab pointwise."""
    if len(lab) != g.n:
        raise GraphError("labeling length does not match graph order")
    for p in group.non_identity():
        if all(lab[v] == lab[p(v)] for v in range(g.n)):
            return False
    return True


def is_distinguishing_edge(g: Graph, group: AutomorphismGroup, lab: EdgeLabeling) -> bool:
    """True iff every non-identity automorphism's induced edge permutation
    moves some label.  An automorphism inducing the identity edge
    permutation preserves every edge labeling."""
    seq = lab.as_sequence(g)
    for p in group.non_identity():
        ep = induced_edge_permutation(g, p)
        if all(seq[i] == seq[ep(i)] for i in range(g.m)):
            return False
    return True


def _search_k(
    count: int,
    k: int,
    pairs: Sequence[Tuple[Tuple[int, ...], Tuple[int, ...]]],
    budget: list[int],
) -> Optional[Tuple[int, ...]]:
    """Lexicographically least canonical k-labeling of `count` items killing
    every permutation in `pairs` (given with inverses), or None."""
    labels: list[int] = []

    def go(t: int, max_used: int, survivors: Sequence[int]) -> Optional[Tuple[int, ...]]:
        if not survivors:
            return tuple(labels) + (1,) * (count - t)
        if t == count:
            return None
        for lab in range(1, min(k, max_used + 1) + 1):
            budget[0] -= 1
            if budget[0] < 0:
                raise SearchCapExceeded("labeling enumeration cap exceeded")
            keep = []
            for i in survivors:
                p, pinv = pairs[i]
                if p[t] < t and labels[p[t]] != lab:
                    continue
                if pinv[t] < t and labels[pinv[t]] != lab:
                    continue
                keep.append(i)
            labels.append(lab)
            found = go(t + 1, max(max_used, lab), keep)
            labels.pop()
            if found is not None:
                return found
        return None

    return go(0, 0, range(len(pairs)))


def _min_labeling(
    count: int,
    perms: Sequence[Tuple[int, ...]],
    labeling_cap: int,
    rng: Optional[random.Random] = None,
    random_tries: int = 200,
) -> Tuple[int, Tuple[int, ...], int]:
    """Minimum k and witness killing all perms; returns (k, labels, tested)."""
    if not perms:
        return 1, (1,) * count, 0
    pairs = []
    for p in perms:
        inv = [0] * count
        for v, w in enumerate(p):
            inv[w] = v
        pairs.append((p, tuple(inv)))
    budget = [labeling_cap]
    for k in range(2, count + 1):
        if rng is not None:
            for _ in range(random_tries):
                cand = tuple(rng.randint(1, k) for _ in range(count))
                if all(any(cand[t] != cand[p[t]] for t in range(count)) for p, _ in pairs):
                    return k, cand, labeling_cap - budget[0]
        found = _search_k(count, k, pairs, budget)
        if found is not None:
            return k, found, labeling_cap - budget[0]
    # all-distinct labels always work, so the loop cannot fall through
    raise AssertionError("no witness found up to count labels")


def distinguishing_number(
    g: Graph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    group_cap: int = DEFAULT_GROUP_CAP,
    labeling_cap: int = DEFAULT_LABELING_CAP,
    rng: Optional[random.Random] = None,
) -> DistinguishingReport:
    """Exact D(g) with a verified witness labeling."""
    group = enumerate_automorphisms(g, vertex_cap, group_cap)
    if group.is_trivial:
        return DistinguishingReport(1, VertexLabeling((1,) * g.n), 0, 1)
    perms = [p.image for p in group.non_identity()]
    k, labels, tested = _min_labeling(g.n, perms, labeling_cap, rng)
    witness = VertexLabeling(labels)
    assert is_distinguishing_vertex(g, group, witness)
    return DistinguishingReport(k, witness, tested, group.order)


def distinguishing_index(
    g: Graph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    group_cap: int = DEFAULT_GROUP_CAP,
    labeling_cap: int = DEFAULT_LABELING_CAP,
    rng: Optional[random.Random] = None,
) -> DistinguishingReport:
    """Exact D'(g) with a verified witness edge labeling."""
    if g.m == 0:
        raise DegenerateEdgeCase("graph has no edges")
    group = enumerate_automorphisms(g, vertex_cap, group_cap)
    if group.is_trivial:
        return DistinguishingReport(1, edge_labeling(g, (1,) * g.m), 0, 1)
    edge_perms = set()
    for p in group.non_identity():
        ep = induced_edge_permutation(g, p)
        if ep.is_identity():
            raise DegenerateEdgeCase(
                "a non-identity automorphism fixes every edge; no finite index"
            )
        edge_perms.add(ep.image)
    k, labels, tested = _min_labeling(g.m, sorted(edge_perms), labeling_cap, rng)
    witness = edge_labeling(g, labels)
    assert is_distinguishing_edge(g, group, witness)
    return DistinguishingReport(k, witness, tested, group.order)
