"""Exact automorphism-group enumeration and corona structure checks.

The enumerator backtracks over vertex images, pruned by an equitable
partition refinement (iterated (color, multiset of neighbor colors)
coloring to a fixed point).  It returns the FULL group in deterministic
lexicographic order, refusing explicitly when a cap is exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .corona import BaseRole, CoronaGraph
from .graphs import Graph, GraphError, Permutation, canonical_edge, is_automorphism

DEFAULT_VERTEX_CAP = 24
DEFAULT_GROUP_CAP = 10**6


class SearchCapExceeded(RuntimeError):
    """A configured search cap was exceeded; result withheld, not truncated."""


class HypothesisViolation(ValueError):
    """Inputs do not satisfy the hypotheses of the requested structure check."""


class DecompositionError(RuntimeError):
    """A corona automorphism did not decompose as expected."""


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: Tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def non_identity(self) -> Tuple[Permutation, ...]:
        return tuple(p for p in self.elements if not p.is_identity())


def refine_colors(g: Graph, initial: Optional[Sequence[int]] = None) -> Tuple[int, ...]:
    """Equitable refinement: recolor by (color, sorted neighbor colors)
    until stable.  Colors are compressed to 0..k-1 each round."""
    colors = list(initial) if initial is not None else [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return tuple(new)
        colors = new


def enumerate_automorphisms(
    g: Graph,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    group_cap: int = DEFAULT_GROUP_CAP,
) -> AutomorphismGroup:
    """All automorphisms of g, sorted lexicographically by image sequence."""
    if g.n > vertex_cap:
        raise SearchCapExceeded(f"graph order {g.n} exceeds vertex cap {vertex_cap}")
    n = g.n
    if n == 0:
        return AutomorphismGroup((Permutation(()),))
    colors = refine_colors(g)
    masks = g.adjacency_masks()

    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    # branch order: forced singletons first, then largest cells, lowest id first
    order: list[int] = []
    for c in sorted(cells, key=lambda c: (len(cells[c]) != 1, -len(cells[c]), min(cells[c]))):
        order.extend(sorted(cells[c]))

    by_color = {c: sorted(vs) for c, vs in cells.items()}
    img = [-1] * n
    results: list[Tuple[int, ...]] = []

    def extend(depth: int, used: int, img_mask: int) -> None:
        if depth == n:
            if len(results) >= group_cap:
                raise SearchCapExceeded(f"group order exceeds cap {group_cap}")
            results.append(tuple(img))
            return
        v = order[depth]
        required = 0
        for w in g.neighbors(v):
            iw = img[w]
            if iw >= 0:
                required |= 1 << iw
        for u in by_color[colors[v]]:
            bit = 1 << u
            if used & bit:
                continue
            if masks[u] & img_mask != required:
                continue
            img[v] = u
            extend(depth + 1, used | bit, img_mask | bit)
            img[v] = -1

    extend(0, 0, 0)
    results.sort()
    return AutomorphismGroup(tuple(Permutation(t) for t in results))


def restriction_to_base(corona: CoronaGraph, f: Permutation) -> Permutation:
    """The action of f on the g1 block.  Raises DecompositionError if some
    base vertex lands in a copy.

    Base-into-copy automorphisms do exist: in P4 * K1 the pendant base
    vertex can swap with the copy vertex attached to the opposite interior
    vertex, because both have the same degree and compatible
    neighbourhoods.  Callers must treat DecompositionError as a real
    outcome, not an internal error."""
    n1 = corona.index.n1
    if len(f) != corona.n:
        raise GraphError("permutation length does not match corona order")
    images = [f(i) for i in range(n1)]
    if any(w >= n1 for w in images):
        raise DecompositionError("a base vertex maps into a copy of g2")
    return Permutation(tuple(images))


@dataclass(frozen=True)
class CoronaDecomposition:
    """A corona automorphism split into base action, per-copy actions, and
    the permutation of the copy blocks.

    copy_map agrees with the base action except possibly on vertices of g1
    with identical open neighbourhoods (twins), where the copies may be
    permuted independently of the base; both are automorphisms of g1.
    """

    base: Permutation
    copy_perms: Tuple[Permutation, ...]
    copy_map: Tuple[int, ...]


def decompose_corona_automorphism(corona: CoronaGraph, f: Permutation) -> CoronaDecomposition:
    """Split f into (base action, per-copy g2 automorphisms, copy map)."""
    g1, g2, idx = corona.g1, corona.g2, corona.index
    if not (g1.is_connected() and g2.is_connected() and g1.n > 1):
        raise HypothesisViolation("decomposition requires connected factors and n1 > 1")
    base = restriction_to_base(corona, f)
    if not is_automorphism(g1, base):
        raise DecompositionError("base restriction is not an automorphism of g1")
    copy_map = []
    copy_perms = []
    for i in range(g1.n):
        images = [f(v) for v in idx.copy_ids(i)]
        roles = [idx.role_of(w) for w in images]
        if any(isinstance(r, BaseRole) for r in roles):
            raise DecompositionError(f"copy {i} leaks into the base block")
        targets = {r.i for r in roles}
        if len(targets) != 1:
            raise DecompositionError(f"copy {i} is not mapped onto a single copy")
        k = targets.pop()
        h = Permutation(tuple(r.j for r in roles))
        if not is_automorphism(g2, h):
            raise DecompositionError(f"copy action h_{i} is not an automorphism of g2")
        copy_map.append(k)
        copy_perms.append(h)
    if sorted(copy_map) != list(range(g1.n)):
        raise DecompositionError("copy map is not a permutation of the copies")
    if not is_automorphism(g1, Permutation(tuple(copy_map))):
        raise DecompositionError("copy map is not an automorphism of g1")
    dec = CoronaDecomposition(base, tuple(copy_perms), tuple(copy_map))
    if reassemble(corona, dec) != f:
        raise DecompositionError("reassembled permutation differs from the original")
    return dec


def reassemble(corona: CoronaGraph, dec: CoronaDecomposition) -> Permutation:
    """Rebuild the corona permutation from a decomposition."""
    idx = corona.index
    img = [0] * idx.total
    for i in range(idx.n1):
        img[i] = dec.base(i)
    for i in range(idx.n1):
        k = dec.copy_map[i]
        h = dec.copy_perms[i]
        for j in range(idx.n2):
            img[idx.copy_id(i, j)] = idx.copy_id(k, h(j))
    return Permutation(tuple(img))


def induced_edge_permutation(g: Graph, p: Permutation) -> Permutation:
    """The permutation of canonical edge indices induced by a vertex
    automorphism."""
    if not is_automorphism(g, p):
        raise GraphError("not an automorphism; no induced edge permutation")
    index = g.edge_index()
    return Permutation(tuple(index[canonical_edge(p(u), p(v))] for u, v in g.edges))
