"""Constructive symmetry-breaking labelings for corona products.

Realizes the upper-bound constructions: label inheritance on splitting
graphs, blade tuples for friendship splittings, and label-replacement
patterns for general coronas.  These functions emit witnesses for the
bounds; finding minimum labelings is the oracle's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Sequence, Tuple

from .automorphisms import HypothesisViolation, enumerate_automorphisms
from .corona import neighbourhood_corona, splitting_graph
from .distinguishing import is_distinguishing_edge, is_distinguishing_vertex
from .families import friendship
from .graphs import (
    EdgeLabeling,
    Graph,
    LabelingError,
    VertexLabeling,
)


def y_sequence(d2: int, m: int) -> int:
    """Number of replacement patterns whose maximum new label is d2 + m."""
    if d2 < 1:
        raise ValueError("d2 must be positive")
    if m == 0:
        return 1
    if m == 1:
        return d2
    return d2 + sum(math.comb(m - 1, i) * math.comb(d2, i + 1) for i in range(1, m))


def compute_M(d1: int, d2: int) -> int:
    """Least k with sum(y_0..y_k) >= d1."""
    if d1 < 1 or d2 < 1:
        raise ValueError("d1 and d2 must be positive")
    total = 0
    k = 0
    while True:
        total += y_sequence(d2, k)
        if total >= d1:
            return k
        k += 1


@dataclass(frozen=True)
class ReplacementPattern:
    """Swap some original labels of a base labeling for new labels.

    `replaced` is a subset of the original labels 1..d2, `new_labels` the
    same-size set of fresh labels; the assignment pairs them in
    increasing order.
    """

    replaced: Tuple[int, ...]
    new_labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.replaced) != len(self.new_labels):
            raise ValueError("replaced and new label sets must have equal size")

    def mapping(self) -> dict[int, int]:
        return dict(zip(self.replaced, self.new_labels))

    def apply(self, labels: Sequence[int]) -> Tuple[int, ...]:
        mp = self.mapping()
        return tuple(mp.get(l, l) for l in labels)

    @property
    def max_new_label(self) -> int:
        return max(self.new_labels, default=0)


def replacement_patterns(d2: int, count: int) -> list[ReplacementPattern]:
    """The first `count` patterns in canonical order: m ascending, then
    replaced-set size ascending, then lexicographic new/replaced subsets.
    The verbatim (empty) pattern comes first."""
    pats = [ReplacementPattern((), ())]
    m = 1
    while len(pats) < count:
        top = d2 + m
        for size in range(1, min(m, d2) + 1):
            for extra in combinations(range(d2 + 1, top), size - 1):
                new_set = tuple(sorted(extra + (top,)))
                for rep in combinations(range(1, d2 + 1), size):
                    pats.append(ReplacementPattern(rep, new_set))
        m += 1
    return pats[:count]


class BladeTuple(NamedTuple):
    """Labels (x, y, z, w) of one blade's vertices
    (copy over v_{2i}, v_{2i-1}, v_{2i}, copy over v_{2i-1})."""

    x: int
    y: int
    z: int
    w: int

    @property
    def reversed(self) -> "BladeTuple":
        return BladeTuple(self.w, self.z, self.y, self.x)

    @property
    def is_valid(self) -> bool:
        # a flip-symmetric blade admits an automorphism reversing it
        return self.x != self.w or self.y != self.z

    @property
    def is_canonical(self) -> bool:
        return self <= self.reversed


def blade_capacity(s: int) -> int:
    """Number of canonical valid blade tuples over s labels: (s^4 - s^2)/2."""
    return (s**4 - s**2) // 2


def enumerate_blade_tuples(s: int, count: int) -> list[BladeTuple]:
    """The first `count` canonical valid tuples over labels 1..s, in
    lexicographic order."""
    if count > blade_capacity(s):
        raise ValueError(
            f"{count} blades exceed the capacity {blade_capacity(s)} of {s} labels"
        )
    out = []
    for t in product(range(1, s + 1), repeat=4):
        bt = BladeTuple(*t)
        if bt.is_valid and bt.is_canonical:
            out.append(bt)
            if len(out) == count:
                break
    return out


def _require_connected_nontrivial(g: Graph, min_order: int = 2) -> None:
    if g.n < min_order or not g.is_connected():
        raise HypothesisViolation(
            f"construction requires a connected graph of order >= {min_order}"
        )


def _check_vertex_base(g: Graph, base: VertexLabeling, name: str) -> None:
    group = enumerate_automorphisms(g)
    if not is_distinguishing_vertex(g, group, base):
        raise LabelingError(f"{name} is not a distinguishing labeling")


def _check_edge_base(g: Graph, base: EdgeLabeling, name: str) -> None:
    group = enumerate_automorphisms(g)
    if not is_distinguishing_edge(g, group, base):
        raise LabelingError(f"{name} is not a distinguishing edge labeling")


def splitting_vertex_labeling(g: Graph, base: VertexLabeling) -> VertexLabeling:
    """Labeling of g * K1 where every copy vertex inherits the label of the
    g vertex it sits over."""
    _require_connected_nontrivial(g)
    if len(base) != g.n:
        raise LabelingError("base labeling length does not match g")
    _check_vertex_base(g, base, "base")
    cor = splitting_graph(g)
    labels = [0] * cor.n
    for i in range(g.n):
        labels[i] = base[i]
        labels[cor.index.copy_id(i, 0)] = base[i]
    return VertexLabeling(tuple(labels))


def splitting_edge_labeling(g: Graph, base: EdgeLabeling) -> EdgeLabeling:
    """Edge labeling of g * K1: g keeps its labels, and the edge from the
    copy over v_i to a neighbour v_j inherits the label of (v_i, v_j)."""
    _require_connected_nontrivial(g, min_order=3)
    if not base.matches(g):
        raise LabelingError("base labeling domain does not match g's edges")
    _check_edge_base(g, base, "base")
    cor = splitting_graph(g)
    out: dict[tuple[int, int], int] = {}
    for (a, b) in g.edges:
        lab = base[(a, b)]
        out[(a, b)] = lab
        ca, cb = cor.index.copy_id(a, 0), cor.index.copy_id(b, 0)
        out[(min(a, cb), max(a, cb))] = lab
        out[(min(b, ca), max(b, ca))] = lab
    return EdgeLabeling(out)


def friendship_blade_label_count(n: int) -> int:
    """Fewest labels whose blade capacity covers n blades; equals
    ceil(sqrt((1 + sqrt(8n+1)) / 2))."""
    s = 2
    while blade_capacity(s) < n:
        s += 1
    return s


def friendship_distinguishing_formula(n: int) -> int:
    """Closed form for D(F_n): ceil((1 + sqrt(8n+1)) / 2), evaluated in
    exact integer arithmetic."""
    if n < 2:
        raise ValueError("friendship graphs need n >= 2")
    r = 1
    while (2 * r - 1) ** 2 < 8 * n + 1:
        r += 1
    return r


def friendship_splitting_formula(n: int) -> int:
    """Closed form for D(F_n * K1): ceil(sqrt((1 + sqrt(8n+1)) / 2)),
    evaluated in exact integer arithmetic.  Coincides with the blade
    capacity threshold min{s : (s^4 - s^2)/2 >= n}."""
    if n < 2:
        raise ValueError("friendship graphs need n >= 2")
    s = 1
    while (2 * s * s - 1) ** 2 < 8 * n + 1:
        s += 1
    return s


def friendship_splitting_labeling(n: int) -> VertexLabeling:
    """Distinguishing labeling of F_n * K1: the center and its copy get
    label 1; blade i receives the i-th canonical blade tuple."""
    if n < 2:
        raise ValueError("friendship splitting requires n >= 2")
    s = friendship_blade_label_count(n)
    tuples = enumerate_blade_tuples(s, n)
    g = friendship(n)
    cor = splitting_graph(g)
    idx = cor.index
    labels = [0] * cor.n
    labels[0] = 1
    labels[idx.copy_id(0, 0)] = 1
    for i in range(1, n + 1):
        x, y, z, w = tuples[i - 1]
        labels[idx.copy_id(2 * i, 0)] = x
        labels[2 * i - 1] = y
        labels[2 * i] = z
        labels[idx.copy_id(2 * i - 1, 0)] = w
    return VertexLabeling(tuple(labels))


def _contiguous_labels(lab_values: Sequence[int], name: str) -> int:
    """Distinct label count, requiring the label set to be exactly 1..d."""
    distinct = sorted(set(lab_values))
    if distinct and distinct != list(range(1, len(distinct) + 1)):
        raise LabelingError(f"{name} must use labels 1..d contiguously")
    return len(distinct)


def corona_vertex_labeling(
    g1: Graph, g2: Graph, base1: VertexLabeling, base2: VertexLabeling
) -> VertexLabeling:
    """Labeling of g1 * g2: base vertices keep base1; copies over the k-th
    label class of base1 carry base2 rewritten by the k-th replacement
    pattern (the first class verbatim)."""
    _require_connected_nontrivial(g1)
    _require_connected_nontrivial(g2, min_order=1)
    if len(base1) != g1.n or len(base2) != g2.n:
        raise LabelingError("base labeling length mismatch")
    _check_vertex_base(g1, base1, "base1")
    _check_vertex_base(g2, base2, "base2")
    d1 = _contiguous_labels(base1.labels, "base1")
    d2 = _contiguous_labels(base2.labels, "base2")
    patterns = replacement_patterns(d2, d1)
    cor = neighbourhood_corona(g1, g2)
    labels = [0] * cor.n
    for i in range(g1.n):
        labels[i] = base1[i]
        copy_labels = patterns[base1[i] - 1].apply(base2.labels)
        for j in range(g2.n):
            labels[cor.index.copy_id(i, j)] = copy_labels[j]
    return VertexLabeling(tuple(labels))


def corona_edge_labeling(
    g1: Graph, g2: Graph, base1: EdgeLabeling, base2: EdgeLabeling
) -> EdgeLabeling:
    """Edge labeling of g1 * g2: g1 keeps base1, each copy keeps base2, and
    every join edge from a neighbour v_a into the copy over v_b inherits
    the label of (v_a, v_b)."""
    _require_connected_nontrivial(g1)
    _require_connected_nontrivial(g2, min_order=1)
    if not base1.matches(g1):
        raise LabelingError("base1 domain does not match g1's edges")
    if not base2.matches(g2):
        raise LabelingError("base2 domain does not match g2's edges")
    _check_edge_base(g1, base1, "base1")
    if g2.m > 0:
        _check_edge_base(g2, base2, "base2")
    cor = neighbourhood_corona(g1, g2)
    idx = cor.index
    out: dict[tuple[int, int], int] = {}
    for e in g1.edges:
        out[e] = base1[e]
    for i in range(g1.n):
        for (u, v) in g2.edges:
            out[(idx.copy_id(i, u), idx.copy_id(i, v))] = base2[(u, v)]
    for (a, b) in g1.edges:
        lab = base1[(a, b)]
        for j in range(g2.n):
            cb = idx.copy_id(b, j)
            ca = idx.copy_id(a, j)
            out[(min(a, cb), max(a, cb))] = lab
            out[(min(b, ca), max(b, ca))] = lab
    return EdgeLabeling(out)
