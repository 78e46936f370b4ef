from collections import Counter
from itertools import product

import pytest

from corona_sym.automorphisms import HypothesisViolation, enumerate_automorphisms
from corona_sym.constructive import (
    BladeTuple,
    blade_capacity,
    compute_M,
    corona_edge_labeling,
    corona_vertex_labeling,
    enumerate_blade_tuples,
    friendship_blade_label_count,
    friendship_distinguishing_formula,
    friendship_splitting_formula,
    friendship_splitting_labeling,
    replacement_patterns,
    splitting_edge_labeling,
    splitting_vertex_labeling,
    y_sequence,
)
from corona_sym.corona import neighbourhood_corona, splitting_graph
from corona_sym.distinguishing import (
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from corona_sym.families import complete, cycle, friendship, path, star
from corona_sym.graphs import (
    EdgeLabeling,
    LabelingError,
    VertexLabeling,
    edge_labeling,
    make_graph,
)


def test_y_sequence_values():
    assert y_sequence(2, 0) == 1
    assert y_sequence(2, 1) == 2
    assert y_sequence(2, 2) == 3  # 2 + C(1,1)*C(2,2)
    assert y_sequence(3, 2) == 6  # 3 + C(1,1)*C(3,2)
    # D(G2) = 1 collapses every y_m to 1
    assert all(y_sequence(1, m) == 1 for m in range(6))


def test_compute_M():
    assert compute_M(1, 5) == 0
    assert compute_M(3, 2) == 1  # 1 + 2 >= 3
    assert compute_M(6, 2) == 2  # 1 + 2 + 3 >= 6
    assert compute_M(4, 1) == 3  # all-ones sequence


def test_blade_capacity_exhaustive():
    """(s^4 - s^2)/2 canonical valid tuples, by full generation."""
    for s in (2, 3, 4):
        tuples = [
            BladeTuple(*t)
            for t in product(range(1, s + 1), repeat=4)
        ]
        canonical = [t for t in tuples if t.is_valid and t.is_canonical]
        assert len(canonical) == blade_capacity(s) == (s**4 - s**2) // 2


def test_enumerate_blade_tuples():
    six = enumerate_blade_tuples(2, 6)
    assert len(six) == 6
    assert len(set(six)) == 6
    assert all(t.is_valid and t.is_canonical for t in six)
    assert six == sorted(six)
    assert len(enumerate_blade_tuples(3, 36)) == 36
    with pytest.raises(ValueError):
        enumerate_blade_tuples(2, 7)


def test_blade_tuples_pairwise_inequivalent_under_reversal():
    tuples = enumerate_blade_tuples(3, 36)
    seen = set(tuples)
    assert all(t.reversed not in seen or t.reversed == t for t in tuples)


def test_replacement_pattern_counts_by_max_new_label():
    """Patterns whose maximum new label is d2+m number exactly y_m."""
    for d2 in (2, 3, 4):
        total = sum(y_sequence(d2, m) for m in range(4))
        pats = replacement_patterns(d2, total)
        by_m = Counter((p.max_new_label - d2) if p.new_labels else 0 for p in pats)
        for m in range(4):
            assert by_m[m] == y_sequence(d2, m), (d2, m)


def test_replacement_patterns_distinct():
    pats = replacement_patterns(3, 40)
    assert len(set(pats)) == 40
    base = (1, 2, 3, 1)
    labelings = {p.apply(base) for p in pats}
    assert len(labelings) == 40


def test_replacement_pattern_order_matches_steps():
    """Singles with d2+1 first, then singles with d2+2, then pairs, ..."""
    pats = replacement_patterns(2, 9)
    assert pats[0].replaced == ()
    assert [p.new_labels for p in pats[1:4]] == [(3,), (3,), (4,)]
    assert pats[1].replaced == (1,) and pats[2].replaced == (2,)
    # m=2 ends with the pair {3,4}
    assert pats[5].new_labels == (3, 4) and pats[5].replaced == (1, 2)


def test_pattern_assignment_is_order_preserving():
    pat = replacement_patterns(3, 10)[-1]
    mp = pat.mapping()
    keys = sorted(mp)
    assert [mp[k] for k in keys] == sorted(mp.values())


def test_splitting_vertex_labeling_k2():
    lab = splitting_vertex_labeling(complete(2), VertexLabeling((1, 2)))
    assert lab.labels == (1, 2, 1, 2)
    cor = splitting_graph(complete(2))
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_vertex(cor.graph, group, lab)


def test_splitting_vertex_labeling_star():
    base = VertexLabeling((1, 1, 2, 3))
    lab = splitting_vertex_labeling(star(3), base)
    cor = splitting_graph(star(3))
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_vertex(cor.graph, group, lab)
    assert lab.label_count == 3


def test_splitting_vertex_labeling_p3():
    lab = splitting_vertex_labeling(path(3), VertexLabeling((1, 1, 2)))
    cor = splitting_graph(path(3))
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_vertex(cor.graph, group, lab)
    assert lab.label_count == 2


def test_splitting_vertex_rejects_bad_base():
    with pytest.raises(LabelingError):
        splitting_vertex_labeling(complete(2), VertexLabeling((1, 1)))


def test_splitting_vertex_rejects_k1():
    with pytest.raises(HypothesisViolation):
        splitting_vertex_labeling(make_graph(1, []), VertexLabeling((1,)))


def test_splitting_edge_labeling_p3():
    lab = splitting_edge_labeling(path(3), edge_labeling(path(3), (1, 2)))
    cor = splitting_graph(path(3))
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_edge(cor.graph, group, lab)
    assert lab.label_count == 2


def test_splitting_edge_labeling_star():
    base = edge_labeling(star(3), (1, 2, 3))
    lab = splitting_edge_labeling(star(3), base)
    cor = splitting_graph(star(3))
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_edge(cor.graph, group, lab)
    assert lab.label_count == 3


def test_splitting_edge_labeling_p4_from_oracle():
    base = distinguishing_index(path(4)).witness
    lab = splitting_edge_labeling(path(4), base)
    cor = splitting_graph(path(4))
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_edge(cor.graph, group, lab)


def test_splitting_edge_rejects_k2():
    with pytest.raises(HypothesisViolation):
        splitting_edge_labeling(complete(2), edge_labeling(complete(2), (1,)))


def test_friendship_splitting_labeling():
    for n in (2, 3):
        lab = friendship_splitting_labeling(n)
        s = friendship_splitting_formula(n)
        assert lab.label_count == s
        cor = splitting_graph(friendship(n))
        group = enumerate_automorphisms(cor.graph)
        assert is_distinguishing_vertex(cor.graph, group, lab)


def test_friendship_label_count_boundaries():
    assert friendship_blade_label_count(6) == 2  # exactly the 6 tuple capacity
    assert friendship_blade_label_count(7) == 3
    assert friendship_blade_label_count(36) == 3
    assert friendship_blade_label_count(37) == 4


def test_formula_helpers_agree_with_float_forms():
    import math

    for n in range(2, 200):
        x = (1 + math.sqrt(8 * n + 1)) / 2
        assert friendship_distinguishing_formula(n) == math.ceil(x - 1e-12)
        assert friendship_splitting_formula(n) == friendship_blade_label_count(n)


def test_corona_vertex_labeling_p3_k2():
    g1, g2 = path(3), complete(2)
    d1 = distinguishing_number(g1)
    d2 = distinguishing_number(g2)
    lab = corona_vertex_labeling(g1, g2, d1.witness, d2.witness)
    M = compute_M(d1.value, d2.value)
    assert lab.label_count <= max(d1.value, d2.value + M)
    cor = neighbourhood_corona(g1, g2)
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_vertex(cor.graph, group, lab)


def test_corona_vertex_labeling_k2_p3():
    g1, g2 = complete(2), path(3)
    lab = corona_vertex_labeling(
        g1, g2, distinguishing_number(g1).witness, distinguishing_number(g2).witness
    )
    cor = neighbourhood_corona(g1, g2)
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_vertex(cor.graph, group, lab)


def test_corona_vertex_labeling_rigid_base_stays_verbatim():
    g1 = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])
    g2 = path(3)
    d2 = distinguishing_number(g2)
    lab = corona_vertex_labeling(g1, g2, VertexLabeling((1,) * 6), d2.witness)
    assert lab.label_count <= d2.value
    cor = neighbourhood_corona(g1, g2)
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_vertex(cor.graph, group, lab)


def test_corona_vertex_rejects_non_distinguishing_base():
    with pytest.raises(LabelingError):
        corona_vertex_labeling(
            path(3), complete(2), VertexLabeling((1, 1, 1)), VertexLabeling((1, 2))
        )


def test_corona_edge_labeling_p3_k2():
    g1, g2 = path(3), complete(2)
    base1 = distinguishing_index(g1).witness
    # every edge labeling of a single-edge copy is fine structurally, but
    # K2 has no distinguishing edge labeling, so the construction refuses
    with pytest.raises(LabelingError):
        corona_edge_labeling(g1, g2, base1, edge_labeling(g2, (1,)))


def test_corona_edge_labeling_p4_p3():
    g1, g2 = path(4), path(3)
    d1 = distinguishing_index(g1)
    d2 = distinguishing_index(g2)
    lab = corona_edge_labeling(g1, g2, d1.witness, d2.witness)
    assert lab.label_count <= max(d1.value, d2.value)
    cor = neighbourhood_corona(g1, g2)
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_edge(cor.graph, group, lab)


def test_corona_edge_labeling_star_k1_degenerates_to_splitting():
    g1 = star(3)
    base1 = distinguishing_index(g1).witness
    lab = corona_edge_labeling(g1, make_graph(1, []), base1, EdgeLabeling({}))
    split = splitting_edge_labeling(g1, base1)
    assert dict(lab.labels) == dict(split.labels)


def test_corona_edge_labeling_c5_c3():
    g1, g2 = cycle(5), cycle(3)
    d1 = distinguishing_index(g1)
    d2 = distinguishing_index(g2)
    lab = corona_edge_labeling(g1, g2, d1.witness, d2.witness)
    cor = neighbourhood_corona(g1, g2)
    group = enumerate_automorphisms(cor.graph)
    assert is_distinguishing_edge(cor.graph, group, lab)
    assert lab.label_count <= max(d1.value, d2.value)
