import pytest

from conftest import (
    brute_force_distinguishing_index,
    brute_force_distinguishing_number,
)
from corona_sym.automorphisms import SearchCapExceeded, enumerate_automorphisms
from corona_sym.corona import splitting_graph
from corona_sym.distinguishing import (
    DegenerateEdgeCase,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from corona_sym.families import complete, cycle, friendship, path, star
from corona_sym.graphs import (
    EdgeLabeling,
    GraphError,
    VertexLabeling,
    edge_labeling,
    make_graph,
)


def test_is_distinguishing_vertex_examples():
    k2 = complete(2)
    group = enumerate_automorphisms(k2)
    assert not is_distinguishing_vertex(k2, group, VertexLabeling((1, 1)))
    assert is_distinguishing_vertex(k2, group, VertexLabeling((1, 2)))
    s = star(3)
    group = enumerate_automorphisms(s)
    assert is_distinguishing_vertex(s, group, VertexLabeling((1, 1, 2, 3)))


def test_is_distinguishing_vertex_length_check():
    with pytest.raises(GraphError):
        is_distinguishing_vertex(path(3), enumerate_automorphisms(path(3)), VertexLabeling((1,)))


def test_is_distinguishing_edge_examples():
    p3 = path(3)
    group = enumerate_automorphisms(p3)
    assert not is_distinguishing_edge(p3, group, edge_labeling(p3, (1, 1)))
    assert is_distinguishing_edge(p3, group, edge_labeling(p3, (1, 2)))
    # K2's swap induces the identity edge permutation, so nothing works
    k2 = complete(2)
    group = enumerate_automorphisms(k2)
    assert not is_distinguishing_edge(k2, group, edge_labeling(k2, (1,)))
    assert not is_distinguishing_edge(k2, group, edge_labeling(k2, (7,)))


def test_complete_graphs_need_all_labels():
    for n in (2, 3, 4, 5):
        assert distinguishing_number(complete(n)).value == n


def test_matches_naive_oracle():
    for g in (path(4), path(5), cycle(4), cycle(5), star(3), friendship(2)):
        assert distinguishing_number(g).value == brute_force_distinguishing_number(g)


def test_index_matches_naive_oracle():
    for g in (path(4), cycle(4), cycle(5), star(3), complete(4)):
        assert distinguishing_index(g).value == brute_force_distinguishing_index(g)


def test_friendship_values_match_formula():
    from corona_sym.constructive import friendship_distinguishing_formula

    for n in (2, 3):
        assert distinguishing_number(friendship(n)).value == friendship_distinguishing_formula(n)


def test_friendship_splitting_values():
    from corona_sym.constructive import friendship_splitting_formula

    for n in (2, 3):
        cor = splitting_graph(friendship(n))
        assert distinguishing_number(cor.graph).value == friendship_splitting_formula(n)


def test_star_splitting_sharpness():
    for n in (2, 3):
        cor = splitting_graph(star(n))
        assert distinguishing_number(cor.graph).value == n
        assert distinguishing_index(cor.graph).value == n


def test_star_index():
    for n in (2, 3, 4):
        assert distinguishing_index(star(n)).value == n


def test_p4_index_is_two():
    assert distinguishing_index(path(4)).value == 2


def test_witness_is_verified_and_minimal_labels():
    rep = distinguishing_number(cycle(5))
    group = enumerate_automorphisms(cycle(5))
    assert is_distinguishing_vertex(cycle(5), group, rep.witness)
    assert rep.witness.label_count == rep.value
    assert rep.group_order == group.order


def test_trivial_group_gives_one():
    rigid = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])
    rep = distinguishing_number(rigid)
    assert rep.value == 1 and rep.group_order == 1


def test_value_one_iff_trivial_group():
    for g in (path(2), path(5), cycle(4), star(3),
              make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])):
        rep = distinguishing_number(g)
        assert (rep.value == 1) == (rep.group_order == 1)


def test_monotone_witness_property():
    """Replacing any single label of a witness with a fresh label keeps it
    distinguishing."""
    for g in (cycle(5), star(3)):
        rep = distinguishing_number(g)
        group = enumerate_automorphisms(g)
        fresh = rep.value + 1
        for v in range(g.n):
            bumped = list(rep.witness.labels)
            bumped[v] = fresh
            assert is_distinguishing_vertex(g, group, VertexLabeling(tuple(bumped)))
        erep = distinguishing_index(g)
        seq = erep.witness.as_sequence(g)
        for i in range(g.m):
            bumped = list(seq)
            bumped[i] = erep.value + 1
            assert is_distinguishing_edge(g, group, edge_labeling(g, bumped))


def test_k2_index_degeneracy():
    with pytest.raises(DegenerateEdgeCase):
        distinguishing_index(complete(2))


def test_no_edges_rejected():
    with pytest.raises(DegenerateEdgeCase):
        distinguishing_index(make_graph(3, []))


def test_labeling_cap():
    with pytest.raises(SearchCapExceeded):
        distinguishing_number(complete(6), labeling_cap=3)


def test_splitting_never_increases_number_or_index():
    """Brute-force check of the splitting bounds on small corpus graphs."""
    for g in (path(3), path(4), cycle(4), star(3), complete(3)):
        cor = splitting_graph(g)
        assert distinguishing_number(cor.graph).value <= distinguishing_number(g).value
        if g.n > 2:
            assert distinguishing_index(cor.graph).value <= distinguishing_index(g).value


def test_lex_least_witness_is_deterministic():
    a = distinguishing_number(cycle(4)).witness
    b = distinguishing_number(cycle(4)).witness
    assert a == b
