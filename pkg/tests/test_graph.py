import random

import networkx as nx
import pytest
from hypothesis import given, settings

from epg.graph import (
    BuildSequence,
    CliqueCover,
    Graph,
    GraphError,
    InvalidCover,
    InvalidSequence,
    WidthExceeded,
    clique_cover_global,
    clique_cover_local,
    degeneracy_order,
    edge_coloring,
    format_graph,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_octahedron,
    gen_random_graph,
    gen_random_ktree,
    gen_random_tree,
    gen_triangular_grid,
    ktree_sequence,
    line_graph,
    parse_graph,
    sort_labels,
    triangular_grid_cover,
)

from conftest import small_graphs, to_nx


def test_basic_generators():
    assert len(gen_complete_bipartite(3, 4).edges) == 12
    assert len(gen_complete(5).edges) == 10
    c = gen_cycle(6)
    assert all(c.degree(v) == 2 for v in c)
    o = gen_octahedron()
    assert len(o) == 6 and all(o.degree(v) == 4 for v in o)


def test_triangular_grid_shapes():
    g = gen_triangular_grid(1, 2)
    assert len(g) == 4 and len(g.edges) == 5
    g = gen_triangular_grid(2, 4)
    assert len(g) == 9 and len(g.edges) == 16
    assert len(g.maximal_cliques()) == 8


def test_parse_and_format_roundtrip():
    text = "a b\nb c  # comment\n\nv lonely\n"
    g = parse_graph(text)
    assert set(g.vertices) == {"a", "b", "c", "lonely"}
    assert parse_graph(format_graph(g)) == g
    with pytest.raises(GraphError):
        parse_graph("a b c\n")
    with pytest.raises(GraphError):
        Graph(["a"], [("a", "a")])


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_maximal_cliques_match_networkx(g):
    ours = {frozenset(c) for c in g.maximal_cliques()}
    theirs = {frozenset(c) for c in nx.find_cliques(to_nx(g))}
    assert ours == theirs


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_components_match_networkx(g):
    ours = {frozenset(c) for c in g.components()}
    assert ours == {frozenset(c) for c in nx.connected_components(to_nx(g))}


@given(small_graphs(max_n=12))
@settings(max_examples=100, deadline=None)
def test_degeneracy_matches_core_number(g):
    order = degeneracy_order(g)
    order.validate(g)
    assert order.d == max(nx.core_number(to_nx(g)).values(), default=0)


@given(small_graphs(max_n=10))
@settings(max_examples=100, deadline=None)
def test_edge_coloring_proper_and_vizing(g):
    col = edge_coloring(g)
    assert col.is_proper(g)
    assert col.num_colors <= g.max_degree + 1


def test_edge_coloring_petersen_needs_four():
    g = Graph([str(v) for v in range(10)], [(str(a), str(b)) for a, b in nx.petersen_graph().edges])
    col = edge_coloring(g)
    assert col.is_proper(g) and col.num_colors == 4


def test_global_cover_of_c5_needs_three_families():
    g = gen_cycle(5)
    cover = clique_cover_global(g)
    cover.validate(g)
    assert cover.global_number == 3


def test_trigrid_cover_has_three_families():
    g = gen_triangular_grid(4, 6)
    cover = triangular_grid_cover(g)
    cover.validate(g)
    assert cover.global_number <= 3
    assert clique_cover_global(g, hint="trigrid") == cover


@given(small_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_covers_are_valid(g):
    for cover in (clique_cover_global(g), clique_cover_local(g)):
        cover.validate(g)
        assert cover.local_number(g) <= max(g.max_degree, 0)


def test_invalid_cover_detected():
    g = gen_cycle(4)
    shared = CliqueCover.of([[["c1", "c2"], ["c2", "c3"]], [["c3", "c4"], ["c4", "c1"]]])
    with pytest.raises(InvalidCover):
        shared.validate(g)
    assert not CliqueCover.of([[["c1", "c3"]]]).is_valid(g)
    assert not CliqueCover.of([[["c1", "c2"]]]).is_valid(g)


def test_line_graph_matches_networkx():
    rng = random.Random(4)
    for _ in range(20):
        g = gen_random_graph(rng.randint(2, 8), 0.5, rng)
        lg = line_graph(g)
        ref = nx.line_graph(to_nx(g))
        assert len(lg) == ref.number_of_nodes()
        assert len(lg.edges) == ref.number_of_edges()
        for a, b in ref.edges:
            assert lg.has_edge("~".join(sort_labels(a)), "~".join(sort_labels(b)))


def test_random_tree_is_tree():
    rng = random.Random(2)
    for n in range(1, 12):
        assert nx.is_tree(to_nx(gen_random_tree(n, rng)))


def test_ktree_sequence_examples():
    seq = ktree_sequence(gen_cycle(5), 2)
    assert seq.k == 2 and len(seq.base) == 3
    with pytest.raises(WidthExceeded):
        ktree_sequence(gen_complete(5), 3)
    assert ktree_sequence(gen_complete(5), 4).steps == ()
    tiny = ktree_sequence(Graph(["a"]), 2)
    assert len(tiny.padding) == 2


def test_ktree_sequence_validates_user_input():
    g = gen_cycle(4)
    good = BuildSequence(2, ("c1", "c2", "c3"), (("c4", ("c1", "c3")),))
    assert ktree_sequence(g, 2, good) is good
    with pytest.raises(InvalidSequence):
        ktree_sequence(g, 2, BuildSequence(2, ("c1", "c2", "c3"), (("c4", ("c2", "c4")),)))
    with pytest.raises(InvalidSequence):
        ktree_sequence(g, 3, good)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_random_ktree_has_treewidth_k(k):
    rng = random.Random(k)
    g, seq = gen_random_ktree(k, 12, rng)
    seq.validate(g)
    assert len(g.edges) == k * (k + 1) // 2 + (12 - k - 1) * k
    assert ktree_sequence(g, k).k == k
    with pytest.raises(WidthExceeded):
        ktree_sequence(g, k - 1)
