import random

import pytest
from hypothesis import given, settings

from epg.construct import (
    InvalidOrder,
    construct_degeneracy,
    construct_edge_coloring,
    construct_from_global_cover,
    construct_from_local_cover,
    to_interval_representation,
)
from epg.graph import (
    CliqueCover,
    DegeneracyOrder,
    InvalidCover,
    clique_cover_global,
    clique_cover_local,
    degeneracy_order,
    edge_coloring,
    gen_complete,
    gen_cycle,
    gen_octahedron,
    gen_random_tree,
    gen_triangular_grid,
    triangular_grid_cover,
)

from conftest import brute_intersection_graph, small_graphs


def realizes(rep, g, budget):
    return brute_intersection_graph(rep) == g and rep.max_bends <= budget


@given(small_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_global_cover_staircases(g):
    cover = clique_cover_global(g)
    rep = construct_from_global_cover(g, cover)
    assert realizes(rep, g, max(cover.global_number - 1, 0))
    for v in rep:
        if rep[v].bends > 1:
            assert rep[v].kind().value == "staircase"


@given(small_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_local_cover_snakes(g):
    cover = clique_cover_local(g)
    rep = construct_from_local_cover(g, cover)
    assert realizes(rep, g, max(2 * cover.local_number(g) - 2, 0))


@given(small_graphs(max_n=10))
@settings(max_examples=60, deadline=None)
def test_edge_coloring_construction(g):
    rep = construct_edge_coloring(g)
    assert realizes(rep, g, max(edge_coloring(g).num_colors - 1, 0))
    assert rep.max_bends <= g.max_degree


@given(small_graphs(max_n=10))
@settings(max_examples=80, deadline=None)
def test_degeneracy_construction(g):
    d = degeneracy_order(g).d
    rep = construct_degeneracy(g)
    assert realizes(rep, g, max(2 * d - 1, 0))


def test_trees_get_one_bend():
    rng = random.Random(7)
    for n in range(1, 16):
        g = gen_random_tree(n, rng)
        assert realizes(construct_degeneracy(g), g, 1)


def test_triangular_grid_two_bends():
    g = gen_triangular_grid(4, 6)
    rep = construct_from_global_cover(g, triangular_grid_cover(g))
    assert realizes(rep, g, 2)


def test_octahedron_local_cover():
    g = gen_octahedron()
    rep = construct_from_local_cover(g, clique_cover_local(g))
    assert brute_intersection_graph(rep) == g


def test_bad_inputs_rejected():
    g = gen_cycle(4)
    with pytest.raises(InvalidCover):
        construct_from_global_cover(g, CliqueCover.of([[["c1", "c2"]]]))
    with pytest.raises(InvalidOrder):
        construct_degeneracy(g, DegeneracyOrder(("c1", "c2", "c3", "c4"), 1))


@given(small_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_interval_export(g):
    rep = construct_degeneracy(g)
    iv = to_interval_representation(rep)
    assert iv.overlap_graph() == g
    for v in rep:
        assert len(iv.intervals[v]) <= rep[v].bends + 1


def test_interval_export_of_clique():
    g = gen_complete(5)
    rep = construct_edge_coloring(g)
    iv = to_interval_representation(rep)
    assert iv.overlap_graph() == g
    assert iv.max_intervals() <= rep.max_bends + 1
