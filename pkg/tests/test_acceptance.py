"""Acceptance criteria 1-15, each timed against its limit.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import itertools
import random

import networkx as nx

from epg.bipartite import (
    blowup_pretzel,
    construct_comb,
    construct_kmm3,
    construct_m4,
    kmm3_size,
    m4_size,
    total_A_crossings,
)
from epg.bounds import c_inequality_check, k2_ladder, kmn_bend_bounds, lbl1_min_k, lbl2_min_k
from epg.construct import (
    construct_degeneracy,
    construct_edge_coloring,
    construct_from_global_cover,
    to_interval_representation,
)
from epg.exact import Exact, SearchBudget, exact_bend_number, is_interval_graph
from epg.graph import (
    Graph,
    degeneracy_order,
    edge_coloring,
    gen_complete_bipartite,
    gen_cycle,
    gen_random_graph,
    gen_random_ktree,
    gen_triangular_grid,
    triangular_grid_cover,
)
from epg.grid import GridPath, crossings, make_pretzel
from epg.reduce3sat import (
    brute_force_one_in_three,
    build_reduction_graph,
    parse_formula,
    representation_from_assignment,
)
from epg.treewidth import construct_treewidth
from epg.verify import verify_representation

from conftest import brute_intersection_graph, criterion
from test_reduce3sat import EXAMPLE, random_satisfiable


def realized(rep, g, budget):
    """Both routes agree: the package verifier and the unit-edge oracle."""
    return (
        verify_representation(rep, g, budget).ok
        and brute_intersection_graph(rep) == g
        and rep.max_bends <= budget
    )


def random_bend_path(rng, bends, top=50):
    x, y = rng.randint(0, top), rng.randint(0, top)
    horizontal = rng.random() < 0.5
    pts = [(x, y)]
    for _ in range(bends + 1):
        if horizontal:
            x = rng.choice([v for v in range(top + 1) if v != x])
        else:
            y = rng.choice([v for v in range(top + 1) if v != y])
        pts.append((x, y))
        horizontal = not horizontal
    return GridPath(tuple(pts))


def test_01_pretzel_tightness():
    with criterion(1, "pretzel pair crosses j(j+1) times, j = 1..8", 1.0):
        for j in range(1, 9):
            p, q = make_pretzel(j)
            assert p.bends == q.bends == 2 * j - 1
            assert crossings(p, q) == j * (j + 1)


def test_02_crossing_bound():
    with criterion(2, "10,000 random path pairs respect the crossing bound", 30.0):
        rng = random.Random(2024)
        violations = 0
        for _ in range(10_000):
            j = rng.randint(1, 4)
            p = random_bend_path(rng, 2 * j - 1)
            q = random_bend_path(rng, 2 * j - 1)
            if crossings(p, q) > j * (j + 1):
                violations += 1
        assert violations == 0


def test_03_triangular_grid_patches():
    with criterion(3, "triangular-grid patches get 2-bend drawings from 3-family covers", 5.0):
        rng = random.Random(3)
        for rows in range(1, 6):
            for cols in range(1, 7):
                full = gen_triangular_grid(rows, cols)
                for trial in range(3):
                    keep = [v for v in full.vertices if trial == 0 or rng.random() < 0.7] or [full.vertices[0]]
                    g = gen_triangular_grid(rows, cols, keep)
                    cover = triangular_grid_cover(g)
                    assert cover.global_number <= 3
                    budget = max(cover.global_number - 1, 0)
                    assert realized(construct_from_global_cover(g, cover), g, budget)


def test_04_edge_coloring():
    with criterion(4, "edge-colouring drawings within chi'_found - 1 <= max degree bends", 10.0):
        rng = random.Random(4)
        done = 0
        while done < 50:
            g = gen_random_graph(rng.randint(3, 15), rng.random() * 0.5, rng)
            if g.max_degree > 6:
                continue
            done += 1
            budget = max(edge_coloring(g).num_colors - 1, 0)
            assert budget <= g.max_degree
            assert realized(construct_edge_coloring(g), g, budget)


def test_05_degeneracy():
    with criterion(5, "degeneracy drawings with 2d-1 bends; trees with 1", 30.0):
        rng = random.Random(5)
        done = 0
        while done < 100:
            g = gen_random_graph(rng.randint(2, 20), rng.random() * 0.4, rng)
            d = degeneracy_order(g).d
            if not 1 <= d <= 4:
                continue
            done += 1
            assert realized(construct_degeneracy(g), g, 2 * d - 1)
        for n in range(1, 11):
            for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
                g = Graph([f"v{v}" for v in t.nodes], [(f"v{a}", f"v{b}") for a, b in t.edges])
                assert realized(construct_degeneracy(g), g, 1)


def test_06_treewidth():
    with criterion(6, "k-trees and their subgraphs with 2k-2 bends, k = 3,4,5", 30.0):
        rng = random.Random(6)
        for k in (3, 4, 5):
            for _ in range(6):
                g, seq = gen_random_ktree(k, rng.randint(k + 1, 18), rng)
                assert realized(construct_treewidth(g, seq), g, 2 * k - 2)
                h = Graph(g.vertices, [e for e in g.sorted_edges() if rng.random() < 0.7])
                assert realized(construct_treewidth(h, seq), h, 2 * k - 2)


def test_07_square_lower_bound():
    with criterion(7, "line-counting bound gives ceil(m/2) for K_{m,m}, m = 3..20", 1.0):
        for m in range(3, 21):
            assert lbl1_min_k(m, m) == -(-m // 2)


def test_08_staircase_construction():
    with criterion(8, "K_{m,n} with m-1 bends at the formula sizes, m = 4,5,6", 10.0):
        assert [kmm3_size(m) for m in (4, 5, 6)] == [8, 10, 34]
        for m in (4, 5, 6):
            n = kmm3_size(m)
            assert realized(construct_kmm3(m), gen_complete_bipartite(m, n), m - 1)
            assert construct_kmm3(m).max_bends == m - 1
        # twelve staircases also fit for m = 4
        rep = construct_kmm3(4, 12)
        assert realized(rep, gen_complete_bipartite(4, 12), 3) and rep.max_bends == 3


def test_09_seed_construction():
    with criterion(9, "K_{3,39} with 3 bends and K_{4,156} with 5 bends", 60.0):
        assert m4_size(3) == 39 and m4_size(4) == 156
        rep = construct_m4(3)
        assert realized(rep, gen_complete_bipartite(3, 39), 3) and rep.max_bends == 3
        rep = construct_m4(4)
        assert realized(rep, gen_complete_bipartite(4, 156), 5) and rep.max_bends == 5


def test_10_bound_ladders():
    with criterion(10, "crossing-count bound thresholds and the K_2 / K_3 ladders", 1.0):
        assert lbl2_min_k(3, 61) == 4
        assert lbl2_min_k(3, 60) <= 3
        res = kmn_bend_bounds(3, 40)
        assert (res.lower, res.upper) == (3, 4)
        for n in range(2, 200):
            res = kmn_bend_bounds(2, n)
            assert res.lower == res.upper == k2_ladder(n) == (2 if n >= 5 else 1)


def test_11_blown_up_pretzel_audit():
    with criterion(11, "blown-up pretzel crossing audit, m = 4,5,6", 5.0):
        for m in (4, 5, 6):
            bp = blowup_pretzel(m, m - 1)
            total = 0
            for u, v in itertools.combinations(bp.paths, 2):
                c = crossings(bp.paths[u], bp.paths[v])
                same = bp.classes[u] == bp.classes[v]
                assert c == (m * (m - 1) - 1 if same else m * (m - 1))
                total += c
            assert total == total_A_crossings(m)


def class_a_crossings(rep, m):
    a = [f"a{i}" for i in range(1, m + 1)]
    return sum(crossings(rep[u], rep[v]) for u, v in itertools.combinations(a, 2))


def test_12_crossing_inequality():
    with criterion(12, "crossing inequality holds on measured constructions", 5.0):
        rep = construct_m4(3)
        assert c_inequality_check(3, 39, rep.max_bends, class_a_crossings(rep, 3))
        for m in range(1, 5):
            for n in range(1, 21):
                rep = construct_comb(m, n)
                assert c_inequality_check(m, n, rep.max_bends, class_a_crossings(rep, m))


def test_13_exact_oracle():
    with criterion(13, "exact search agrees with interval recognition on <= 6 vertices", 120.0):
        for h in nx.graph_atlas_g()[1:]:
            if h.number_of_nodes() > 6:
                break
            g = Graph([f"v{v}" for v in h.nodes], [(f"v{a}", f"v{b}") for a, b in h.edges])
            res = exact_bend_number(g, SearchBudget(max_k=0))
            assert (isinstance(res, Exact) and res.k == 0) == is_interval_graph(g)
        for g in (gen_cycle(4), gen_complete_bipartite(2, 3)):
            res = exact_bend_number(g, SearchBudget(max_k=2))
            assert isinstance(res, Exact) and res.k == 1
            assert realized(res.representation, g, 1)


def test_14_reduction():
    with criterion(14, "one-in-three reduction drawings verify with 1 bend", 30.0):
        rng = random.Random(14)
        formulas = [parse_formula(EXAMPLE)] + [random_satisfiable(rng) for _ in range(20)]
        for f in formulas:
            g = build_reduction_graph(f).graph
            assert len(g) == 13 * len(f.clauses) + len(f.variables) + 31
            rep = representation_from_assignment(f, brute_force_one_in_three(f), check=False)
            assert realized(rep, g, 1)


def test_15_interval_export():
    with criterion(15, "interval export keeps the graph with <= bends+1 intervals", 10.0):
        rng = random.Random(15)
        cases = [
            (construct_comb(3, 10), gen_complete_bipartite(3, 10)),
            (construct_kmm3(5), gen_complete_bipartite(5, 10)),
            (construct_m4(3), gen_complete_bipartite(3, 39)),
        ]
        g = gen_triangular_grid(3, 5)
        cases.append((construct_from_global_cover(g, triangular_grid_cover(g)), g))
        for _ in range(5):
            g = gen_random_graph(12, 0.3, rng)
            cases.append((construct_edge_coloring(g), g))
            cases.append((construct_degeneracy(g), g))
        g, seq = gen_random_ktree(3, 12, rng)
        cases.append((construct_treewidth(g, seq), g))
        f = parse_formula(EXAMPLE)
        cases.append((representation_from_assignment(f, brute_force_one_in_three(f)), build_reduction_graph(f).graph))
        for rep, g in cases:
            iv = to_interval_representation(rep)
            assert iv.overlap_graph() == g
            assert all(len(iv.intervals[v]) <= rep[v].bends + 1 for v in rep)
