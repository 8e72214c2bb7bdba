"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import random
import time
from math import ceil

import pytest

from sweepkit.graph import cartesian_product, clique_product, complete_graph, path_graph
from sweepkit.pathdecomp import (build_decomposition_even, build_decomposition_odd,
                                 pw_clique_product_formula, split_partition,
                                 validate_path_decomposition)
from sweepkit.searchgame import (decide_search_with_k, exact_search_number,
                                 sweep_strategy_product_with_path, validate_strategy)
from sweepkit.vsep import pathwidth_exact, vertex_separation_exact

from conftest import random_connected_graph

# Regression constant: exact search number of K_3 x K_3 computed by the solver.
K3_K3_SEARCH_NUMBER = 6

SOLVED = {}


def solve(name, g):
    if name not in SOLVED:
        SOLVED[name] = (g, exact_search_number(g)[0])
    return SOLVED[name][1]


@pytest.mark.criterion(1, "pathwidth_exact(K_m x K_n) == closed form, 2 <= m <= n <= 4")
def test_c1_pathwidth_formula_vs_dp():
    expected = {(2, 2): 2, (2, 3): 3, (2, 4): 4, (3, 3): 5, (3, 4): 7, (4, 4): 9}
    start = time.perf_counter()
    for (m, n), pw in expected.items():
        assert pw_clique_product_formula(m, n) == pw
        assert pathwidth_exact(clique_product(m, n)) == pw
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(2, "constructions validate with width = / <= formula, m <= n <= 10")
def test_c2_constructions():
    start = time.perf_counter()
    for m in range(2, 11):
        for n in range(m, 11):
            g = clique_product(m, n)
            d = build_decomposition_even(m, n) if m % 2 == 0 else build_decomposition_odd(m, n)
            assert validate_path_decomposition(g, d).valid, (m, n)
            formula = pw_clique_product_formula(m, n)
            if m % 2 == 0:
                assert d.width == formula
            else:
                assert d.width <= formula
    for m, n in [(3, 3), (3, 4)]:
        assert build_decomposition_odd(m, n).width == pw_clique_product_formula(m, n)
        assert pathwidth_exact(clique_product(m, n)) == pw_clique_product_formula(m, n)
    assert time.perf_counter() - start < 5


@pytest.mark.criterion(3, "s(P_3 x P_3) == 4")
def test_c3_grid():
    start = time.perf_counter()
    assert solve("P3xP3", cartesian_product(path_graph(3), path_graph(3))) == 4
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(4, "s(K_3 x P_3) == 4 and s(K_3 x K_2) == 4")
def test_c4_clique_path_and_prism():
    start = time.perf_counter()
    assert solve("K3xP3", cartesian_product(complete_graph(3), path_graph(3))) == 4
    assert time.perf_counter() - start < 300
    start = time.perf_counter()
    assert solve("K3xK2", cartesian_product(complete_graph(3), complete_graph(2))) == 4
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(5, "s(K_3 x K_3) in [5, 7]")
def test_c5_clique_square():
    start = time.perf_counter()
    s = solve("K3xK3", clique_product(3, 3))
    assert 5 <= s <= 7
    assert s == K3_K3_SEARCH_NUMBER
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(6, "sweep strategy valid and monotone with |V|+1, 100 random graphs")
def test_c6_sweep_property():
    rng = random.Random(6)
    start = time.perf_counter()
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(1, 7), rng.randint(0, 6))
        n = rng.choice((3, 4, 5))
        strat = sweep_strategy_product_with_path(g, n)
        report = validate_strategy(cartesian_product(g, path_graph(n)), strat)
        assert strat.k == g.n + 1
        assert report.success and report.monotone
    assert time.perf_counter() - start < 120


def small_corpus():
    rng = random.Random(8)
    graphs = []
    while len(graphs) < 200:
        n = rng.randint(2, 9)
        g = random_connected_graph(rng, n, rng.randint(0, 8 - (n - 1)) if n <= 9 else 0)
        if g.m <= 8:
            graphs.append(g)
    return graphs


@pytest.mark.criterion(7, "vs <= s <= vs+1 everywhere; pw <= s <= pw+2 on product instances")
def test_c7_sandwiches():
    violations = []
    for g in small_corpus():
        vs, _ = vertex_separation_exact(g)
        s, _ = exact_search_number(g)
        if not vs <= s <= vs + 1:
            violations.append(("ellis", g))
    products = {
        "P3xP3": cartesian_product(path_graph(3), path_graph(3)),
        "K3xP3": cartesian_product(complete_graph(3), path_graph(3)),
        "K3xK2": cartesian_product(complete_graph(3), complete_graph(2)),
        "K3xK3": clique_product(3, 3),
    }
    for name, g in products.items():
        s = solve(name, g)
        vs, _ = vertex_separation_exact(g)
        pw = pathwidth_exact(g)
        if not vs <= s <= vs + 1:
            violations.append(("ellis", name))
        if not pw <= s <= pw + 2:
            violations.append(("pathwidth", name))
    assert violations == []


@pytest.mark.criterion(8, "monotone and full modes agree, 200 graphs with <= 8 edges, k = 1..4")
def test_c8_modes_agree():
    start = time.perf_counter()
    disagreements = []
    for g in small_corpus():
        for k in range(1, 5):
            mono = decide_search_with_k(g, k, "monotone") is not None
            full = decide_search_with_k(g, k, "full") is not None
            if mono != full:
                disagreements.append((g, k, mono, full))
    assert disagreements == []
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(9, "three-way split verified on 1000 random admissible partitions")
def test_c9_split_partition():
    rng = random.Random(9)
    start = time.perf_counter()
    violations = 0
    for _ in range(1000):
        m = rng.randint(3, 20)
        cap = ceil(m / 2) - 1
        sizes, left = [], m
        while left:
            s = rng.randint(1, min(cap, left))
            sizes.append(s)
            left -= s
        t = split_partition(sizes, m)
        prefix, middle, suffix = sum(sizes[:t - 1]), sizes[t - 1], sum(sizes[t:])
        if not all(1 <= x <= m // 2 for x in (prefix, middle, suffix)):
            violations += 1
    assert violations == 0
    assert time.perf_counter() - start < 1
