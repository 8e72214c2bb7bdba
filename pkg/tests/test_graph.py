import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from sweepkit.errors import EmptyGraph, GraphFormatError, InvalidEdge, TooLarge
from sweepkit.graph import (cartesian_product, clique_number, clique_product,
                            complete_graph, contract_edge, factor_graphs, is_connected,
                            maximal_cliques, new_graph, parse_graph, path_graph,
                            swap_coordinates)

from conftest import brute_force_clique_number, random_graph


def test_new_graph_smallest():
    g = new_graph(1, [])
    assert (g.n, g.m) == (1, 0)


def test_new_graph_dedups():
    g = new_graph(3, [(0, 1), (1, 2), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))


def test_new_graph_normalizes_orientation():
    assert new_graph(3, [(2, 1), (1, 0)]).edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("edges", [[(0, 2)], [(1, 1)], [(-1, 0)]])
def test_new_graph_rejects(edges):
    with pytest.raises(InvalidEdge):
        new_graph(2, edges)


@pytest.mark.parametrize("n, edges", [(1, ()), (2, ((0, 1),)), (4, ((0, 1), (1, 2), (2, 3)))])
def test_path_graph(n, edges):
    assert path_graph(n).edges == edges


@pytest.mark.parametrize("n, m", [(1, 0), (2, 1), (4, 6)])
def test_complete_graph(n, m):
    assert complete_graph(n).m == m


@pytest.mark.parametrize("make", [path_graph, complete_graph])
def test_generators_reject_zero(make):
    with pytest.raises(EmptyGraph):
        make(0)


def test_product_k2_k2_is_four_cycle():
    g = clique_product(2, 2)
    assert (g.n, g.m) == (4, 4)
    assert all(g.degree(v) == 2 for v in range(4))
    assert is_connected(g)


@pytest.mark.parametrize("g, h, n, m", [
    (complete_graph(3), path_graph(3), 9, 15),
    (path_graph(3), path_graph(3), 9, 12),
])
def test_product_counts(g, h, n, m):
    p = cartesian_product(g, h)
    assert (p.n, p.m) == (n, m)
    assert p.m == g.n * h.m + h.n * g.m


def test_product_coordinates_follow_id_encoding():
    p = cartesian_product(complete_graph(3), path_graph(4))
    for i in range(1, 4):
        for j in range(1, 5):
            v = p.vertex(i, j)
            assert v == (i - 1) * 4 + (j - 1)
            assert p.coords[v] == (i, j)


def test_product_rejects_empty():
    with pytest.raises(EmptyGraph):
        cartesian_product(new_graph(0, []), path_graph(2))


def test_product_matches_networkx():
    g, h = path_graph(3), complete_graph(3)
    ours = cartesian_product(g, h)
    ref = nx.cartesian_product(nx.path_graph(3), nx.complete_graph(3))
    mapping = {(x, y): x * 3 + y for x, y in ref.nodes}
    assert {tuple(sorted((mapping[a], mapping[b]))) for a, b in ref.edges} == set(ours.edges)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10**6))
def test_product_degree_and_swap(a, b, seed):
    import random
    rng = random.Random(seed)
    g, h = random_graph(rng, a, 0.5), random_graph(rng, b, 0.5)
    p = cartesian_product(g, h)
    for x in range(g.n):
        for y in range(h.n):
            assert p.degree(x * h.n + y) == g.degree(x) + h.degree(y)
    assert swap_coordinates(p).edges == cartesian_product(h, g).edges


def test_factor_graphs_roundtrip():
    g, h = path_graph(3), complete_graph(4)
    f1, f2 = factor_graphs(cartesian_product(g, h))
    assert f1.edges == g.edges and f2.edges == h.edges


def test_factor_graphs_none_without_coords():
    assert factor_graphs(path_graph(4)) is None


@pytest.mark.parametrize("g, w", [(path_graph(5), 2), (complete_graph(6), 6),
                                  (clique_product(3, 4), 4)])
def test_clique_number(g, w):
    assert clique_number(g) == w
    assert brute_force_clique_number(g) == w


@pytest.mark.parametrize("m, n", [(m, n) for m in range(2, 6) for n in range(2, 6)])
def test_clique_number_of_clique_products(m, n):
    assert clique_number(clique_product(m, n)) == max(m, n)


def test_clique_number_random_against_enumeration(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert clique_number(g) == brute_force_clique_number(g)


def test_maximal_cliques_match_networkx(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges)
        ours = {frozenset(v for v in range(g.n) if c >> v & 1) for c in maximal_cliques(g)}
        assert ours == {frozenset(c) for c in nx.find_cliques(ref)}


def test_clique_number_cap(monkeypatch):
    monkeypatch.delenv("SWEEPKIT_MAX_VERTICES", raising=False)
    with pytest.raises(TooLarge):
        clique_number(path_graph(65))


def test_size_override(monkeypatch):
    monkeypatch.setenv("SWEEPKIT_MAX_VERTICES", "80")
    assert clique_number(path_graph(65)) == 2


def test_is_connected():
    assert is_connected(path_graph(4))
    assert not is_connected(new_graph(2, []))
    assert is_connected(cartesian_product(complete_graph(3), path_graph(3)))


def test_contract_edge_merges_endpoints():
    g = contract_edge(complete_graph(4), (0, 1))
    assert g.edges == complete_graph(3).edges


def test_text_format_roundtrip():
    g = cartesian_product(complete_graph(2), path_graph(3))
    back = parse_graph(g.canonical_text())
    assert back == g and back.coords == g.coords
    assert back.content_hash() == g.content_hash()


def test_text_format_comments_and_errors():
    g = parse_graph("c a path\np 3 2\ne 1 2\ne 2 3\n")
    assert g.edges == ((0, 1), (1, 2))
    with pytest.raises(GraphFormatError):
        parse_graph("p 3 3\ne 1 2\n")
    with pytest.raises(GraphFormatError):
        parse_graph("p 2 1\ne 1 3\n")
    with pytest.raises(GraphFormatError):
        parse_graph("e 1 2\n")


def test_hash_ignores_coordinates_but_not_edges():
    p = cartesian_product(path_graph(2), path_graph(2))
    plain = new_graph(p.n, p.edges)
    assert p.content_hash() == plain.content_hash()
    assert p.content_hash() != path_graph(4).content_hash()


def test_neighbors_sorted():
    g = complete_graph(4)
    assert g.neighbors(2) == [0, 1, 3]
