import math

import pytest
from hypothesis import given, settings

import girthlab as gl
from girthlab.graphs import (
    BipartiteGraph,
    Graph,
    UniformHypergraph,
    berge_girth,
    complete_bipartite,
    complete_graph,
    count_short_berge_cycles,
    cycle_graph,
    girth,
    has_cycle_of_length,
    is_acyclic,
    is_connected,
    largest_component,
    shortest_berge_cycle,
    two_shadow,
)
from girthlab.rng import SplitMix64, derive_seed

from helpers import (
    brute_berge_cycle_count,
    brute_berge_girth,
    brute_girth,
    brute_has_cycle_of_length,
    graphs_st,
    hypergraphs_st,
)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))  # unnormalized pair
    g = Graph.from_edges(3, [(2, 1), (1, 2)])
    assert g.e == 1 and g.has_edge(1, 2)


def test_bipartite_validation():
    with pytest.raises(gl.NotBipartiteError):
        BipartiteGraph.from_classes(3, [(0, 1)], [0, 1], [2])
    with pytest.raises(gl.NotBipartiteError):
        BipartiteGraph.from_classes(3, [], [0], [2])
    with pytest.raises(gl.NotBipartiteError):
        BipartiteGraph.from_graph(cycle_graph(5))
    b = BipartiteGraph.from_graph(cycle_graph(6))
    assert set(b.side_a) == {0, 2, 4}


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        UniformHypergraph(3, 5, ((0, 1, 1),))
    with pytest.raises(ValueError):
        UniformHypergraph(3, 5, ((0, 2, 1),))  # not ascending
    with pytest.raises(ValueError):
        UniformHypergraph(3, 5, ((0, 1, 2), (0, 1, 2)))
    with pytest.raises(ValueError):
        gl.OrientedHypergraph(3, 5, ((0, 1, 2), (2, 1, 0)))  # same underlying set


def test_girth_anchors():
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(6)) == 6
    assert girth(complete_bipartite(3, 3)) == 4
    assert girth(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)])) == math.inf
    assert girth(Graph(0, frozenset())) == math.inf


@given(graphs_st(max_n=8))
def test_girth_matches_brute_force(g):
    assert girth(g) == brute_girth(g)


@given(graphs_st(max_n=8))
def test_acyclic_iff_infinite_girth(g):
    assert (girth(g) == math.inf) == is_acyclic(g)


def test_has_cycle_of_length_anchors():
    assert has_cycle_of_length(cycle_graph(6), 6)
    assert not has_cycle_of_length(cycle_graph(6), 4)
    assert has_cycle_of_length(complete_graph(5), 4)
    with pytest.raises(ValueError):
        has_cycle_of_length(complete_graph(3), 2)


@given(graphs_st(max_n=8))
@settings(max_examples=40)
def test_has_cycle_of_length_matches_subset_enumeration(g):
    for length in range(3, g.n + 1):
        assert has_cycle_of_length(g, length) == brute_has_cycle_of_length(g, length)


def test_cycle_search_budget():
    # odd cycle in a bipartite graph: the search must exhaust, hitting the cap
    with pytest.raises(gl.SearchBudgetExceededError):
        has_cycle_of_length(complete_bipartite(5, 5), 9, max_steps=10)


def test_enumerate_cycles():
    cycles = gl.enumerate_cycles(complete_graph(4), 3)
    assert len(cycles) == 4
    assert gl.enumerate_cycles(cycle_graph(6), 6) == [(0, 1, 2, 3, 4, 5)]
    with pytest.raises(gl.SearchBudgetExceededError):
        gl.enumerate_cycles(complete_graph(6), 5, max_cycles=3)


def test_berge_girth_anchors():
    assert berge_girth(UniformHypergraph.from_edges(3, 5, [(1, 2, 3), (1, 2, 4)])) == 2
    h = UniformHypergraph.from_edges(3, 7, [(1, 2, 3), (3, 4, 5), (1, 5, 6)])
    assert berge_girth(h) == 3
    assert berge_girth(UniformHypergraph.from_edges(3, 3, [(0, 1, 2)])) == math.inf
    assert berge_girth(UniformHypergraph(3, 0, ())) == math.inf


@given(hypergraphs_st(a=3, max_n=9, max_m=5))
@settings(max_examples=50)
def test_berge_girth_matches_direct_enumerator(h):
    assert berge_girth(h) == brute_berge_girth(h)


def test_berge_girth_random_sweep_against_enumerator():
    # deterministic sweep over random 3-uniform hypergraphs (<= 5 edges, <= 9
    # vertices); complements the hypothesis cases above
    for i in range(150):
        rng = SplitMix64(derive_seed(2024, i))
        n = 5 + rng.randrange(5)
        m = 2 + rng.randrange(4)
        edges = set()
        while len(edges) < m:
            edges.add(tuple(sorted(rng.sample_distinct(n, 3))))
        h = UniformHypergraph(3, n, tuple(sorted(edges)))
        assert berge_girth(h) == brute_berge_girth(h)


def test_berge_girth_of_linear_is_half_incidence_girth():
    for i in range(40):
        rng = SplitMix64(derive_seed(77, i))
        n = 8 + rng.randrange(4)
        edges = set()
        while len(edges) < 5:
            edges.add(tuple(sorted(rng.sample_distinct(n, 3))))
        h = UniformHypergraph(3, n, tuple(sorted(edges)))
        if berge_girth(h) <= 2:
            continue
        inc_edges = [(v, n + i_) for i_, he in enumerate(h.hyperedges) for v in he]
        inc = Graph.from_edges(n + h.m, inc_edges)
        expected = girth(inc)
        assert berge_girth(h) == (expected if expected == math.inf else expected / 2)


def test_shortest_berge_cycle_structure():
    h = UniformHypergraph.from_edges(3, 7, [(1, 2, 3), (3, 4, 5), (1, 5, 6)])
    cyc = shortest_berge_cycle(h)
    assert cyc is not None and len(cyc) == 3
    ll = len(cyc)
    for t, (ei, v) in enumerate(cyc):
        nxt = cyc[(t + 1) % ll][0]
        assert v in h.hyperedges[ei] and v in h.hyperedges[nxt]
    assert len({ei for ei, _ in cyc}) == ll
    assert len({v for _, v in cyc}) == ll
    assert shortest_berge_cycle(UniformHypergraph.from_edges(3, 3, [(0, 1, 2)])) is None


@given(hypergraphs_st(a=3, max_n=8, max_m=4))
@settings(max_examples=40)
def test_short_cycle_count_matches_enumerator(h):
    for k in (2, 3, 4):
        assert count_short_berge_cycles(h, k) == brute_berge_cycle_count(h, k)


def test_short_cycle_count_anchors():
    pair = UniformHypergraph.from_edges(3, 5, [(1, 2, 3), (1, 2, 4)])
    assert count_short_berge_cycles(pair, 2) == 1
    tri = UniformHypergraph.from_edges(3, 7, [(1, 2, 3), (3, 4, 5), (1, 5, 6)])
    assert count_short_berge_cycles(tri, 2) == 0
    assert count_short_berge_cycles(tri, 3) == 1


def test_is_connected():
    assert is_connected(UniformHypergraph.from_edges(3, 6, [(1, 2, 3), (3, 4, 5)]))
    assert not is_connected(UniformHypergraph.from_edges(3, 6, [(0, 1, 2), (3, 4, 5)]))
    assert is_connected(UniformHypergraph(3, 6, ()))


def test_largest_component():
    h = UniformHypergraph.from_edges(
        3, 12, [(0, 1, 2), (2, 3, 4), (6, 7, 8), (9, 10, 11)])
    cc = largest_component(h)
    assert cc.hyperedges == ((0, 1, 2), (2, 3, 4))
    assert is_connected(cc)


def test_two_shadow():
    tri = two_shadow(UniformHypergraph.from_edges(3, 4, [(1, 2, 3)]))
    assert tri.edges == frozenset({(1, 2), (1, 3), (2, 3)})
    shared = two_shadow(UniformHypergraph.from_edges(3, 6, [(1, 2, 3), (3, 4, 5)]))
    assert shared.e == 6
    assert two_shadow(UniformHypergraph(3, 4, ())).e == 0
