import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import girthlab as gl
from girthlab.generate import (
    GenConfig,
    high_girth_bipartite,
    hoeffding_sample_size,
    random_hypergraph,
    random_oriented,
    repair_girth,
    repair_girth_oriented,
)
from girthlab.graphs import berge_girth, count_short_berge_cycles, girth
from girthlab.rng import SplitMix64, derive_seed


def test_config_validation():
    with pytest.raises(gl.DensityTooHighError):
        GenConfig(2, 3, 3, 2, 0)  # C(3,2)/2 = 1.5 < 3
    with pytest.raises(ValueError):
        GenConfig(1, 3, 1, 2, 0)
    with pytest.raises(ValueError):
        GenConfig(3, 6, 2, 1, 0)
    GenConfig(3, 6, 2, 2, 0)


def test_determinism_and_basic_shape():
    cfg = GenConfig(3, 6, 2, 2, 42)
    h1, h2 = random_hypergraph(cfg), random_hypergraph(cfg)
    assert h1.hyperedges == h2.hyperedges
    assert h1.m == 2 and len(set(h1.hyperedges)) == 2
    other = random_hypergraph(GenConfig(3, 6, 2, 2, 43))
    assert other.hyperedges != h1.hyperedges


def test_mean_degree_is_am_over_n():
    h = random_hypergraph(GenConfig(3, 100, 300, 2, 7))
    degrees = [len(h.by_vertex[v]) for v in range(100)]
    assert sum(degrees) / 100 == pytest.approx(9.0)
    assert len(set(h.hyperedges)) == 300


def test_subset_sampling_is_roughly_uniform():
    counts = Counter()
    for i in range(6000):
        h = random_hypergraph(GenConfig(2, 4, 1, 2, derive_seed(5150, i)))
        counts[h.hyperedges[0]] += 1
    assert len(counts) == 6
    for pair, c in counts.items():
        assert abs(c / 6000 - 1 / 6) <= 0.02, (pair, c)


def test_oriented_determinism_and_distinct_underlying():
    cfg = GenConfig(3, 30, 500, 2, 99)
    o1, o2 = random_oriented(cfg), random_oriented(cfg)
    assert o1.hyperedges == o2.hyperedges
    assert len({tuple(sorted(e)) for e in o1.hyperedges}) == 500


def test_oriented_order_marginals():
    counts = Counter()
    draws = 10_000
    for i in range(draws):
        o = random_oriented(GenConfig(3, 50, 1, 2, derive_seed(31, i)))
        seq = o.hyperedges[0]
        counts[tuple(sorted(range(3), key=seq.__getitem__))] += 1
    assert len(counts) == 6
    for pattern, c in counts.items():
        assert abs(c / draws - 1 / 6) <= 0.02, (pattern, c)


def test_hoeffding_anchors():
    assert hoeffding_sample_size(0.1, 0.05) == 185
    assert hoeffding_sample_size(1.0, 0.999999) == 1
    assert hoeffding_sample_size(0.05, 0.01) == 1060
    with pytest.raises(ValueError):
        hoeffding_sample_size(0.0, 0.5)
    with pytest.raises(ValueError):
        hoeffding_sample_size(0.5, 1.0)


def test_repair_anchors():
    tri = gl.UniformHypergraph.from_edges(3, 7, [(1, 2, 3), (3, 4, 5), (1, 5, 6)])
    fixed = repair_girth(tri, 3)
    assert fixed.m == 2 and berge_girth(fixed) == math.inf

    pair = gl.UniformHypergraph.from_edges(3, 5, [(1, 2, 3), (1, 2, 4)])
    assert repair_girth(pair, 2).hyperedges == ((1, 2, 4),)

    assert repair_girth(fixed, 5) == fixed  # already above threshold


def test_repair_oriented_keeps_orders():
    o = gl.OrientedHypergraph(3, 7, ((3, 1, 2), (5, 3, 4), (6, 1, 5)))
    fixed = repair_girth_oriented(o, 3)
    assert fixed.m == 2
    assert all(e in o.hyperedges for e in fixed.hyperedges)


@given(st.integers(0, 10_000))
@settings(max_examples=30)
def test_repair_girth_property(seed):
    rng = SplitMix64(seed)
    n = 12 + rng.randrange(30)
    m = min(4 + rng.randrange(40), math.comb(n, 3) // 2)
    k = 2 + rng.randrange(4)
    h0 = random_hypergraph(GenConfig(3, n, m, k, derive_seed(seed, 777)))
    h = repair_girth(h0, k)
    assert berge_girth(h) > k
    assert set(h.hyperedges) <= set(h0.hyperedges)
    assert h0.m - h.m <= count_short_berge_cycles(h0, k)


def test_high_girth_bipartite_forced_c10():
    g = high_girth_bipartite(5, 10, 2, 0)
    assert g.e == 10 and girth(g) == 10
    assert all(g.degree(v) == 2 for v in range(10))


def test_high_girth_bipartite_properties():
    g = high_girth_bipartite(40, 10, 2, 3)
    assert girth(g) >= 10
    assert min(g.degree(v) for v in range(g.n)) >= 2
    comp = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    assert len(comp) == g.n
    again = high_girth_bipartite(40, 10, 2, 3)
    assert again.edges == g.edges


def test_high_girth_bipartite_infeasible():
    with pytest.raises(gl.InfeasibleError):
        high_girth_bipartite(2, 10, 3, 1, max_attempts=20)
