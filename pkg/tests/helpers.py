"""Independent brute-force oracles and hypothesis strategies.

The oracles enumerate exhaustively (subsets, permutations) and share no code
with the library's search routines, so they are legitimate ground truth for
small instances.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations

import hypothesis.strategies as st

from girthlab.graphs import BipartiteGraph, Graph, UniformHypergraph


def brute_has_cycle_of_length(g: Graph, length: int) -> bool:
    """Try every vertex subset of the right size and every cyclic arrangement."""
    if length > g.n:
        return False
    for subset in combinations(range(g.n), length):
        first, rest = subset[0], subset[1:]
        for perm in permutations(rest):
            cycle = (first,) + perm
            if all(g.has_edge(cycle[i], cycle[(i + 1) % length])
                   for i in range(length)):
                return True
    return False


def brute_girth(g: Graph) -> float:
    for length in range(3, g.n + 1):
        if brute_has_cycle_of_length(g, length):
            return length
    return math.inf


def _berge_assignable(h: UniformHypergraph, seq: tuple[int, ...]) -> bool:
    """Can distinct defining vertices be picked along the hyperedge cycle?"""
    ll = len(seq)
    inters = [set(h.hyperedges[seq[i]]) & set(h.hyperedges[seq[(i + 1) % ll]])
              for i in range(ll)]

    def backtrack(i: int, used: set[int]) -> bool:
        if i == ll:
            return True
        for v in sorted(inters[i]):
            if v not in used:
                used.add(v)
                if backtrack(i + 1, used):
                    return True
                used.remove(v)
        return False

    return backtrack(0, set())


def brute_berge_girth(h: UniformHypergraph) -> float:
    for ll in range(2, h.m + 1):
        for subset in combinations(range(h.m), ll):
            for perm in permutations(subset[1:]):
                if _berge_assignable(h, (subset[0],) + perm):
                    return ll
    return math.inf


def _canonical_berge(seq: tuple[int, ...], used: list[int]) -> tuple:
    """Canonical form of the alternating cycle e_0 v_0 e_1 v_1 ... under
    rotation and reflection (v_i is the defining vertex between e_i and
    e_{i+1})."""
    flat = []
    for t in range(len(seq)):
        flat.append(("e", seq[t]))
        flat.append(("v", used[t]))
    n2 = len(flat)
    variants = [tuple(flat[r:] + flat[:r]) for r in range(0, n2, 2)]
    rev = flat[::-1]
    rev = rev[-1:] + rev[:-1]  # realign so a hyperedge tag comes first
    variants += [tuple(rev[r:] + rev[:r]) for r in range(0, n2, 2)]
    return min(variants)


def brute_berge_cycle_count(h: UniformHypergraph, k: int) -> int:
    """Count (cycle, defining vertices) configurations with <= k hyperedges,
    up to rotation and reflection, by exhaustive enumeration."""
    seen: set[tuple] = set()
    for ll in range(2, min(k, h.m) + 1):
        for subset in combinations(range(h.m), ll):
            for perm in permutations(subset[1:]):
                seq = (subset[0],) + perm
                inters = [sorted(set(h.hyperedges[seq[i]])
                                 & set(h.hyperedges[seq[(i + 1) % ll]]))
                          for i in range(ll)]

                def collect(i: int, used: list[int]) -> None:
                    if i == ll:
                        seen.add(_canonical_berge(seq, used))
                        return
                    for v in inters[i]:
                        if v not in used:
                            used.append(v)
                            collect(i + 1, used)
                            used.pop()

                collect(0, [])
    return len(seen)


def graphs_st(max_n: int = 8, max_m: int | None = None):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        pairs = list(combinations(range(n), 2))
        if not pairs:
            return Graph(n, frozenset())
        cap = len(pairs) if max_m is None else min(max_m, len(pairs))
        subset = draw(st.sets(st.sampled_from(pairs), max_size=cap))
        return Graph(n, frozenset(subset))

    return build()


def bipartite_st(max_side: int = 5):
    @st.composite
    def build(draw):
        na = draw(st.integers(1, max_side))
        nb = draw(st.integers(1, max_side))
        pairs = [(i, na + j) for i in range(na) for j in range(nb)]
        subset = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
        return BipartiteGraph.from_classes(na + nb, subset, range(na),
                                           range(na, na + nb))

    return build()


def hypergraphs_st(a: int = 3, max_n: int = 9, max_m: int = 5):
    @st.composite
    def build(draw):
        n = draw(st.integers(a, max_n))
        all_edges = list(combinations(range(n), a))
        subset = draw(st.sets(st.sampled_from(all_edges), max_size=max_m))
        return UniformHypergraph(a, n, tuple(sorted(subset)))

    return build()
