"""Seeded random hypergraph generation and the girth-repair deletion loop.

Everything here is a pure function of its arguments; all randomness flows
through the SplitMix64 stream documented in :mod:`girthlab.rng`, so equal
configs produce identical objects on every platform.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import DensityTooHighError, InfeasibleError
from .graphs import (
    BipartiteGraph,
    OrientedHypergraph,
    UniformHypergraph,
    shortest_berge_cycle,
)
from .rng import SplitMix64, derive_seed


@dataclass(frozen=True)
class GenConfig:
    """Parameters of one random draw.

    ``m`` is capped at half the number of possible hyperedges so that
    rejection sampling of distinct hyperedges stays cheap; ``k`` is the
    Berge-girth threshold used by repair.
    """

    a: int
    n: int
    m: int
    k: int
    seed: int

    def __post_init__(self) -> None:
        if not 2 <= self.a <= self.n:
            raise ValueError(f"need 2 <= a <= n, got a={self.a}, n={self.n}")
        if self.k < 2:
            raise ValueError("girth threshold k must be >= 2")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if 2 * self.m > comb(self.n, self.a):
            raise DensityTooHighError(
                f"m={self.m} exceeds C({self.n},{self.a})/2 = {comb(self.n, self.a) / 2}")


def random_hypergraph(cfg: GenConfig) -> UniformHypergraph:
    """m distinct hyperedges, each uniform over a-subsets; deterministic in the seed."""
    rng = SplitMix64(cfg.seed)
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    while len(out) < cfg.m:
        he = tuple(sorted(rng.sample_distinct(cfg.n, cfg.a)))
        if he in seen:
            continue
        seen.add(he)
        out.append(he)
    return UniformHypergraph(cfg.a, cfg.n, tuple(out))


def random_oriented(cfg: GenConfig) -> OrientedHypergraph:
    """Uniform underlying sets as in :func:`random_hypergraph`; each hyperedge's
    vertex order uniform and independent (an ordered distinct sample is
    exactly a uniform set with a uniform order)."""
    rng = SplitMix64(cfg.seed)
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []
    while len(out) < cfg.m:
        seq = tuple(rng.sample_distinct(cfg.n, cfg.a))
        key = tuple(sorted(seq))
        if key in seen:
            continue
        seen.add(key)
        out.append(seq)
    return OrientedHypergraph(cfg.a, cfg.n, tuple(out))


def _repair_kept_indices(h: UniformHypergraph, k: int) -> list[int]:
    """Indices (into h.hyperedges) surviving shortest-first deletion.

    While a Berge cycle with at most k hyperedges exists, delete the
    lowest-index hyperedge of a deterministically chosen shortest cycle.
    Each deletion destroys at least one short cycle of the input, so the
    number of deletions never exceeds the input's short-cycle count.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    kept = list(range(h.m))
    current = list(h.hyperedges)
    while True:
        sub = UniformHypergraph(h.a, h.n, tuple(current))
        cycle = shortest_berge_cycle(sub)
        if cycle is None or len(cycle) > k:
            return kept
        drop = min(idx for idx, _ in cycle)
        del current[drop]
        del kept[drop]


def repair_girth(h: UniformHypergraph, k: int) -> UniformHypergraph:
    """Subhypergraph with Berge girth > k, by iterated shortest-cycle deletion."""
    kept = _repair_kept_indices(h, k)
    return UniformHypergraph(h.a, h.n, tuple(h.hyperedges[i] for i in kept))


def repair_girth_oriented(o: OrientedHypergraph, k: int) -> OrientedHypergraph:
    """Same deletion sequence as :func:`repair_girth`, applied to the
    underlying hypergraph; surviving hyperedges keep their orders."""
    kept = _repair_kept_indices(o.underlying(), k)
    return OrientedHypergraph(o.a, o.n, tuple(o.hyperedges[i] for i in kept))


def hoeffding_sample_size(eps: float, delta: float) -> int:
    """Smallest m with 2 exp(-2 eps^2 m) <= delta, i.e. ceil(ln(2/delta) / (2 eps^2))."""
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    return max(1, math.ceil(math.log(2 / delta) / (2 * eps * eps)))


def _bfs_distance(adj, src: int, dst: int, cutoff: int) -> int | None:
    """Shortest-path length src -> dst if it is <= cutoff, else None."""
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        d = dist[v]
        if d >= cutoff:
            continue
        for w in adj[v]:
            if w not in dist:
                if w == dst:
                    return d + 1
                dist[w] = d + 1
                queue.append(w)
    return None


def high_girth_bipartite(n_per_side: int, target_girth: int, min_degree: int,
                         seed: int, *, max_attempts: int = 200) -> BipartiteGraph:
    """Connected bipartite graph with girth >= target_girth and the given
    minimum degree, by greedy randomized edge insertion.

    An edge is inserted only when the current endpoint distance is at least
    target_girth - 1, so every created cycle has length >= target_girth.
    A first phase raises every vertex to min_degree while the graph is
    sparse; a second phase inserts along a random order of all remaining
    pairs (rejection is monotone, so one pass reaches a maximal graph and,
    in particular, a connected one). Tree edges joining components are added
    afterwards only as a safeguard. Retries with derived seeds; raises
    InfeasibleError when no attempt meets the degree bound.
    """
    if n_per_side < 1 or target_girth < 4 or min_degree < 1:
        raise ValueError("need n_per_side >= 1, target_girth >= 4, min_degree >= 1")
    n = 2 * n_per_side
    side_a = tuple(range(n_per_side))
    side_b = tuple(range(n_per_side, n))

    for attempt in range(max_attempts):
        rng = SplitMix64(derive_seed(seed, attempt))
        adj: list[set[int]] = [set() for _ in range(n)]
        edges: set[tuple[int, int]] = set()

        def try_insert(u: int, v: int) -> bool:
            d = _bfs_distance(adj, u, v, target_girth - 2)
            if d is not None:  # closing a cycle shorter than target_girth
                return False
            adj[u].add(v)
            adj[v].add(u)
            edges.add((u, v) if u < v else (v, u))
            return True

        # Phase 1: satisfy the degree floor vertex by vertex.
        order = list(range(n))
        rng.shuffle(order)
        ok = True
        for v in order:
            partners = list(side_b if v < n_per_side else side_a)
            rng.shuffle(partners)
            for w in partners:
                if len(adj[v]) >= min_degree:
                    break
                if w not in adj[v]:
                    try_insert(v, w)
            if len(adj[v]) < min_degree:
                ok = False
                break
        if not ok:
            continue

        # Phase 2: maximal fill over a random order of all remaining pairs.
        pairs = [(u, w) for u in side_a for w in side_b if w not in adj[u]]
        rng.shuffle(pairs)
        for u, w in pairs:
            try_insert(u, w)

        # Safeguard: join any leftover components without creating cycles
        # (a maximal pass already connects the graph, but stay defensive).
        comp = _components(adj)
        while len(set(comp)) > 1:
            c0 = comp[0]
            u = next((v for v in side_a if comp[v] == c0), None)
            w = next((v for v in side_b if comp[v] != c0), None)
            if u is None or w is None:
                u = next(v for v in side_a if comp[v] != c0)
                w = next(v for v in side_b if comp[v] == c0)
            adj[u].add(w)
            adj[w].add(u)
            edges.add((u, w))
            comp = _components(adj)

        if min(len(adj[v]) for v in range(n)) >= min_degree:
            return BipartiteGraph(n, frozenset(edges), side_a, side_b)

    raise InfeasibleError(
        f"no girth-{target_girth} bipartite graph with min degree {min_degree} "
        f"on {n_per_side}+{n_per_side} vertices within {max_attempts} attempts")


def _components(adj) -> list[int]:
    comp = [-1] * len(adj)
    cid = 0
    for s in range(len(adj)):
        if comp[s] >= 0:
            continue
        comp[s] = cid
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if comp[w] < 0:
                    comp[w] = cid
                    stack.append(w)
        cid += 1
    return comp
