"""Core graph and hypergraph types plus short-cycle machinery.

Conventions used throughout the package:

* Vertices are dense 0-based integers below ``n``.
* An edge is stored as an ordered pair ``(u, v)`` with ``u < v``.
* Hyperedges of a :class:`UniformHypergraph` are ascending tuples kept in
  insertion ("file") order; the order is load-bearing for deterministic
  deletion procedures.
* Girth values are plain ints; the absence of any cycle is reported as
  ``math.inf`` (exposed as :data:`INFINITE`), never as a sentinel integer.

A Berge cycle of length ``l >= 2`` consists of ``l`` distinct hyperedges
``e_1, ..., e_l`` and ``l`` distinct defining vertices ``v_1, ..., v_l``
with ``v_i in e_i & e_{i+1}`` (indices mod ``l``). Length-2 Berge cycles
count: Berge girth 2 is exactly "two hyperedges share more than one
vertex", and Berge girth > 2 is equivalent to linearity.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import NotBipartiteError, SearchBudgetExceededError

INFINITE: float = math.inf

GirthValue = int | float
Edge = tuple[int, int]

DEFAULT_CYCLE_SEARCH_STEPS = 100_000_000


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair."""
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        return cls(n, frozenset(edge(u, v) for u, v in pairs))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class BipartiteGraph(Graph):
    """Graph with vertex classes ``side_a`` and ``side_b``.

    The tuples carry a total order on each side (index order); the order is
    meaningful for the edge-poset construction in :mod:`girthlab.layering`.
    """

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def __post_init__(self) -> None:
        Graph.__post_init__(self)
        a, b = set(self.side_a), set(self.side_b)
        if len(a) != len(self.side_a) or len(b) != len(self.side_b):
            raise NotBipartiteError("duplicate vertex inside a class")
        if a & b or len(a) + len(b) != self.n or (a | b) != set(range(self.n)):
            raise NotBipartiteError("classes must partition the vertex set")
        for u, v in self.edges:
            if (u in a) == (v in a):
                raise NotBipartiteError(f"edge ({u}, {v}) stays inside one class")

    @classmethod
    def from_classes(cls, n: int, pairs, side_a, side_b) -> "BipartiteGraph":
        return cls(n, frozenset(edge(u, v) for u, v in pairs),
                   tuple(side_a), tuple(side_b))

    @classmethod
    def from_graph(cls, g: Graph) -> "BipartiteGraph":
        """2-color ``g`` (per component, color 0 on the smallest vertex).

        Raises NotBipartiteError when an odd cycle exists. Vertex orders on
        both sides default to ascending index order.
        """
        color = [-1] * g.n
        for start in range(g.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in g.adjacency[v]:
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        raise NotBipartiteError("graph contains an odd cycle")
        side_a = tuple(v for v in range(g.n) if color[v] == 0)
        side_b = tuple(v for v in range(g.n) if color[v] == 1)
        return cls(g.n, g.edges, side_a, side_b)


@dataclass(frozen=True)
class UniformHypergraph:
    """a-uniform hypergraph; hyperedges are ascending tuples in file order."""

    a: int
    n: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.a < 2:
            raise ValueError("uniformity must be >= 2")
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        seen = set()
        for he in self.hyperedges:
            if len(he) != self.a or len(set(he)) != self.a:
                raise ValueError(f"hyperedge {he} is not a set of {self.a} vertices")
            if list(he) != sorted(he):
                raise ValueError(f"hyperedge {he} is not ascending")
            if not all(0 <= v < self.n for v in he):
                raise ValueError(f"hyperedge {he} out of range for n={self.n}")
            if he in seen:
                raise ValueError(f"duplicate hyperedge {he}")
            seen.add(he)

    @classmethod
    def from_edges(cls, a: int, n: int, hyperedges) -> "UniformHypergraph":
        return cls(a, n, tuple(tuple(sorted(he)) for he in hyperedges))

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def by_vertex(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, ascending indices of the hyperedges containing it."""
        idx: list[list[int]] = [[] for _ in range(self.n)]
        for i, he in enumerate(self.hyperedges):
            for v in he:
                idx[v].append(i)
        return tuple(tuple(xs) for xs in idx)

    def covered_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.by_vertex[v]]


@dataclass(frozen=True)
class OrientedHypergraph:
    """a-uniform hypergraph whose hyperedges carry a vertex order.

    Hyperedges are sequences of distinct vertices; two hyperedges may not
    have the same underlying vertex set.
    """

    a: int
    n: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.a < 2:
            raise ValueError("uniformity must be >= 2")
        seen = set()
        for he in self.hyperedges:
            if len(he) != self.a or len(set(he)) != self.a:
                raise ValueError(f"hyperedge {he} is not {self.a} distinct vertices")
            if not all(0 <= v < self.n for v in he):
                raise ValueError(f"hyperedge {he} out of range for n={self.n}")
            key = tuple(sorted(he))
            if key in seen:
                raise ValueError(f"two hyperedges share the underlying set {key}")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def underlying(self) -> UniformHypergraph:
        return UniformHypergraph(
            self.a, self.n, tuple(tuple(sorted(he)) for he in self.hyperedges))


class _Meter:
    """Step/time accounting for exhaustive searches."""

    __slots__ = ("steps", "max_steps", "deadline")

    def __init__(self, max_steps: int | None, deadline: float | None) -> None:
        self.steps = 0
        self.max_steps = max_steps
        self.deadline = deadline

    def tick(self) -> None:
        self.steps += 1
        if self.max_steps is not None and self.steps > self.max_steps:
            raise SearchBudgetExceededError(
                f"cycle search exceeded {self.max_steps} steps")
        if self.deadline is not None and self.steps % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise SearchBudgetExceededError("cycle search exceeded time budget")


# ---------------------------------------------------------------------------
# Girth


def _girth_adj(adj) -> GirthValue:
    """Exact girth of the graph given by adjacency lists, by BFS from every
    vertex with non-tree-contact candidates d(u) + d(v) + 1."""
    n = len(adj)
    best: GirthValue = INFINITE
    for r in range(n):
        if len(adj[r]) < 2:
            continue  # a cycle vertex has degree >= 2
        dist = [-1] * n
        parent = [-1] * n
        dist[r] = 0
        queue = deque([r])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if 2 * dv >= best:
                continue  # no candidate through v can beat best
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w and parent[w] != v:
                    cand = dv + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def _shortest_cycle_adj(adj) -> list[int] | None:
    """One shortest cycle (vertex list) of the adjacency-list graph, or None.

    Deterministic: roots ascending, neighbors ascending, first optimum kept.
    """
    n = len(adj)
    best: GirthValue = INFINITE
    hit: tuple[int, int, int] | None = None
    for r in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[r] = 0
        queue = deque([r])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if 2 * dv >= best:
                continue
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w and parent[w] != v:
                    cand = dv + dist[w] + 1
                    if cand < best:
                        best = cand
                        hit = (r, v, w)
    if hit is None:
        return None
    r, v, w = hit
    # Re-run the BFS from r to recover parents (same deterministic traversal).
    dist = [-1] * n
    parent = [-1] * n
    dist[r] = 0
    queue = deque([r])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    path_v = [v]
    while path_v[-1] != r:
        path_v.append(parent[path_v[-1]])
    path_w = [w]
    while path_w[-1] != r:
        path_w.append(parent[path_w[-1]])
    cycle = list(reversed(path_v)) + path_w[:-1]
    # A minimum-length closed walk through a once-used edge is a simple cycle.
    if len(cycle) != best or len(set(cycle)) != len(cycle):
        raise AssertionError("internal error: shortest cycle recovery failed")
    return cycle


def girth(g: Graph) -> GirthValue:
    """Length of a shortest cycle; INFINITE for forests."""
    return _girth_adj(g.adjacency)


# ---------------------------------------------------------------------------
# Fixed-length cycle search (depth-limited DFS, smallest vertex anchored)


def _bfs_dist_from(adj, s: int, floor: int, cutoff: int) -> list[int]:
    """BFS distances from s inside the vertex set {v >= floor}; unreached = big."""
    n = len(adj)
    big = cutoff + 1
    dist = [big] * n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if dist[v] >= cutoff:
            continue
        for w in adj[v]:
            if w >= floor and dist[w] > dist[v] + 1:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _anchored_cycles(g: Graph, length: int, meter: _Meter, collect: list | None,
                     max_cycles: int | None) -> bool:
    """DFS for simple cycles with exactly ``length`` vertices.

    Cycles are anchored at their smallest vertex and traversed with
    second-vertex < last-vertex, so each cycle is visited exactly once.
    Returns True as soon as one cycle is found when ``collect`` is None,
    otherwise fills ``collect`` with vertex tuples.
    """
    adj = g.adjacency
    adj_sets = g.adjacency_sets
    found = False

    for s in range(g.n):
        if len(adj[s]) < 2:
            continue
        dist = _bfs_dist_from(adj, s, s, length - 1)
        path = [s]
        on_path = {s}

        def dfs(v: int, depth: int) -> bool:
            # depth = number of edges used so far
            meter.tick()
            if depth == length - 1:
                if s in adj_sets[v] and path[1] < v:
                    if collect is None:
                        return True
                    collect.append(tuple(path))
                    if max_cycles is not None and len(collect) > max_cycles:
                        raise SearchBudgetExceededError(
                            f"more than {max_cycles} cycles of length {length}")
                return False
            budget_left = length - depth - 1
            for w in adj[v]:
                if w > s and w not in on_path and dist[w] <= budget_left:
                    path.append(w)
                    on_path.add(w)
                    if dfs(w, depth + 1):
                        return True
                    path.pop()
                    on_path.remove(w)
            return False

        if dfs(s, 0):
            found = True
            if collect is None:
                return True
    return found


def has_cycle_of_length(g: Graph, length: int, *,
                        max_steps: int | None = DEFAULT_CYCLE_SEARCH_STEPS,
                        deadline: float | None = None) -> bool:
    """True iff g contains a cycle on exactly ``length`` vertices.

    Raises SearchBudgetExceededError once ``max_steps`` DFS nodes have been
    expanded, rather than returning a possibly wrong answer.
    """
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    meter = _Meter(max_steps, deadline)
    return _anchored_cycles(g, length, meter, collect=None, max_cycles=None)


def enumerate_cycles(g: Graph, length: int, *, max_cycles: int = 1_000_000,
                     max_steps: int | None = DEFAULT_CYCLE_SEARCH_STEPS,
                     deadline: float | None = None) -> list[tuple[int, ...]]:
    """All simple cycles with exactly ``length`` vertices, one tuple per cycle.

    Errors out (never truncates) when more than ``max_cycles`` exist or the
    step budget runs dry.
    """
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    meter = _Meter(max_steps, deadline)
    out: list[tuple[int, ...]] = []
    _anchored_cycles(g, length, meter, collect=out, max_cycles=max_cycles)
    return out


# ---------------------------------------------------------------------------
# Berge girth and Berge-cycle machinery


def _incidence_adjacency(h: UniformHypergraph) -> list[list[int]]:
    """Vertex nodes 0..n-1, hyperedge node n+i for hyperedge i."""
    adj: list[list[int]] = [[] for _ in range(h.n + h.m)]
    for i, he in enumerate(h.hyperedges):
        node = h.n + i
        for v in he:
            adj[v].append(node)
            adj[node].append(v)
    return adj


def berge_girth(h: UniformHypergraph) -> GirthValue:
    """Length of a shortest Berge cycle; INFINITE if none exists.

    Returns 2 exactly when two hyperedges share more than one vertex; for
    linear hypergraphs this is half the girth of the vertex-hyperedge
    incidence graph.
    """
    seen_pairs: set[Edge] = set()
    for he in h.hyperedges:
        for p in combinations(he, 2):
            if p in seen_pairs:
                return 2
            seen_pairs.add(p)
    if h.m < 2:
        return INFINITE
    inc = _girth_adj(_incidence_adjacency(h))
    return INFINITE if inc is INFINITE else int(inc) // 2


BergeCycle = list[tuple[int, int]]  # [(hyperedge index, defining vertex), ...]


def shortest_berge_cycle(h: UniformHypergraph) -> BergeCycle | None:
    """A shortest Berge cycle as (hyperedge index, defining vertex) pairs.

    Deterministic; None when the hypergraph is Berge-acyclic.
    """
    pair_owner: dict[Edge, int] = {}
    for j, he in enumerate(h.hyperedges):
        for p in combinations(he, 2):
            if p in pair_owner:
                i = pair_owner[p]
                return [(i, p[0]), (j, p[1])]
            pair_owner[p] = j
    if h.m < 2:
        return None
    nodes = _shortest_cycle_adj(_incidence_adjacency(h))
    if nodes is None:
        return None
    # Rotate so the cycle starts on a hyperedge node, then read off the
    # defining vertex that follows each hyperedge.
    start = next(t for t, x in enumerate(nodes) if x >= h.n)
    nodes = nodes[start:] + nodes[:start]
    out: BergeCycle = []
    for t in range(0, len(nodes), 2):
        out.append((nodes[t] - h.n, nodes[t + 1]))
    return out


def count_short_berge_cycles(h: UniformHypergraph, k: int, *,
                             max_steps: int | None = DEFAULT_CYCLE_SEARCH_STEPS,
                             deadline: float | None = None) -> int:
    """Exact number of Berge cycles with at most k hyperedges.

    Cycles are counted as configurations (hyperedge cycle plus defining
    vertices) up to rotation and reflection. Direct DFS over hyperedge
    sequences; independent of the incidence-girth route.
    """
    if k < 2:
        return 0
    meter = _Meter(max_steps, deadline)
    by_vertex = h.by_vertex
    hyperedges = h.hyperedges
    vertex_sets = [set(he) for he in hyperedges]
    count = 0

    # path state: hyperedge indices (all > e0 except the anchor e0) and the
    # defining vertices committed between consecutive path edges
    edges_used: list[int] = []
    used_edge_set: set[int] = set()
    used_vs: set[int] = set()

    def close_count(e0: int) -> int:
        last = edges_used[-1]
        length = len(edges_used)
        c = 0
        for v in hyperedges[last]:
            if v in used_vs or v not in vertex_sets[e0]:
                continue
            if length == 2:
                if min(used_vs) < v:  # reflection swaps the two vertices
                    c += 1
            elif edges_used[1] < edges_used[-1]:
                c += 1
        return c

    def extend(e0: int, depth: int) -> None:
        nonlocal count
        meter.tick()
        cur = edges_used[-1]
        if depth >= 2:
            count += close_count(e0)
        if depth == k:
            return
        for v in hyperedges[cur]:
            if v in used_vs:
                continue
            for f in by_vertex[v]:
                if f <= e0 or f in used_edge_set:
                    continue
                edges_used.append(f)
                used_edge_set.add(f)
                used_vs.add(v)
                extend(e0, depth + 1)
                used_vs.remove(v)
                used_edge_set.remove(f)
                edges_used.pop()

    for e0 in range(h.m):
        edges_used = [e0]
        used_edge_set = {e0}
        used_vs = set()
        extend(e0, 1)
    return count


def is_connected(h: UniformHypergraph) -> bool:
    """True iff any two covered vertices are joined by a hyperedge path.

    Vacuously true for the empty hypergraph; ambient isolated vertices are
    ignored.
    """
    covered = h.covered_vertices()
    if not covered:
        return True
    root = covered[0]
    seen_v = {root}
    seen_e: set[int] = set()
    stack = [root]
    while stack:
        v = stack.pop()
        for i in h.by_vertex[v]:
            if i in seen_e:
                continue
            seen_e.add(i)
            for w in h.hyperedges[i]:
                if w not in seen_v:
                    seen_v.add(w)
                    stack.append(w)
    return len(seen_v) == len(covered)


def largest_component(h: UniformHypergraph) -> UniformHypergraph:
    """Subhypergraph induced by the component with the most hyperedges.

    Vertex ids are preserved. Ties go to the component containing the
    smallest vertex.
    """
    comp = [-1] * h.n
    comp_edges: list[list[int]] = []
    for v in range(h.n):
        if comp[v] >= 0 or not h.by_vertex[v]:
            continue
        cid = len(comp_edges)
        comp[v] = cid
        edges_here: list[int] = []
        seen_e: set[int] = set()
        stack = [v]
        while stack:
            x = stack.pop()
            for i in h.by_vertex[x]:
                if i in seen_e:
                    continue
                seen_e.add(i)
                edges_here.append(i)
                for w in h.hyperedges[i]:
                    if comp[w] < 0:
                        comp[w] = cid
                        stack.append(w)
        comp_edges.append(sorted(edges_here))
    if not comp_edges:
        return UniformHypergraph(h.a, h.n, ())
    best = max(comp_edges, key=len)
    return UniformHypergraph(h.a, h.n, tuple(h.hyperedges[i] for i in best))


def two_shadow(h: UniformHypergraph) -> Graph:
    """Graph with an edge uv whenever some hyperedge contains both u and v."""
    pairs: set[Edge] = set()
    for he in h.hyperedges:
        pairs.update(combinations(he, 2))
    return Graph(h.n, frozenset(pairs))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_bipartite(n: int) -> BipartiteGraph:
    """The even cycle C_n as a bipartite graph (evens vs odds, index order)."""
    if n % 2:
        raise ValueError("only even cycles are bipartite")
    g = cycle_graph(n)
    return BipartiteGraph(n, g.edges, tuple(range(0, n, 2)), tuple(range(1, n, 2)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(u: int, w: int) -> BipartiteGraph:
    """K_{u,w} with A = 0..u-1 and B = u..u+w-1."""
    edges = [(i, u + j) for i in range(u) for j in range(w)]
    return BipartiteGraph.from_classes(u + w, edges, range(u), range(u, u + w))


def is_acyclic(g: Graph) -> bool:
    """Union-find forest test; independent of the BFS girth route."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.sorted_edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True
