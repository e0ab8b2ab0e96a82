"""Exact desk-scale solvers used as ground truth.

All solvers are deterministic branch-and-bound searches that either return
a certified optimum or raise SearchBudgetExceededError; there are no
best-effort answers in exact mode. Budgets combine a node limit and a wall
clock limit.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import SearchBudgetExceededError
from .graphs import Edge, Graph, edge, has_cycle_of_length

DEFAULT_ORACLE_NODES = 50_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits for one oracle invocation."""

    max_nodes: int | None = DEFAULT_ORACLE_NODES
    max_seconds: float | None = None

    def deadline(self) -> float | None:
        return None if self.max_seconds is None else time.monotonic() + self.max_seconds


class _Meter:
    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: SearchBudget | None) -> None:
        budget = budget or SearchBudget()
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = budget.deadline()

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchBudgetExceededError(f"oracle exceeded {self.max_nodes} nodes")
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise SearchBudgetExceededError("oracle exceeded time budget")


# ---------------------------------------------------------------------------
# Maximum C4-free subgraph


def max_c4free_subgraph(g: Graph, budget: SearchBudget | None = None
                        ) -> tuple[int, frozenset[Edge]]:
    """Maximum-cardinality C4-free edge subset, certified optimal.

    Branch and bound over edges in descending degree-sum order with
    incremental C4 detection; optimistic bound = current + remaining.
    """
    meter = _Meter(budget)
    deg = [g.degree(v) for v in range(g.n)]
    order = sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))
    adj: list[set[int]] = [set() for _ in range(g.n)]
    chosen: list[Edge] = []
    best_size = 0
    best_edges: list[Edge] = []

    def creates_c4(u: int, v: int) -> bool:
        # a C4 through the new edge is a chosen path v-x-y-u of length 3
        for x in adj[v]:
            if x == u:
                continue
            for y in adj[x]:
                if y != v and y != u and u in adj[y]:
                    return True
        return False

    def rec(i: int, cur: int) -> None:
        nonlocal best_size, best_edges
        meter.tick()
        if cur > best_size:
            best_size, best_edges = cur, list(chosen)
        if i == len(order) or cur + (len(order) - i) <= best_size:
            return
        u, v = order[i]
        if not creates_c4(u, v):
            adj[u].add(v)
            adj[v].add(u)
            chosen.append((u, v))
            rec(i + 1, cur + 1)
            chosen.pop()
            adj[u].remove(v)
            adj[v].remove(u)
        rec(i + 1, cur)

    rec(0, 0)
    return best_size, frozenset(best_edges)


def complete_bipartite_c4free_bound(u: int, w: int) -> tuple[int, Graph | None]:
    """The closed-form cap w + C(u,2) on C4-free subgraphs of K_{u,w}, with an
    attaining witness when w >= C(u,2).

    Witness: give each of the C(u,2) pairs of U-vertices its own private
    W-vertex of degree 2; every remaining W-vertex hangs off U-vertex 0.
    No two U-vertices then share two common neighbors.
    """
    if u < 1 or w < 1:
        raise ValueError("need u, w >= 1")
    bound = w + comb(u, 2)
    if w < comb(u, 2):
        return bound, None
    edges: list[Edge] = []
    pairs = [(i, j) for i in range(u) for j in range(i + 1, u)]
    for p, (i, j) in enumerate(pairs):
        wv = u + p
        edges.append((i, wv))
        edges.append((j, wv))
    for wv in range(u + len(pairs), u + w):
        edges.append((0, wv))
    return bound, Graph.from_edges(u + w, edges)


# ---------------------------------------------------------------------------
# Maximum bipartite subgraph of girth > g


@dataclass(frozen=True, eq=False)
class BipartiteGirthResult:
    size: int
    edges: frozenset[Edge]
    colors: tuple[int, ...]  # proper 2-coloring of the subgraph; 0 on uncovered vertices


def _greedy_clique_groups(g: Graph) -> list[list[Edge]]:
    """Edge-disjoint clique partition (greedy); leftovers become singletons."""
    unused = set(g.edges)
    groups: list[list[Edge]] = []
    for u, v in g.sorted_edges():
        if (u, v) not in unused:
            continue
        clique = [u, v]
        for w in sorted(g.adjacency_sets[u] & g.adjacency_sets[v]):
            if all(edge(w, x) in unused for x in clique):
                clique.append(w)
        es = [edge(x, y) for i, x in enumerate(clique) for y in clique[i + 1:]]
        if len(clique) >= 3:
            unused.difference_update(es)
            groups.append(sorted(es))
    for e in sorted(unused):
        groups.append([e])
    return groups


def max_bipartite_girth_subgraph(g: Graph, girth_gt: int,
                                 budget: SearchBudget | None = None, *,
                                 groups: list[tuple[list[Edge], int]] | None = None
                                 ) -> BipartiteGirthResult:
    """Maximum edge subset that is simultaneously bipartite and of girth
    > girth_gt, certified optimal.

    The optimistic bound sums per-group capacities over an edge-disjoint
    group decomposition: by default a greedy clique partition (a clique on c
    vertices contributes at most c-1 edges once girth_gt >= c), or caller-
    supplied ``groups`` as (edge list, cap) pairs covering the edge set.
    """
    meter = _Meter(budget)
    if groups is None:
        caps = []
        for es in _greedy_clique_groups(g):
            verts = {v for e in es for v in e}
            cap = len(verts) - 1 if len(es) > 1 and girth_gt >= len(verts) else len(es)
            caps.append((es, cap))
        groups = caps
    order: list[Edge] = []
    gid_of: list[int] = []
    cap = []
    for gi, (es, c) in enumerate(groups):
        for e in es:
            order.append(e)
            gid_of.append(gi)
        cap.append(c)
    if set(order) != g.edges or len(order) != g.e:
        raise ValueError("groups must partition the edge set")

    n_groups = len(groups)
    used = [0] * n_groups
    undecided = [len(es) for es, _ in groups]
    adj: list[set[int]] = [set() for _ in range(g.n)]
    chosen: list[Edge] = []
    best_size = -1
    best_edges: list[Edge] = []

    def addable(u: int, v: int) -> bool:
        # parity and shortest-path distance between u and v in the chosen
        # subgraph decide everything: unreachable is always fine; an even
        # distance would close an odd cycle; an odd distance d closes cycles
        # of length >= d+1, so d >= girth_gt is required.
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    if y == v:
                        d = dist[x] + 1
                        return d % 2 == 1 and d >= girth_gt
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return True

    def slack() -> int:
        return sum(min(cap[i] - used[i], undecided[i]) for i in range(n_groups))

    def rec(i: int, cur: int) -> None:
        nonlocal best_size, best_edges
        meter.tick()
        if cur > best_size:
            best_size, best_edges = cur, list(chosen)
        if i == len(order) or cur + slack() <= best_size:
            return
        u, v = order[i]
        gi = gid_of[i]
        undecided[gi] -= 1
        if used[gi] < cap[gi] and addable(u, v):
            adj[u].add(v)
            adj[v].add(u)
            chosen.append((u, v))
            used[gi] += 1
            rec(i + 1, cur + 1)
            used[gi] -= 1
            chosen.pop()
            adj[u].remove(v)
            adj[v].remove(u)
        rec(i + 1, cur)
        undecided[gi] += 1

    rec(0, 0)

    final_adj: dict[int, list[int]] = {}
    for u, v in best_edges:
        final_adj.setdefault(u, []).append(v)
        final_adj.setdefault(v, []).append(u)
    colors = [0] * g.n
    seen: set[int] = set()
    for root in sorted(final_adj):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in final_adj[x]:
                if y not in seen:
                    seen.add(y)
                    colors[y] = 1 - colors[x]
                    queue.append(y)
    return BipartiteGirthResult(best_size, frozenset(best_edges), tuple(colors))


# ---------------------------------------------------------------------------
# Maximum cut


def max_cut(g: Graph, budget: SearchBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact maximum bipartite subgraph size with an attaining bipartition.

    Vertices are assigned in descending-degree order; the optimistic bound
    counts every edge not yet fixed on both endpoints. The first vertex is
    pinned to side 0 (complement symmetry).
    """
    meter = _Meter(budget)
    if g.n == 0:
        return 0, ()
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    side = [-1] * g.n
    adj = g.adjacency
    best_cut = -1
    best_side: tuple[int, ...] = ()

    def rec(t: int, cut: int, pool: int) -> None:
        nonlocal best_cut, best_side
        meter.tick()
        if t == g.n:
            if cut > best_cut:
                best_cut, best_side = cut, tuple(side)
            return
        if cut + pool <= best_cut:
            return
        v = order[t]
        assigned = [w for w in adj[v] if side[w] >= 0]
        for s in ((0,) if t == 0 else (0, 1)):
            gain = sum(1 for w in assigned if side[w] != s)
            side[v] = s
            rec(t + 1, cut + gain, pool - len(assigned))
            side[v] = -1

    rec(0, 0, g.e)
    return best_cut, best_side


def certify_c2k_free(g: Graph, k: int, budget: SearchBudget | None = None) -> bool:
    """True iff g has no cycle on exactly 2k vertices."""
    if k < 2:
        raise ValueError("need k >= 2")
    budget = budget or SearchBudget()
    return not has_cycle_of_length(g, 2 * k, max_steps=budget.max_nodes,
                                   deadline=budget.deadline())
