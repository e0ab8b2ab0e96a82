"""Blowups and pastings.

* Clique blowup: replace each hyperedge of an a-uniform linear hypergraph
  with a complete graph on its vertices. With a = 2k-1 and Berge girth
  > 2k the result is C_{2k}-free and has C(a,2) * m edges (the cliques are
  edge-disjoint by linearity).
* Bipartite blowup: replace each oriented (k-1+l)-uniform hyperedge with a
  complete bipartite graph between its first k-1 and last l vertices;
  m(k-1)l edges, C_{2k}-free under the same girth hypothesis.
* Doubled-bipartite pasting: a bipartite base graph, a mirror copy, and a
  path of l-2 edges joining each B-side vertex to its mirror image. Every
  edge lies on a cycle of length 2l, and with base girth >= 2k+2 (>= 10 for
  l=3, k=4) the result is C_{2k}-free.
* Hypergraph-doubling pasting: double every vertex of a linear 3-uniform
  hypergraph and trace a 6-cycle through each doubled hyperedge
  (u_i u'_i, u'_i u_j, u_j u'_j, u'_j u_k, u_k u'_k, u'_k u_i for i<j<k).
  Doubled-vertex edges are "fat", the rest "thin"; each hyperedge adds
  exactly three new thin edges, so e = 3m + #covered vertices. Berge girth
  >= 9 in the source makes the result C8-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    MinDegreeError,
    NotConnectedError,
    NotLinearError,
    SearchBudgetExceededError,
    UniformityError,
)
from .graphs import (
    BipartiteGraph,
    Edge,
    Graph,
    OrientedHypergraph,
    UniformHypergraph,
    edge,
    enumerate_cycles,
    is_connected,
)


@dataclass(frozen=True, eq=False)
class BlowupGraph:
    """Graph obtained by replacing hyperedges with fixed small graphs.

    ``blocks`` holds the original hyperedge vertex tuples; for linear
    sources the per-block edge sets are pairwise disjoint and partition the
    edge set. ``kind`` is "clique" or "bipartite"; bipartite blowups also
    record the (k, l) split.
    """

    graph: Graph
    blocks: tuple[tuple[int, ...], ...]
    kind: str
    k: int | None = None
    l: int | None = None

    def block_edges(self, i: int) -> list[Edge]:
        blk = self.blocks[i]
        if self.kind == "clique":
            return [edge(u, v) for u, v in combinations(blk, 2)]
        head, tail = blk[:self.k - 1], blk[self.k - 1:]
        return [edge(u, v) for u in head for v in tail]


def _check_linear(hyperedges) -> None:
    seen: dict[Edge, int] = {}
    for i, he in enumerate(hyperedges):
        for p in combinations(sorted(he), 2):
            if p in seen:
                raise NotLinearError(
                    f"hyperedges {seen[p]} and {i} share the pair {p}")
            seen[p] = i


def clique_blowup(h: UniformHypergraph) -> BlowupGraph:
    """Complete graph on every hyperedge; requires linearity so the cliques
    are edge-disjoint and e = C(a,2) * m exactly."""
    _check_linear(h.hyperedges)
    edges: set[Edge] = set()
    for he in h.hyperedges:
        edges.update(combinations(he, 2))
    g = Graph(h.n, frozenset(edges))
    if g.e != comb(h.a, 2) * h.m:
        raise AssertionError("internal error: blowup cliques not edge-disjoint")
    return BlowupGraph(g, h.hyperedges, "clique")


def bipartite_blowup(o: OrientedHypergraph, k: int, l: int) -> BlowupGraph:
    """K_{k-1,l} between the first k-1 and last l vertices of each hyperedge."""
    if k < 2 or l < 1:
        raise ValueError("need k >= 2 and l >= 1")
    if o.a != k - 1 + l:
        raise UniformityError(f"uniformity {o.a} != (k-1)+l = {k - 1 + l}")
    _check_linear(o.hyperedges)
    edges: set[Edge] = set()
    for he in o.hyperedges:
        head, tail = he[:k - 1], he[k - 1:]
        for u in head:
            for v in tail:
                edges.add(edge(u, v))
    g = Graph(o.n, frozenset(edges))
    if g.e != o.m * (k - 1) * l:
        raise AssertionError("internal error: blowup blocks not edge-disjoint")
    return BlowupGraph(g, o.hyperedges, "bipartite", k=k, l=l)


def blowup_groups(bg: BlowupGraph, girth_gt: int) -> list[tuple[list[Edge], int]]:
    """Edge groups with per-group caps for the girth-subgraph oracle.

    Any subgraph of girth > girth_gt restricted to a block can keep at most
    ``cap`` edges: a clique on c vertices admits only forests once
    girth_gt >= c (cap c-1); a complete bipartite K_{u,w} block is capped by
    the C4-free bound min(w + C(u,2), u + C(w,2)) once girth_gt >= 4, and by
    the forest bound once girth_gt >= 2*min(u,w).
    """
    out = []
    for i, blk in enumerate(bg.blocks):
        es = bg.block_edges(i)
        caps = [len(es)]
        c = len(blk)
        if bg.kind == "clique":
            if girth_gt >= c:
                caps.append(c - 1)
        else:
            u, w = bg.k - 1, bg.l
            if girth_gt >= 4:
                caps.append(min(w + comb(u, 2), u + comb(w, 2)))
            if girth_gt >= 2 * min(u, w):
                caps.append(c - 1)
        out.append((es, min(caps)))
    return out


def count_non_monochromatic_blocks(bg: BlowupGraph, colors) -> int:
    """Blocks whose vertices see at least two colors under ``colors``."""
    return sum(1 for blk in bg.blocks if len({colors[v] for v in blk}) > 1)


def clique_decomposition_bound_ok(bg: BlowupGraph, chosen: set[Edge], colors) -> bool:
    """Check e(B) <= (a-1) * #non-monochromatic blocks for a clique blowup.

    ``colors`` must properly 2-color the chosen subgraph; any clique block
    can contribute at most a-1 = 2k-2 acyclic edges, and blocks that are
    monochromatic contribute none because every chosen edge is bichromatic.
    """
    if bg.kind != "clique":
        raise ValueError("decomposition bound applies to clique blowups")
    a = len(bg.blocks[0]) if bg.blocks else 0
    return len(chosen) <= (a - 1) * count_non_monochromatic_blocks(bg, colors)


# ---------------------------------------------------------------------------
# Pastings


@dataclass(frozen=True, eq=False)
class PastedGraph:
    """Graph built by pasting cycles, with per-edge labels and provenance.

    Labels are ``fat``/``thin`` for the hypergraph-doubling pasting and
    ``g1``/``g2``/``connector`` for the doubled-bipartite pasting.
    Provenance records the source hyperedge indices (thin/fat edges) or the
    B-side vertex index (connector edges).
    """

    graph: Graph
    labels: dict[Edge, str]
    provenance: dict[Edge, tuple[int, ...]]

    def edges_labeled(self, label: str) -> list[Edge]:
        return sorted(e for e, lab in self.labels.items() if lab == label)


def paste_doubled(g1: BipartiteGraph, l: int = 3) -> PastedGraph:
    """Base graph, mirror copy, and (l-2)-edge connector paths b_i -- b'_i.

    Vertex v of the base keeps its id; its mirror is v + n. Connector
    interior vertices are appended after 2n, l-3 of them per B-side vertex.
    Requires a connected base with minimum degree 2 (so every edge lies on a
    2l-cycle); the caller supplies girth(g1) >= 2k+2 when C_{2k}-freeness is
    wanted.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    n = g1.n
    adj = g1.adjacency
    if any(len(adj[v]) < 2 for v in range(n)):
        raise MinDegreeError("pasting base needs minimum degree 2")
    comp = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    if len(comp) != n:
        raise NotConnectedError("pasting base must be connected")

    labels: dict[Edge, str] = {}
    provenance: dict[Edge, tuple[int, ...]] = {}
    edges: set[Edge] = set()
    for u, v in g1.sorted_edges():
        e1 = edge(u, v)
        e2 = edge(u + n, v + n)
        edges.add(e1)
        edges.add(e2)
        labels[e1] = "g1"
        labels[e2] = "g2"
        provenance[e1] = e1
        provenance[e2] = e1
    interior_base = 2 * n
    per_path = l - 3
    for idx, bv in enumerate(g1.side_b):
        chain = [bv] + [interior_base + per_path * idx + t for t in range(per_path)] \
            + [bv + n]
        for x, y in zip(chain, chain[1:]):
            ce = edge(x, y)
            edges.add(ce)
            labels[ce] = "connector"
            provenance[ce] = (idx,)
    total_n = 2 * n + per_path * len(g1.side_b)
    return PastedGraph(Graph(total_n, frozenset(edges)), labels, provenance)


def paste_hyperdouble(h1: UniformHypergraph) -> PastedGraph:
    """Double every vertex of a linear 3-uniform hypergraph and trace one
    6-cycle per hyperedge.

    Vertex u_i keeps id i; its double u'_i is i + n. Fat edges (i, i+n)
    exist for covered vertices only. Linearity guarantees each hyperedge
    contributes exactly three new thin edges, so e = 3m + #covered.
    """
    if h1.a != 3:
        raise UniformityError("hypergraph-doubling pasting needs a 3-uniform source")
    _check_linear(h1.hyperedges)
    n = h1.n
    labels: dict[Edge, str] = {}
    provenance: dict[Edge, tuple[int, ...]] = {}
    edges: set[Edge] = set()
    fat_by_vertex: dict[int, list[int]] = {}
    for he_idx, he in enumerate(h1.hyperedges):
        i, j, k = he  # ascending by construction
        for v in (i, j, k):
            fat_by_vertex.setdefault(v, []).append(he_idx)
        for x, y in ((i + n, j), (j + n, k), (k + n, i)):
            te = edge(x, y)
            if te in edges:
                raise AssertionError("internal error: thin edge produced twice")
            edges.add(te)
            labels[te] = "thin"
            provenance[te] = (he_idx,)
    for v, owners in fat_by_vertex.items():
        fe = edge(v, v + n)
        edges.add(fe)
        labels[fe] = "fat"
        provenance[fe] = tuple(owners)
    return PastedGraph(Graph(2 * n, frozenset(edges)), labels, provenance)


def claim_one_thin_between_fat(pg: PastedGraph) -> bool:
    """True iff every pair of fat edges has at most one thin edge between
    their endpoint sets."""
    fats = pg.edges_labeled("fat")
    thin = set(pg.edges_labeled("thin"))
    for f1, f2 in combinations(fats, 2):
        between = 0
        for x in f1:
            for y in f2:
                if x != y and edge(x, y) in thin:
                    between += 1
        if between > 1:
            return False
    return True


@dataclass(frozen=True, eq=False)
class PastingCertificate:
    """Result of :func:`verify_pasted`.

    When ``ok``, ``order`` lists indices into ``cycles`` in a valid build
    order: the first cycle is arbitrary and each later one shares an edge
    with the union of its predecessors, together covering every edge.
    """

    ok: bool
    cycles: tuple[tuple[int, ...], ...]
    order: tuple[int, ...] | None
    reason: str


def verify_pasted(g: Graph, l: int, *, max_cycles: int = 1_000_000,
                  max_steps: int | None = None) -> PastingCertificate:
    """Decide whether g is pasted together from 2l-cycles.

    Checks that every edge lies on some 2l-cycle and that the intersection
    graph of all 2l-cycles (adjacent when sharing an edge) is connected.
    Cycle enumeration errors out beyond ``max_cycles`` rather than
    truncating.
    """
    if l < 2:
        raise ValueError("need 2l >= 4")
    kwargs = {"max_cycles": max_cycles}
    if max_steps is not None:
        kwargs["max_steps"] = max_steps
    cycles = enumerate_cycles(g, 2 * l, **kwargs)
    if not cycles:
        if g.e == 0:
            return PastingCertificate(True, (), (), "empty graph")
        return PastingCertificate(False, (), None, f"no cycle of length {2 * l}")

    cycle_edges = []
    for cyc in cycles:
        es = frozenset(edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        cycle_edges.append(es)
    covered = frozenset().union(*cycle_edges)
    if covered != g.edges:
        missing = sorted(g.edges - covered)[0]
        return PastingCertificate(False, tuple(cycles), None,
                                  f"edge {missing} lies on no {2 * l}-cycle")

    by_edge: dict[Edge, list[int]] = {}
    for idx, es in enumerate(cycle_edges):
        for e in es:
            by_edge.setdefault(e, []).append(idx)
    order = [0]
    seen = {0}
    cursor = 0
    while cursor < len(order):
        cur = order[cursor]
        cursor += 1
        for e in sorted(cycle_edges[cur]):
            for nxt in by_edge[e]:
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
    if len(seen) != len(cycles):
        return PastingCertificate(False, tuple(cycles), None,
                                  "cycle intersection graph is disconnected")
    return PastingCertificate(True, tuple(cycles), tuple(order), "ok")


def hyperdouble_source_ok(h1: UniformHypergraph) -> bool:
    """Convenience for pasting pipelines: source must be connected so the
    pasted graph is buildable cycle by cycle."""
    return is_connected(h1)
