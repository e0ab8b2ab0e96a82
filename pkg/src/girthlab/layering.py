"""C4-free subgraph extraction from bipartite graphs via an edge poset.

Fix total orders on the two vertex classes of a bipartite graph G and write
each edge as an ordered pair (a, b). Put (a, b) one step below (a', b')
whenever a < a', b < b' and all four of ab, ab', a'b, a'b' are edges (the
four vertices induce a C4); the partial order is the reflexive-transitive
closure. Chains of k edges force a cycle of length 2k, so in a C_{2k}-free
graph every chain has at most k-1 edges. Partitioning the edges into Mirsky
layers (longest-chain-ending-here levels) therefore uses at most k-1
antichains, and the largest layer is a C4-free subgraph with at least
e(G)/(k-1) edges: any C4 of a bipartite graph contains two comparable
edges, so an antichain is C4-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import BipartiteGraph, Graph, edge

OrientedEdge = tuple[int, int]  # (vertex in A, vertex in B)


@dataclass(frozen=True, eq=False)
class EdgeLayering:
    """One-step C4 DAG over the edges of a bipartite graph plus Mirsky layers.

    ``layer`` maps each oriented edge (a, b) to the length of the longest
    chain ending at it (1-based); ``height`` is the layer count, which
    equals the longest chain length. ``succs`` holds the one-step arcs.
    """

    graph: BipartiteGraph
    succs: dict[OrientedEdge, tuple[OrientedEdge, ...]]
    layer: dict[OrientedEdge, int]
    height: int

    def layers(self) -> list[list[OrientedEdge]]:
        out: list[list[OrientedEdge]] = [[] for _ in range(self.height)]
        for oe in sorted(self.layer):
            out[self.layer[oe] - 1].append(oe)
        return out

    def arc_count(self) -> int:
        return sum(len(s) for s in self.succs.values())

    def is_comparable(self, x: OrientedEdge, y: OrientedEdge) -> bool:
        """Strict comparability: reachability along one-step arcs, either way."""
        return self._reaches(x, y) or self._reaches(y, x)

    def _reaches(self, x: OrientedEdge, y: OrientedEdge) -> bool:
        stack = [x]
        seen = {x}
        while stack:
            cur = stack.pop()
            for nxt in self.succs.get(cur, ()):
                if nxt == y:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False


def build_layering(g: BipartiteGraph) -> EdgeLayering:
    """Construct the one-step C4 DAG and the longest-path layer of every edge."""
    rank_a = {v: i for i, v in enumerate(g.side_a)}
    rank_b = {v: i for i, v in enumerate(g.side_b)}
    in_a = set(g.side_a)

    oriented: list[OrientedEdge] = []
    for u, v in g.edges:
        a, b = (u, v) if u in in_a else (v, u)
        oriented.append((a, b))
    edge_set = set(oriented)

    # Arcs (a,b) -> (a',b') need all four edges of the C4 {a,a'} x {b,b'};
    # scan common neighborhoods of B-side pairs.
    succs: dict[OrientedEdge, list[OrientedEdge]] = {oe: [] for oe in oriented}
    preds: dict[OrientedEdge, list[OrientedEdge]] = {oe: [] for oe in oriented}
    adj = g.adjacency
    bs = sorted(g.side_b, key=rank_b.__getitem__)
    for i, b1 in enumerate(bs):
        n1 = set(adj[b1])
        for b2 in bs[i + 1:]:
            common = sorted((a for a in adj[b2] if a in n1), key=rank_a.__getitem__)
            for s, a1 in enumerate(common):
                for a2 in common[s + 1:]:
                    succs[(a1, b1)].append((a2, b2))
                    preds[(a2, b2)].append((a1, b1))

    # Both coordinates strictly increase along arcs, so sorting by rank is a
    # topological order for the longest-path computation.
    topo = sorted(oriented, key=lambda oe: (rank_a[oe[0]], rank_b[oe[1]]))
    layer: dict[OrientedEdge, int] = {}
    for oe in topo:
        layer[oe] = 1 + max((layer[p] for p in preds[oe]), default=0)
    height = max(layer.values(), default=0)
    return EdgeLayering(g, {k: tuple(v) for k, v in succs.items()}, layer, height)


def longest_chain_length(g: BipartiteGraph) -> int:
    """Number of Mirsky layers == longest chain length (0 for edgeless graphs).

    At most k-1 whenever g is C_{2k}-free.
    """
    return build_layering(g).height


def extract_c4free(g: BipartiteGraph) -> Graph:
    """Subgraph formed by a largest Mirsky layer; always C4-free.

    Guaranteed at least e(G)/height edges, hence at least e(G)/(k-1) for
    C_{2k}-free inputs. Ties between equal-size layers go to the smallest
    layer index.
    """
    layering = build_layering(g)
    if layering.height == 0:
        return Graph(g.n, frozenset())
    best = max(layering.layers(), key=len)  # max() keeps the first (lowest) layer on ties
    return Graph(g.n, frozenset(edge(a, b) for a, b in best))
