"""Reproducible experiment pipelines with CSV reports.

Each experiment is a pure function of its parameters and seed and emits one
CSV row per instance. Reports put achieved ratios and the corresponding
theoretical bound factors side by side; asymptotic bounds are reported, not
asserted. The per-row ``ok`` column collects only hard guarantees, and a
run is considered failed when any row has ok=false.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

from . import coloring as cl
from . import constructions as cx
from . import generate as gen
from . import layering
from .fileio import format_cell
from .graphs import (
    BipartiteGraph,
    Graph,
    cycle_bipartite,
    has_cycle_of_length,
    is_connected,
    largest_component,
)
from .oracles import SearchBudget, certify_c2k_free, max_bipartite_girth_subgraph
from .rng import SplitMix64, derive_seed

EXPERIMENT_IDS = ("thm3", "thm4", "prop1", "lemma4", "paste1", "paste2", "kuhn-osthus")


@dataclass
class ExperimentResult:
    experiment: str
    header: list[str]
    rows: list[list] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if "ok" not in self.header:
            return True
        i = self.header.index("ok")
        return all(row[i] for row in self.rows)

    def csv_text(self) -> str:
        lines = [",".join(self.header)]
        for row in self.rows:
            lines.append(",".join(format_cell(x) for x in row))
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.csv_text())


def random_bipartite(na: int, nb: int, m: int, seed: int) -> BipartiteGraph:
    """m distinct edges of K_{na,nb}, uniform, deterministic in the seed."""
    if m > na * nb:
        raise ValueError("more edges than K_{na,nb} has")
    rng = SplitMix64(seed)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u = rng.randrange(na)
        v = na + rng.randrange(nb)
        chosen.add((u, v))
    return BipartiteGraph.from_classes(na + nb, chosen, range(na), range(na, na + nb))


def certified_c2kfree_bipartite(na: int, nb: int, m: int, k: int, seed: int,
                                budget: SearchBudget | None = None,
                                max_attempts: int = 5000) -> tuple[BipartiteGraph, int]:
    """First random bipartite graph (over derived seeds) that the oracle
    certifies C_{2k}-free; returns it with the number of attempts."""
    for attempt in range(max_attempts):
        g = random_bipartite(na, nb, m, derive_seed(seed, attempt))
        if certify_c2k_free(g, k, budget):
            return g, attempt + 1
    raise gen.InfeasibleError(
        f"no C_{2 * k}-free graph with {m} edges on {na}+{nb} vertices "
        f"in {max_attempts} attempts")


def run_kuhn_osthus(*, k: int, na: int, nb: int, m: int, instances: int, seed: int,
                    budget: SearchBudget | None = None) -> ExperimentResult:
    """Layer extraction on oracle-certified C_{2k}-free random bipartite graphs."""
    res = ExperimentResult("kuhn-osthus", [
        "instance", "k", "na", "nb", "e", "attempts", "height", "extracted",
        "bound", "c4free", "ok"])
    for i in range(instances):
        g, attempts = certified_c2kfree_bipartite(
            na, nb, m, k, derive_seed(seed, 1000 + i), budget)
        lay = layering.build_layering(g)
        sub = layering.extract_c4free(g)
        bound = -(-g.e // (k - 1))  # ceil
        c4free = not has_cycle_of_length(sub, 4)
        ok = c4free and sub.e >= bound and lay.height <= k - 1
        res.rows.append([i, k, na, nb, g.e, attempts, lay.height, sub.e,
                         bound, c4free, ok])
    return res


def run_kuhn_osthus_complete(*, na: int, nb: int) -> ExperimentResult:
    """Single-row variant on the complete bipartite graph K_{na,nb}."""
    from .graphs import complete_bipartite

    g = complete_bipartite(na, nb)
    lay = layering.build_layering(g)
    sub = layering.extract_c4free(g)
    k_eff = min(na, nb) + 1  # K_{na,nb} is C_{2k}-free for k > min side
    bound = -(-g.e // max(1, k_eff - 1))
    c4free = not has_cycle_of_length(sub, 4)
    res = ExperimentResult("kuhn-osthus", [
        "instance", "k", "na", "nb", "e", "attempts", "height", "extracted",
        "bound", "c4free", "ok"])
    res.rows.append([0, k_eff, na, nb, g.e, 0, lay.height, sub.e, bound, c4free,
                     c4free and sub.e >= bound])
    return res


def run_prop1(*, a: int, b: int, n: int, m: int, instances: int,
              seed: int) -> ExperimentResult:
    """Derandomized coloring against the floor(m / b^(a-1)) monochromatic cap."""
    res = ExperimentResult("prop1", [
        "instance", "a", "b", "n", "m", "mono", "mono_cap", "sub_size",
        "sub_floor", "ratio", "bound", "ok"])
    for i in range(instances):
        cfg = gen.GenConfig(a, n, m, 2, derive_seed(seed, i))
        h = gen.random_hypergraph(cfg)
        _, sub = cl.derandomized_coloring(h, b)
        mono = h.m - sub.m
        cap = h.m // b ** (a - 1)
        floor_sub = h.m - cap
        bound = Fraction(b ** (a - 1) - 1, b ** (a - 1))
        res.rows.append([i, a, b, n, h.m, mono, cap, sub.m, floor_sub,
                         Fraction(sub.m, h.m), bound, mono <= cap])
    return res


def run_lemma4(*, a: int, b: int, n: int, m: int, family: str, instances: int,
               seed: int) -> ExperimentResult:
    """Exhaustive random-likeness, then the q(H) cap p^{C_M} * m * (1 + eps).

    eps is instance-specific: the smallest value whose scaled-down version
    eps/(2 b^a) makes the exhaustive check pass (exact worst deviation), so
    each row exercises the full inequality chain with a true hypothesis.
    """
    fam = (cl.MultisetFamily.non_monochromatic(a, b) if family == "nonmono"
           else cl.MultisetFamily.all_distinct(a, b))
    res = ExperimentResult("lemma4", [
        "instance", "a", "b", "n", "m", "family", "eps", "q", "p_cm",
        "q_cap", "ratio", "bound", "ok"])
    for i in range(instances):
        cfg = gen.GenConfig(a, n, m, 2, derive_seed(seed, i))
        h = gen.random_hypergraph(cfg)
        report = cl.check_randomlike(h, b, Fraction(1))  # exact worst deviation
        eps_small = report.worst_deviation / h.m
        eps = 2 * b ** a * eps_small
        q = cl.best_subhypergraph(h, b, fam).q
        _, p_cm = cl.max_multiset_probability(n, b, fam, a)
        q_cap = p_cm * h.m * (1 + eps)
        bound = (Fraction(b ** (a - 1) - 1, b ** (a - 1)) if family == "nonmono"
                 else cl.rainbow_bound(a, b))
        res.rows.append([i, a, b, n, h.m, family, eps, q, p_cm, q_cap,
                         Fraction(q, h.m), bound, Fraction(q) <= q_cap])
    return res


def _girthy_hypergraph(a: int, n: int, m0: int, girth_gt: int, seed: int,
                       max_m: int | None = None) -> gen.UniformHypergraph:
    cfg = gen.GenConfig(a, n, m0, max(2, girth_gt), seed)
    h = gen.repair_girth(gen.random_hypergraph(cfg), girth_gt)
    if max_m is not None and h.m > max_m:
        h = gen.UniformHypergraph(h.a, h.n, h.hyperedges[:max_m])
    return h


def run_thm3(*, k: int, n: int, m: int, instances: int, seed: int,
             budget: SearchBudget | None = None, verify: str = "deep",
             max_m: int | None = None) -> ExperimentResult:
    """Clique blowups: freeness, oracle-optimal bipartite girth->2k subgraph,
    and the per-clique decomposition inequality."""
    a = 2 * k - 1
    res = ExperimentResult("thm3", [
        "instance", "k", "a", "n", "m", "e_gh", "c2kfree", "e_b", "ratio",
        "bound", "dec_ok", "ok"])
    for i in range(instances):
        h = _girthy_hypergraph(a, n, m, 2 * k, derive_seed(seed, i), max_m)
        if h.m == 0:
            continue
        bg = cx.clique_blowup(h)
        free = certify_c2k_free(bg.graph, k, budget) if verify == "deep" else True
        opt = max_bipartite_girth_subgraph(bg.graph, 2 * k, budget,
                                           groups=cx.blowup_groups(bg, 2 * k))
        dec_ok = cx.clique_decomposition_bound_ok(bg, set(opt.edges), opt.colors)
        bound = Fraction(2 ** (2 * k - 2) - 1, 2 ** (2 * k - 2)) * Fraction(2, 2 * k - 1)
        res.rows.append([i, k, a, n, h.m, bg.graph.e, free, opt.size,
                         Fraction(opt.size, bg.graph.e), bound, dec_ok,
                         free and dec_ok])
    return res


def run_thm4(*, k: int, l: int, n: int, m: int, instances: int, seed: int,
             budget: SearchBudget | None = None, verify: str = "deep",
             max_m: int | None = None) -> ExperimentResult:
    """Oriented bipartite blowups against the C4-free bipartite oracle."""
    a = k - 1 + l
    res = ExperimentResult("thm4", [
        "instance", "k", "l", "a", "n", "m", "e_go", "c2kfree", "e_b", "ratio",
        "bound", "ok"])
    for i in range(instances):
        cfg = gen.GenConfig(a, n, m, 2 * k, derive_seed(seed, i))
        o = gen.repair_girth_oriented(gen.random_oriented(cfg), 2 * k)
        if max_m is not None and o.m > max_m:
            o = gen.OrientedHypergraph(o.a, o.n, o.hyperedges[:max_m])
        if o.m == 0:
            continue
        bg = cx.bipartite_blowup(o, k, l)
        free = certify_c2k_free(bg.graph, k, budget) if verify == "deep" else True
        opt = max_bipartite_girth_subgraph(bg.graph, 4, budget,
                                           groups=cx.blowup_groups(bg, 4))
        bound = Fraction(2 ** (k - 1) - 1, 2 ** (k - 1)) * Fraction(1, k - 1)
        res.rows.append([i, k, l, a, n, o.m, bg.graph.e, free, opt.size,
                         Fraction(opt.size, bg.graph.e), bound, free])
    return res


def run_paste1(*, l: int, k: int, base: str, n_per_side: int, target_girth: int,
               min_degree: int, seed: int, budget: SearchBudget | None = None,
               verify: str = "deep", assert_free: bool = True) -> ExperimentResult:
    """Doubled-bipartite pasting on a cycle base or a generated high-girth base."""
    if base == "cycle":
        g1 = cycle_bipartite(2 * n_per_side)
    elif base == "generated":
        g1 = gen.high_girth_bipartite(n_per_side, target_girth, min_degree, seed)
    else:
        raise ValueError("base must be 'cycle' or 'generated'")
    from .graphs import girth as graph_girth

    pg = cx.paste_doubled(g1, l)
    g = pg.graph
    formula_ok = (g.e == 2 * g1.e + (l - 2) * len(g1.side_b)
                  and g.n == 2 * g1.n + (l - 3) * len(g1.side_b))
    free = certify_c2k_free(g, k, budget) if (verify == "deep" and assert_free) else True
    pasted = cx.verify_pasted(g, l).ok if verify == "deep" else True
    avg_deg = 2 * g.e / g.n
    ref = 4 * n_per_side ** 0.2  # asymptotic average-degree target, reported only
    ok = formula_ok and (not assert_free or free) and pasted
    res = ExperimentResult("paste1", [
        "base", "n_per_side", "e1", "girth1", "l", "k", "V", "E", "formula_ok",
        "c2kfree", "pasted_ok", "avg_deg", "ref_avg_deg", "ok"])
    res.rows.append([base, n_per_side, g1.e, graph_girth(g1), l, k, g.n, g.e,
                     formula_ok, free, pasted, avg_deg, ref, ok])
    return res


def run_paste2(*, n: int, m0: int, instances: int, seed: int,
               budget: SearchBudget | None = None,
               verify: str = "deep") -> ExperimentResult:
    """Hypergraph-doubling pasting from repaired Berge-girth >= 9 sources."""
    res = ExperimentResult("paste2", [
        "instance", "n", "m0", "m_girth", "m_used", "covered", "V", "E",
        "formula_ok", "c8free", "claim_ok", "pasted_ok", "avg_deg",
        "ref_avg_deg", "ok"])
    for i in range(instances):
        cfg = gen.GenConfig(3, n, m0, 8, derive_seed(seed, i))
        h_girth = gen.repair_girth(gen.random_hypergraph(cfg), 8)
        h = largest_component(h_girth)
        if h.m == 0:
            continue
        assert is_connected(h)
        pg = cx.paste_hyperdouble(h)
        g = pg.graph
        covered = len(h.covered_vertices())
        formula_ok = g.e == 3 * h.m + covered
        free = (not has_cycle_of_length(g, 8)) if verify == "deep" else True
        claim = cx.claim_one_thin_between_fat(pg)
        pasted = cx.verify_pasted(g, 3).ok if verify == "deep" else True
        avg_deg = 2 * g.e / (2 * covered)  # doubled covered vertices carry the edges
        ref = 6 * n ** (1 / 9)
        ok = formula_ok and free and claim and pasted
        res.rows.append([i, n, m0, h_girth.m, h.m, covered, g.n, g.e, formula_ok,
                         free, claim, pasted, avg_deg, ref, ok])
    return res


def run_experiment(experiment: str, params: dict) -> ExperimentResult:
    """Dispatch by experiment id with keyword parameters."""
    table = {
        "thm3": run_thm3,
        "thm4": run_thm4,
        "prop1": run_prop1,
        "lemma4": run_lemma4,
        "paste1": run_paste1,
        "paste2": run_paste2,
        "kuhn-osthus": run_kuhn_osthus,
    }
    if experiment not in table:
        raise ValueError(f"unknown experiment {experiment!r}; "
                         f"choose from {', '.join(EXPERIMENT_IDS)}")
    return table[experiment](**params)
