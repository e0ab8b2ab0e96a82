"""Command-line entry point.

One subcommand per pipeline stage (generation, repair, extraction, blowups,
pastings, checks, oracles) plus ``experiment`` for the canned reproducible
pipelines. Reports are CSV on stdout unless ``--out`` is given; exit status
is nonzero exactly when a hard guarantee fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import coloring as cl
from . import constructions as cx
from . import experiments as xp
from . import fileio
from . import generate as gen
from . import layering
from .graphs import BipartiteGraph, Graph, has_cycle_of_length
from .oracles import (
    SearchBudget,
    certify_c2k_free,
    max_bipartite_girth_subgraph,
    max_c4free_subgraph,
    max_cut,
)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", type=str, default=None)
    parser.add_argument("--budget-nodes", type=int, default=None)
    parser.add_argument("--budget-seconds", type=float, default=None)
    parser.add_argument("--verify", choices=("deep", "fast"), default="deep")


def _budget(args) -> SearchBudget:
    if args.budget_nodes is None and args.budget_seconds is None:
        return SearchBudget()
    return SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fileio.format_cell(x) for x in row))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="girthlab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-hypergraph", help="seeded random a-uniform hypergraph")
    _common(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--oriented", action="store_true")

    p = sub.add_parser("repair", help="delete hyperedges until Berge girth > k")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("gen-bipartite", help="greedy high-girth bipartite graph")
    _common(p)
    p.add_argument("--n-per-side", type=int, required=True)
    p.add_argument("--girth", type=int, default=10)
    p.add_argument("--mindeg", type=int, default=2)
    p.add_argument("--out-classes", type=str, default=None)

    p = sub.add_parser("color-derand", help="conditional-expectation coloring")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("q-exhaustive", help="largest family-colorable subhypergraph")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--family", choices=("nonmono", "rainbow"), default="nonmono")

    p = sub.add_parser("check-randomlike", help="per-coloring multiset count check")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("extract", help="largest-antichain C4-free subgraph")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--classes", type=str, default=None)
    p.add_argument("--report", choices=("csv",), default="csv")

    p = sub.add_parser("blowup-clique", help="complete graph on every hyperedge")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, default=None,
                   help="certify C_{2k}-freeness (deep mode)")

    p = sub.add_parser("blowup-bipartite", help="K_{k-1,l} on every oriented hyperedge")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("paste-doubled", help="mirror pasting with connector paths")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--classes", type=str, default=None)
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--dot", type=str, default=None)

    p = sub.add_parser("paste-hyperdouble", help="doubled-vertex 6-cycle pasting")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dot", type=str, default=None)

    p = sub.add_parser("verify-pasted", help="pasted-from-C_{2l} certificate")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--max-cycles", type=int, default=1_000_000)

    p = sub.add_parser("oracle", help="exact solvers")
    _common(p)
    p.add_argument("which", choices=("c4free", "bipgirth", "maxcut", "c2kfree"))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--girth-gt", type=int, default=4)
    p.add_argument("--k", type=int, default=2)

    p = sub.add_parser("experiment", help="canned reproducible pipelines")
    _common(p)
    p.add_argument("--id", required=True, choices=xp.EXPERIMENT_IDS)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--m", type=int, default=20)
    p.add_argument("--na", type=int, default=None)
    p.add_argument("--nb", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--family", choices=("nonmono", "rainbow"), default="nonmono")
    p.add_argument("--base", choices=("cycle", "generated"), default="cycle")
    p.add_argument("--n-per-side", type=int, default=5)
    p.add_argument("--target-girth", type=int, default=10)
    p.add_argument("--min-degree", type=int, default=2)
    p.add_argument("--complete-bipartite", nargs=2, type=int, default=None,
                   metavar=("NA", "NB"))

    p = sub.add_parser("export-dot", help="deterministic DOT rendering")
    _common(p)
    p.add_argument("--in", dest="infile", required=True)

    return top


def main(argv: list[str] | None = None) -> int:
    from .errors import GirthLabError

    try:
        return _dispatch(build_parser().parse_args(argv))
    except GirthLabError as exc:
        print(f"girthlab: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    budget = _budget(args)

    if args.command == "gen-hypergraph":
        cfg = gen.GenConfig(args.a, args.n, args.m, args.k, args.seed)
        if args.oriented:
            o = gen.random_oriented(cfg)
            _emit_obj_oriented(o, args.out)
        else:
            h = gen.random_hypergraph(cfg)
            _emit_obj_hypergraph(h, args.out)
        return 0

    if args.command == "repair":
        obj = fileio.read_any(args.infile)
        if isinstance(obj, gen.OrientedHypergraph):
            out = gen.repair_girth_oriented(obj, args.k)
            _emit_obj_oriented(out, args.out)
        else:
            out = gen.repair_girth(obj, args.k)
            _emit_obj_hypergraph(out, args.out)
        return 0

    if args.command == "gen-bipartite":
        g = gen.high_girth_bipartite(args.n_per_side, args.girth, args.mindeg,
                                     args.seed)
        if args.out:
            fileio.write_graph(g, args.out)
            classes_path = args.out_classes or args.out + ".classes"
            fileio.write_classes(g.side_a, classes_path)
        else:
            sys.stdout.write(_csv(["n", "e", "girth", "min_degree"],
                                  [[g.n, g.e, _girth_cell(g), min(
                                      g.degree(v) for v in range(g.n))]]))
        return 0

    if args.command == "color-derand":
        h = fileio.read_hypergraph(args.infile)
        coloring, sub = cl.derandomized_coloring(h, args.b)
        cap = h.m // args.b ** (h.a - 1)
        rows = [[h.n, h.m, h.a, args.b, h.m - sub.m, cap, sub.m,
                 Fraction(sub.m, h.m) if h.m else Fraction(0)]]
        _emit(_csv(["n", "m", "a", "b", "mono", "mono_cap", "sub_size", "ratio"],
                   rows), args.out)
        return 0 if h.m - sub.m <= cap else 1

    if args.command == "q-exhaustive":
        h = fileio.read_hypergraph(args.infile)
        fam = (cl.MultisetFamily.non_monochromatic(h.a, args.b)
               if args.family == "nonmono"
               else cl.MultisetFamily.all_distinct(h.a, args.b))
        result = cl.best_subhypergraph(h, args.b, fam)
        bound = (Fraction(args.b ** (h.a - 1) - 1, args.b ** (h.a - 1))
                 if args.family == "nonmono" else cl.rainbow_bound(h.a, args.b))
        _emit(_csv(["n", "m", "a", "b", "q", "bound", "ratio"],
                   [[h.n, h.m, h.a, args.b, result.q, bound,
                     Fraction(result.q, h.m) if h.m else Fraction(0)]]), args.out)
        return 0

    if args.command == "check-randomlike":
        h = fileio.read_hypergraph(args.infile)
        report = cl.check_randomlike(h, args.b, args.eps, mode=args.mode,
                                     seed=args.seed, samples=args.samples)
        _emit(_csv(["n", "m", "a", "b", "eps", "mode", "passed",
                    "worst_deviation", "colorings"],
                   [[h.n, h.m, h.a, args.b, args.eps, args.mode, report.passed,
                     report.worst_deviation, report.colorings_checked]]), args.out)
        return 0 if report.passed else 1

    if args.command == "extract":
        g = fileio.read_bipartite(args.infile, args.classes)
        lay = layering.build_layering(g)
        sub = layering.extract_c4free(g)
        c4free = not has_cycle_of_length(sub, 4)
        if args.out:
            fileio.write_graph(sub, args.out)
        sys.stdout.write(_csv(["e", "height", "extracted", "c4free"],
                              [[g.e, lay.height, sub.e, c4free]]))
        return 0 if c4free else 1

    if args.command == "blowup-clique":
        h = fileio.read_hypergraph(args.infile)
        bg = cx.clique_blowup(h)
        ok = True
        if args.k is not None and args.verify == "deep":
            ok = certify_c2k_free(bg.graph, args.k, budget)
        if args.out:
            fileio.write_graph(bg.graph, args.out)
        sys.stdout.write(_csv(["m", "e", "c2kfree"], [[h.m, bg.graph.e, ok]]))
        return 0 if ok else 1

    if args.command == "blowup-bipartite":
        o = fileio.read_oriented(args.infile)
        bg = cx.bipartite_blowup(o, args.k, args.l)
        ok = certify_c2k_free(bg.graph, args.k, budget) if args.verify == "deep" else True
        if args.out:
            fileio.write_graph(bg.graph, args.out)
        sys.stdout.write(_csv(["m", "e", "c2kfree"], [[o.m, bg.graph.e, ok]]))
        return 0 if ok else 1

    if args.command == "paste-doubled":
        g1 = fileio.read_bipartite(args.infile, args.classes)
        pg = cx.paste_doubled(g1, args.l)
        if args.out:
            fileio.write_graph(pg.graph, args.out)
        if args.dot:
            fileio.export_dot(pg, args.dot)
        sys.stdout.write(_csv(["V", "E"], [[pg.graph.n, pg.graph.e]]))
        return 0

    if args.command == "paste-hyperdouble":
        h = fileio.read_hypergraph(args.infile)
        pg = cx.paste_hyperdouble(h)
        if args.out:
            fileio.write_graph(pg.graph, args.out)
        if args.dot:
            fileio.export_dot(pg, args.dot)
        covered = len(h.covered_vertices())
        ok = pg.graph.e == 3 * h.m + covered and cx.claim_one_thin_between_fat(pg)
        sys.stdout.write(_csv(["V", "E", "covered", "ok"],
                              [[pg.graph.n, pg.graph.e, covered, ok]]))
        return 0 if ok else 1

    if args.command == "verify-pasted":
        g = fileio.read_graph(args.infile)
        cert = cx.verify_pasted(g, args.l, max_cycles=args.max_cycles)
        sys.stdout.write(_csv(["pasted", "cycles", "reason"],
                              [[cert.ok, len(cert.cycles), cert.reason]]))
        return 0 if cert.ok else 1

    if args.command == "oracle":
        g = fileio.read_graph(args.infile)
        if args.which == "c4free":
            size, _ = max_c4free_subgraph(g, budget)
            sys.stdout.write(_csv(["e", "opt"], [[g.e, size]]))
        elif args.which == "bipgirth":
            result = max_bipartite_girth_subgraph(g, args.girth_gt, budget)
            sys.stdout.write(_csv(["e", "girth_gt", "opt"],
                                  [[g.e, args.girth_gt, result.size]]))
        elif args.which == "maxcut":
            size, _ = max_cut(g, budget)
            sys.stdout.write(_csv(["e", "opt"], [[g.e, size]]))
        else:
            free = certify_c2k_free(g, args.k, budget)
            sys.stdout.write(_csv(["e", "k", "c2kfree"], [[g.e, args.k, free]]))
        return 0

    if args.command == "experiment":
        result = _run_experiment_from_args(args, budget)
        _emit(result.csv_text(), args.out)
        return 0 if result.ok else 1

    if args.command == "export-dot":
        obj = fileio.read_any(args.infile)
        text = fileio.dot_text(obj)
        _emit(text, args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def _girth_cell(g: Graph):
    from .graphs import girth

    value = girth(g)
    return "inf" if value == float("inf") else int(value)


def _emit_obj_hypergraph(h, out: str | None) -> None:
    if out:
        fileio.write_hypergraph(h, out)
    else:
        sys.stdout.write(_csv(["a", "n", "m"], [[h.a, h.n, h.m]]))


def _emit_obj_oriented(o, out: str | None) -> None:
    if out:
        fileio.write_oriented(o, out)
    else:
        sys.stdout.write(_csv(["a", "n", "m"], [[o.a, o.n, o.m]]))


def _run_experiment_from_args(args, budget: SearchBudget) -> xp.ExperimentResult:
    eid = args.id
    if eid == "kuhn-osthus":
        if args.complete_bipartite:
            na, nb = args.complete_bipartite
            return xp.run_kuhn_osthus_complete(na=na, nb=nb)
        na = args.na if args.na is not None else args.n // 2
        nb = args.nb if args.nb is not None else args.n - args.n // 2
        return xp.run_kuhn_osthus(k=args.k, na=na, nb=nb, m=args.m,
                                  instances=args.instances, seed=args.seed,
                                  budget=budget)
    if eid == "prop1":
        return xp.run_prop1(a=args.a, b=args.b, n=args.n, m=args.m,
                            instances=args.instances, seed=args.seed)
    if eid == "lemma4":
        return xp.run_lemma4(a=args.a, b=args.b, n=args.n, m=args.m,
                             family=args.family, instances=args.instances,
                             seed=args.seed)
    if eid == "thm3":
        return xp.run_thm3(k=args.k, n=args.n, m=args.m, instances=args.instances,
                           seed=args.seed, budget=budget, verify=args.verify,
                           max_m=args.max_m)
    if eid == "thm4":
        return xp.run_thm4(k=args.k, l=args.l, n=args.n, m=args.m,
                           instances=args.instances, seed=args.seed, budget=budget,
                           verify=args.verify, max_m=args.max_m)
    if eid == "paste1":
        return xp.run_paste1(l=args.l, k=args.k, base=args.base,
                             n_per_side=args.n_per_side,
                             target_girth=args.target_girth,
                             min_degree=args.min_degree, seed=args.seed,
                             budget=budget, verify=args.verify)
    if eid == "paste2":
        return xp.run_paste2(n=args.n, m0=args.m, instances=args.instances,
                             seed=args.seed, budget=budget, verify=args.verify)
    raise AssertionError(eid)


if __name__ == "__main__":
    sys.exit(main())
