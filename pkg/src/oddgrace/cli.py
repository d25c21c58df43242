"""Command-line front end: ``oddgrace <command> ...``.

Graph arguments are either a family string (``"K 4 4"``, ``"K 5 4 - K1 2"``,
``"mobius 18"``, ``"cycle 6"``, ``"path 4"``, ``"circulant 9 1,2"``), a path
to an edge-list file, or ``-`` for an edge list on stdin.

Exit codes: 0 success, 1 usage error, 2 resource limit, 3 input outside the
supported domain (disconnected graph, no labeling up to ``--k-max``, ...),
4 a ``theorem-check`` item failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__, acceptance, bounds, chromatic, constructions, io, oracle
from .errors import (DisconnectedError, InfeasibleError, NotBipartiteError, OddGraceError,
                     ParameterError, ResourceError)
from .families import EdgeList, FamilySpec, generate, parse_family
from .graph import Graph, NotBipartite, bipartition, is_connected, square_induced
from .labeling import parity_split, verify
from .solver import SolveOptions, SolveStats, enumerate_optimal, exists_labeling, optimal_label_sets, solve_chi_og

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_DOMAIN, EXIT_CHECK_FAILED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _num(x):
    """JSON value for a possibly infinite integer."""
    return "infinite" if x == math.inf else int(x)


def load_graph(text: str) -> tuple[Graph, FamilySpec | None]:
    if text == "-":
        return io.parse_edge_list(sys.stdin.read()), None
    if Path(text).is_file():
        return generate(EdgeList(text)), None
    spec = parse_family(text)
    return generate(spec), spec


def graph_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def stats_dict(stats: SolveStats, timing: bool) -> dict:
    out = {"nodes_explored": stats.nodes_explored, "parity_cases_tried": stats.parity_cases_tried,
           "k_tried": list(stats.k_tried)}
    if timing:
        out["wall_time"] = round(stats.wall_time, 6)
    return out


def report_dict(report) -> dict:
    violations = []
    for v in report.violations:
        item = {"kind": type(v).__name__}
        item.update(v.__dict__)
        violations.append(item)
    return {"valid": report.valid, "vertex_proper": report.vertex_proper,
            "edges_all_odd": report.edges_all_odd, "edge_proper": report.edge_proper,
            "violations": violations}


def _options(args) -> SolveOptions:
    return SolveOptions(k_min=getattr(args, "k_min", None), k_max=getattr(args, "k_max", None),
                        canonical_witness=getattr(args, "canonical", False),
                        node_limit=getattr(args, "node_limit", None), time_limit=getattr(args, "time_limit", 600.0))


def _emit(out, args, payload: dict, text: str | None = None, dot: tuple | None = None):
    fmt = getattr(args, "format", "json")
    if fmt == "dot":
        if dot is None:
            raise UsageError(f"{args.command} has no DOT output")
        out.write(io.to_dot(*dot))
    elif fmt == "text" and text is not None:
        out.write(text.rstrip("\n") + "\n")
    else:
        out.write(json.dumps(payload) + "\n")


# commands ---------------------------------------------------------------

def cmd_gen(args, out):
    g, _ = load_graph(args.graph)
    if args.format == "json":
        out.write(json.dumps(graph_dict(g)) + "\n")
    elif args.format == "dot":
        out.write(io.to_dot(g))
    else:
        out.write(io.format_edge_list(g))
    return EXIT_OK


def cmd_chi(args, out):
    g, _ = load_graph(args.graph)
    target = g
    if args.square != "none":
        bip = bipartition(g)
        if isinstance(bip, NotBipartite):
            raise NotBipartiteError("--square needs a bipartite graph", bip.odd_cycle)
        target = square_induced(g, bip.u_side if args.square == "u" else bip.w_side)[0]
    coloring = chromatic.chi_exact(target, limit=args.limit) if args.exact else chromatic.dsatur_coloring(target)
    payload = {"num_colors": coloring.num_colors, "colors": list(coloring.colors), "exact": args.exact}
    _emit(out, args, payload, f"{coloring.num_colors} colours: {' '.join(map(str, coloring.colors))}")
    return EXIT_OK


def cmd_bound(args, out):
    g, spec = load_graph(args.graph)
    report = bounds.bound_report(g, spec, exact=not args.greedy)
    payload = {
        "lower": [{"value": _num(b.value), "source": b.source.value} for b in report.lower],
        "upper": [{"value": _num(b.value), "source": b.source.value} for b in report.upper],
        "best_lower": _num(report.best_lower),
        "best_upper": _num(report.best_upper),
    }
    lines = [f"lower {b.source.value}: {_num(b.value)}" for b in report.lower]
    lines += [f"upper {b.source.value}: {_num(b.value)}" for b in report.upper]
    lines.append(f"best: {_num(report.best_lower)} .. {_num(report.best_upper)}")
    _emit(out, args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_solve(args, out):
    g, _ = load_graph(args.graph)
    res = solve_chi_og(g, _options(args))
    payload = {"chi": _num(res.chi),
               "witness": io.labeling_to_dict(res.witness) if res.witness else None,
               "stats": stats_dict(res.stats, not args.no_timing)}
    text = f"chi_og = {_num(res.chi)}"
    if res.witness:
        text += f"\nwitness: {' '.join(map(str, res.witness.labels))}"
    _emit(out, args, payload, text, (g, res.witness) if res.witness else None)
    return EXIT_OK


def cmd_exists(args, out):
    g, _ = load_graph(args.graph)
    stats = SolveStats()
    lab = exists_labeling(g, args.k, _options(args), stats)
    payload = {"k": args.k, "feasible": lab is not None,
               "witness": io.labeling_to_dict(lab) if lab else None,
               "stats": stats_dict(stats, not args.no_timing)}
    text = f"k = {args.k}: " + (" ".join(map(str, lab.labels)) if lab else "infeasible")
    _emit(out, args, payload, text, (g, lab) if lab else None)
    return EXIT_OK


def cmd_enumerate(args, out):
    g, _ = load_graph(args.graph)
    opts = _options(args)
    if args.dedupe:
        rep = optimal_label_sets(g, args.k, opts)
        payload = {"k": args.k, "count": rep.count,
                   "pairs": [[list(a), list(b)] for a, b in rep.pairs],
                   "anomalies": [list(x.labels) for x in rep.anomalies]}
        text = "\n".join(f"{list(a)} | {list(b)}" for a, b in rep.pairs) or "none"
    else:
        labs = [list(lab.labels) for lab in enumerate_optimal(g, args.k, opts)]
        if args.limit is not None:
            labs = labs[:args.limit]
        payload = {"k": args.k, "count": len(labs), "labelings": labs}
        text = "\n".join(" ".join(map(str, x)) for x in labs) or "none"
    _emit(out, args, payload, text)
    return EXIT_OK


def cmd_construct(args, out):
    spec = parse_family(args.family)
    g, lab = constructions.construct(spec)
    payload = {"family": args.family, "graph": graph_dict(g), "labeling": io.labeling_to_dict(lab),
               "valid": verify(g, lab).valid}
    _emit(out, args, payload, f"k = {lab.k}: {' '.join(map(str, lab.labels))}", (g, lab))
    return EXIT_OK


def cmd_verify(args, out):
    g, _ = load_graph(args.graph)
    lab = io.read_labeling(args.labeling)
    if len(lab) != g.n:
        raise UsageError(f"labeling has {len(lab)} labels for a graph on {g.n} vertices")
    report = verify(g, lab)
    payload = report_dict(report)
    if report.valid and is_connected(g) and not isinstance(bipartition(g), NotBipartite):
        payload["parity_consistent"] = parity_split(g, lab).consistent
    text = "valid" if report.valid else "invalid\n" + "\n".join(repr(v) for v in report.violations)
    _emit(out, args, payload, text, (g, lab))
    return EXIT_OK


def cmd_oracle(args, out):
    g, _ = load_graph(args.graph)
    cap = args.cap if args.cap is not None else 2 * g.n
    value = oracle.brute_force_chi(g, cap)
    found = not isinstance(value, oracle.NotFoundBelowCap)
    payload = {"chi": value if found else None, "found": found, "cap": cap}
    _emit(out, args, payload, f"chi_og = {value}" if found else f"no labeling with k <= {cap}")
    return EXIT_OK


def cmd_theorem_check(args, out):
    results = acceptance.run_all(args.only)
    payload = {"results": [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                           for r in results],
               "all_passed": all(r.passed for r in results)}
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        for r in results:
            timing = "" if args.no_timing else f"  ({r.seconds:.2f}s)"
            out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.number}  {r.name}{timing}\n")
            if args.verbose or not r.passed:
                out.write(f"      {r.detail}\n")
    return EXIT_OK if payload["all_passed"] else EXIT_CHECK_FAILED


# parser -----------------------------------------------------------------

def _solver_flags(p: argparse.ArgumentParser, bounds_flags: bool = True):
    if bounds_flags:
        p.add_argument("--k-min", type=int)
        p.add_argument("--k-max", type=int)
    p.add_argument("--canonical", action="store_true", help="return the lexicographically smallest witness")
    p.add_argument("--node-limit", type=int, help="default: $OGK_NODE_LIMIT or 1e8")
    p.add_argument("--time-limit", type=float, default=600.0, help="seconds (default 600)")
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock times from the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddgrace", description="Odd graceful colorings of graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a graph")
    p.add_argument("graph")
    p.add_argument("--format", choices=["edges", "json", "dot"], default="edges")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chi", help="chromatic number of a graph or one side's square")
    p.add_argument("graph")
    p.add_argument("--square", choices=["none", "u", "w"], default="none")
    p.add_argument("--greedy", dest="exact", action="store_false", help="DSATUR instead of exact")
    p.add_argument("--limit", type=int, default=chromatic.DEFAULT_EXACT_LIMIT)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("bound", help="all lower and upper bounds")
    p.add_argument("graph")
    p.add_argument("--greedy", action="store_true", help="colour squares with DSATUR")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("solve", help="exact odd graceful chromatic number")
    p.add_argument("graph")
    _solver_flags(p)
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exists", help="is there a labeling with labels in 1..k")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    _solver_flags(p, bounds_flags=False)
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("enumerate", help="all labelings with labels in 1..k")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--dedupe", action="store_true", help="collapse to unordered pairs of side label sets")
    p.add_argument("--limit", type=int, help="print at most this many labelings")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float, default=600.0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="explicit labeling for a family")
    p.add_argument("family")
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a labeling JSON file against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force value (at most 7 vertices)")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, help="largest k tried (default 2|V|)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("theorem-check", help="run the acceptance checks")
    p.add_argument("--only", type=int, nargs="+", metavar="N")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_theorem_check)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except ResourceError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (DisconnectedError, InfeasibleError, NotBipartiteError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except (UsageError, ParameterError, FileNotFoundError, json.JSONDecodeError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (OddGraceError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
