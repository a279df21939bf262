"""Batch command line front door.

Subcommands: ``check``, ``solve edge|gupta|supermodular``, ``verify``,
``brute-force``, ``gen``, ``reduce stars``.  Machine-readable JSON goes to
stdout, human summaries to stderr, step traces (``--trace``) to stderr as
JSON lines.  Exit codes: 0 success/feasible, 1 violation/infeasible,
2 usage or I/O error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import demand, families, jsonio, oracle, orientation, supermodular
from .errors import (BudgetExceeded, GenerationFailure, HypothesisViolation,
                     InternalAssertionError, checks_performed)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class _Usage(Exception):
    pass


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Usage(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno} "
                     f"column {exc.colno}") from exc


def _write_json(path: str | None, obj) -> str | None:
    if path is None or path == "-":
        return None
    Path(path).write_text(json.dumps(obj, indent=None) + "\n")
    return path


def _trace_writer(enabled: bool):
    if not enabled:
        return None
    return lambda event: print(json.dumps(event), file=sys.stderr)


def _report(args, verdict: str, started: float, **extra) -> dict:
    return {
        "command": " ".join(args),
        "verdict": verdict,
        "wall_ms": round((time.perf_counter() - started) * 1000, 3),
        "checks": checks_performed(),
        **extra,
    }


def _default_output(inpath: str, suffix: str) -> str:
    p = Path(inpath)
    return str(p.with_name(p.stem + suffix))


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (exit_code, report_dict)


def _cmd_check(ns, argv, started):
    obj = _read_json(ns.instance)
    kind = jsonio.detect_kind(obj)
    if kind == "demand":
        report = demand.validate(jsonio.load_demand(obj))
    elif kind == "family":
        report = supermodular.validate(jsonio.load_family(obj))
    else:
        raise _Usage("check expects a demand or family instance")
    verdict = "ok" if not report else "violation"
    code = EXIT_OK if not report else EXIT_VIOLATION
    return code, _report(argv, verdict, started, kind=kind, violations=report)


def _cmd_solve(ns, argv, started):
    obj = _read_json(ns.instance)
    trace = _trace_writer(ns.trace)
    stats: dict = {}

    if ns.solver == "edge":
        inst = jsonio.load_demand(obj)
        coloring = demand.solve(inst, trace=trace, stats=stats)
        ids = inst.graph.edge_ids()
    elif ns.solver == "gupta":
        kind = jsonio.detect_kind(obj)
        if kind == "demand":
            g = jsonio.load_demand(obj).graph
            k = ns.k if ns.k is not None else obj["k"]
        elif kind == "graph":
            g = jsonio.load_graph(obj)
            if ns.k is None:
                raise _Usage("solve gupta on a bare graph requires --k")
            k = ns.k
        else:
            raise _Usage("solve gupta expects a graph or demand instance")
        coloring = orientation.gupta_general_color(g, k, trace=trace, stats=stats)
        ids = g.edge_ids()
    else:
        inst = jsonio.load_family(obj)
        coloring = supermodular.solve(inst, trace=trace, stats=stats)
        ids = range(inst.ground)

    payload = jsonio.dump_coloring(coloring, ids)
    out = ns.output or _default_output(ns.instance, ".coloring.json")
    written = _write_json(out if ns.output != "-" else "-", payload)
    extra = {"witness": written, "stats": stats}
    if written is None:
        extra["coloring"] = payload
    return EXIT_OK, _report(argv, "ok", started, **extra)


def _cmd_verify(ns, argv, started):
    obj = _read_json(ns.instance)
    col_obj = _read_json(ns.coloring)
    kind = jsonio.detect_kind(obj)
    if kind == "demand" and not ns.gupta:
        inst = jsonio.load_demand(obj)
        coloring = jsonio.load_coloring(col_obj, inst.graph.edge_ids())
        bad = demand.verify(inst, coloring)
        detail = {"violating_vertices": bad}
    elif kind == "family":
        inst = jsonio.load_family(obj)
        coloring = jsonio.load_coloring(col_obj, range(inst.ground))
        bad = supermodular.verify(inst, coloring)
        detail = {"violating_sets": [list(families.elements_of(x)) for x in bad]}
    else:
        if kind == "demand":
            g = jsonio.load_demand(obj).graph
            k = ns.k if ns.k is not None else obj["k"]
        else:
            g = jsonio.load_graph(obj)
            if ns.k is None:
                raise _Usage("verify --gupta on a bare graph requires --k")
            k = ns.k
        coloring = jsonio.load_coloring(col_obj, g.edge_ids())
        bad = orientation.verify_gupta(g, k, coloring)
        detail = {"violating_vertices": bad}
    verdict = "ok" if not bad else "violation"
    return (EXIT_OK if not bad else EXIT_VIOLATION), _report(argv, verdict, started, **detail)


def _cmd_brute_force(ns, argv, started):
    obj = _read_json(ns.instance)
    kind = jsonio.detect_kind(obj)
    if kind == "demand":
        inst = jsonio.load_demand(obj)
        feasible, witness = oracle.brute_force_edge(inst, ns.budget)
        ids = inst.graph.edge_ids()
    elif kind == "family":
        inst = jsonio.load_family(obj)
        feasible, witness = oracle.brute_force_family(inst, ns.budget)
        ids = range(inst.ground)
    else:
        raise _Usage("brute-force expects a demand or family instance")
    extra = {"feasible": feasible}
    if witness is not None:
        extra["witness_coloring"] = jsonio.dump_coloring(witness, ids)
    verdict = "feasible" if feasible else "infeasible"
    return (EXIT_OK if feasible else EXIT_VIOLATION), _report(argv, verdict, started, **extra)


def _cmd_gen(ns, argv, started):
    if ns.what == "graph":
        g = oracle.gen_multigraph(ns.n, ns.m, ns.max_mult, ns.seed)
        payload = jsonio.dump_graph(g)
    elif ns.what == "demand":
        g = oracle.gen_multigraph(ns.n, ns.m, ns.max_mult, ns.seed)
        inst = oracle.gen_demand(g, ns.k, ns.seed + 1)
        payload = jsonio.dump_demand(inst)
    else:
        inst = oracle.gen_family(ns.ground, ns.k, ns.shape, ns.seed)
        payload = jsonio.dump_family(inst)
    written = _write_json(ns.output, payload)
    extra = {"witness": written}
    if written is None:
        extra["instance"] = payload
    return EXIT_OK, _report(argv, "ok", started, **extra)


def _cmd_reduce(ns, argv, started):
    if ns.what != "stars":
        raise _Usage("only 'reduce stars' is supported")
    obj = _read_json(ns.instance)
    inst = jsonio.load_demand(obj)
    fam = families.from_graph_stars(inst.graph, inst.c, inst.k)
    payload = jsonio.dump_family(fam)
    written = _write_json(ns.output, payload)
    extra = {"witness": written}
    if written is None:
        extra["instance"] = payload
    return EXIT_OK, _report(argv, "ok", started, **extra)


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercolor",
        description="Demand edge coloring, orientation-based coloring, and "
                    "set-family coloring with checkers and brute-force oracles.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="validate the hypotheses of an instance")
    p.add_argument("instance")
    p.add_argument("--each", metavar="DIR", help="run over every *.json in DIR")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("solve", help="run a solver")
    p.add_argument("solver", choices=["edge", "gupta", "supermodular"])
    p.add_argument("instance")
    p.add_argument("-o", "--output", help="coloring file ('-' embeds it in the report)")
    p.add_argument("--k", type=int, help="palette size (gupta on a bare graph)")
    p.add_argument("--trace", action="store_true", help="step log as JSON lines on stderr")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring against an instance")
    p.add_argument("instance")
    p.add_argument("coloring")
    p.add_argument("--gupta", action="store_true",
                   help="check the two degree-case guarantees instead of demands")
    p.add_argument("--k", type=int)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("brute-force", help="exhaustive feasibility oracle")
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=None,
                   help=f"assignment cap (default {oracle.DEFAULT_BUDGET})")
    p.add_argument("--each", metavar="DIR")
    p.set_defaults(handler=_cmd_brute_force)

    p = sub.add_parser("gen", help="seeded instance generators")
    gensub = p.add_subparsers(dest="what", required=True)
    gg = gensub.add_parser("graph")
    gg.add_argument("--n", type=int, required=True)
    gg.add_argument("--m", type=int, required=True)
    gg.add_argument("--max-mult", type=int, default=3)
    gd = gensub.add_parser("demand")
    gd.add_argument("--n", type=int, required=True)
    gd.add_argument("--m", type=int, required=True)
    gd.add_argument("--max-mult", type=int, default=3)
    gd.add_argument("--k", type=int, required=True)
    gf = gensub.add_parser("family")
    gf.add_argument("--ground", type=int, required=True)
    gf.add_argument("--k", type=int, required=True)
    gf.add_argument("--shape", choices=["stars", "intervals", "laminar", "random-filtered"],
                    default="stars")
    for sp in (gg, gd, gf):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("-o", "--output", help="instance file (default: stdout)")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("reduce", help="instance reductions")
    p.add_argument("what", choices=["stars"])
    p.add_argument("instance")
    p.add_argument("-o", "--output", help="family file (default: stdout)")
    p.set_defaults(handler=_cmd_reduce)

    return parser


def _run_one(ns, argv) -> int:
    started = time.perf_counter()
    try:
        code, report = ns.handler(ns, argv, started)
    except _Usage as exc:
        print(json.dumps(_report(argv, "error", started, error=str(exc))))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, GenerationFailure) as exc:
        print(json.dumps(_report(argv, "error", started, error=str(exc))))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(json.dumps(_report(argv, "error", started, error=str(exc))))
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisViolation as exc:
        print(json.dumps(_report(argv, "violation", started, violations=exc.violations)))
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except InternalAssertionError as exc:
        print(json.dumps(_report(argv, "internal-assertion", started, error=str(exc))))
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(json.dumps(report))
    summary = {k: v for k, v in report.items() if k in ("verdict", "wall_ms", "witness")}
    print(f"{report['command']}: {summary}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    each = getattr(ns, "each", None)
    if each:
        directory = Path(each)
        if not directory.is_dir():
            print(f"error: {each} is not a directory", file=sys.stderr)
            return EXIT_USAGE
        worst = EXIT_OK
        for path in sorted(directory.glob("*.json")):
            ns.instance = str(path)
            print(f"== {path.name}", file=sys.stderr)
            worst = max(worst, _run_one(ns, argv + [f"[{path.name}]"]))
        return worst
    return _run_one(ns, argv)


if __name__ == "__main__":
    sys.exit(main())
