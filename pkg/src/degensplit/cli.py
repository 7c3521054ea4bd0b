"""Command-line front end.

Each run prints one JSON report on stdout (logs and traces go to stderr) and
exits 0 on success, 2 on a definite "no solution" answer (forbidden clique,
no recolouring path, unsatisfiable, failed verification), and 1 on errors.
Verification verdicts in the report are always recomputed from the emitted
payload, never copied from algorithm internals.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import statistics
import sys
import time

from . import cubic, gadgets, kdegen, oracles, recolour
from .graph import (
    Decomposition,
    ForbiddenCliqueError,
    GraphFormatError,
    load_colouring,
    load_graph,
    serialize_colouring,
    serialize_graph,
    verify_decomposition,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_SOLUTION = 2


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:16]


def _read(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def _emit(report: dict, exit_code: int) -> int:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return exit_code


def _report(command: str, inputs: dict, started: float, **payload) -> dict:
    report = {"command": command, "inputs": inputs}
    report.update(payload)
    report["wall_time_s"] = round(time.perf_counter() - started, 6)
    return report


def _decomposition_payload(d: Decomposition) -> dict:
    return {
        "k": d.k,
        "a_set": sorted(v + 1 for v in d.a_set),
        "b_set": sorted(v + 1 for v in d.b_set),
    }


def _decomposition_colouring(d: Decomposition, n: int) -> str:
    colours = [1 if v in d.a_set else 2 for v in range(n)]
    return serialize_colouring(2, colours)


def _load_decomposition(text, n: int, k: int) -> Decomposition:
    file_k, colours = load_colouring(text)
    if file_k != 2 or len(colours) != n:
        raise ValueError("decomposition file must 2-colour every vertex (1=A, 2=B)")
    a = frozenset(v for v in range(n) if colours[v] == 1)
    return Decomposition(a, frozenset(range(n)) - a, k)


# -- subcommands -----------------------------------------------------------------


def _cmd_decompose(args) -> int:
    started = time.perf_counter()
    data = _read(args.infile)
    g = load_graph(data)
    inputs = {"graph": _digest(data), "n": g.n, "m": g.m, "k": args.k}
    use_cubic = args.k == 3 and g.max_degree() <= 3 and not args.force_general
    try:
        if use_cubic:
            if args.trace:
                records = cubic.reduce_to_empty(g)
                for row in cubic.rule_trace(records):
                    print(json.dumps(row), file=sys.stderr)
            d = cubic.decompose_subcubic(g)
            algorithm = "subcubic-rules"
        else:
            trace: list | None = [] if args.trace else None
            d = kdegen.decompose_k(g, args.k, trace=trace)
            algorithm = "pair-refinement"
            if args.trace:
                for row in trace:
                    print(json.dumps(row), file=sys.stderr)
    except ForbiddenCliqueError as exc:
        report = _report(
            "decompose", inputs, started,
            result=None, reason=str(exc), verified=False,
        )
        return _emit(report, EXIT_NO_SOLUTION)
    verified = verify_decomposition(g, args.k, d)
    report = _report(
        "decompose", inputs, started,
        algorithm=algorithm,
        result=_decomposition_payload(d),
        decomposition_file=_decomposition_colouring(d, g.n),
        verified=verified,
    )
    return _emit(report, EXIT_OK if verified else EXIT_ERROR)


def _cmd_recolour(args) -> int:
    started = time.perf_counter()
    gdata = _read(args.infile)
    adata = _read(args.from_file)
    bdata = _read(args.to_file)
    g = load_graph(gdata)
    ka, acol = load_colouring(adata)
    kb, bcol = load_colouring(bdata)
    if ka != kb or len(acol) != g.n or len(bcol) != g.n:
        raise ValueError("colouring files disagree with the graph or each other")
    alpha = recolour.Colouring(tuple(acol), ka)
    beta = recolour.Colouring(tuple(bcol), ka)
    inputs = {
        "graph": _digest(gdata), "from": _digest(adata), "to": _digest(bdata),
        "n": g.n, "k": ka,
    }
    path = recolour.find_path(g, ka, alpha, beta)
    if path is None:
        report = _report(
            "recolour", inputs, started,
            result=None, reason="frozen endpoints", verified=False,
        )
        return _emit(report, EXIT_NO_SOLUTION)
    verified = recolour.validate_path(g, ka, alpha, path, beta)
    report = _report(
        "recolour", inputs, started,
        result={"steps": [{"v": v + 1, "to": c} for v, c in path], "length": len(path)},
        verified=verified,
    )
    return _emit(report, EXIT_OK if verified else EXIT_ERROR)


def _cmd_gadget(args) -> int:
    started = time.perf_counter()
    data = _read(args.infile)
    k, inst = gadgets.load_cnf(data)
    if args.k is not None and args.k != k:
        raise ValueError(f"--k {args.k} disagrees with the instance header k={k}")
    gg = gadgets.build_reduction(inst, k)
    audit = gadgets.structural_audit(gg, len(inst.clauses))
    inputs = {"cnf": _digest(data), "k": k, "num_vars": inst.num_vars,
              "num_clauses": len(inst.clauses)}
    report = _report(
        "gadget", inputs, started,
        result={
            "graph": serialize_graph(gg.graph),
            "labels": gadgets.label_map_json(gg),
            "stats": audit,
        },
        verified=audit["ok"],
    )
    return _emit(report, EXIT_OK if audit["ok"] else EXIT_ERROR)


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    gdata = _read(args.infile)
    g = load_graph(gdata)
    if args.what == "decomposition":
        ddata = _read(args.from_file)
        d = _load_decomposition(ddata, g.n, args.k)
        valid = verify_decomposition(g, args.k, d)
        inputs = {"graph": _digest(gdata), "decomposition": _digest(ddata), "k": args.k}
        report = _report("verify-decomposition", inputs, started, result={"valid": valid})
    else:
        if not args.to_file:
            raise ValueError("verify path needs --to with the final colouring")
        adata = _read(args.from_file)
        bdata = _read(args.to_file)
        ka, acol = load_colouring(adata)
        kb, bcol = load_colouring(bdata)
        if ka != kb:
            raise ValueError("endpoint colourings use different palettes")
        payload = json.load(sys.stdin)
        raw_steps = payload.get("steps") if "steps" in payload else (
            payload.get("result", {}) or {}).get("steps")
        if raw_steps is None:
            raise ValueError("no steps found on stdin (expected path JSON)")
        path = [(row["v"] - 1, row["to"]) for row in raw_steps]
        alpha = recolour.Colouring(tuple(acol), ka)
        beta = recolour.Colouring(tuple(bcol), ka)
        valid = recolour.validate_path(g, ka, alpha, path, beta)
        inputs = {"graph": _digest(gdata), "from": _digest(adata), "to": _digest(bdata)}
        report = _report("verify-path", inputs, started,
                         result={"valid": valid, "length": len(path)})
    return _emit(report, EXIT_OK if report["result"]["valid"] else EXIT_NO_SOLUTION)


def _cmd_gen(args) -> int:
    started = time.perf_counter()
    if args.what == "regular":
        g = oracles.gen_random_regular(args.k, args.n, args.seed)
        payload = {"graph": serialize_graph(g)}
        inputs = {"k": args.k, "n": args.n, "seed": args.seed}
    elif args.what == "subcubic":
        g = oracles.gen_random_subcubic(args.n, args.seed, connected=args.connected)
        payload = {"graph": serialize_graph(g)}
        inputs = {"n": args.n, "seed": args.seed, "connected": args.connected}
    else:  # colouring
        if not args.infile:
            raise ValueError("gen colouring needs --in with the graph to colour")
        gdata = _read(args.infile)
        g = load_graph(gdata)
        colours = oracles.gen_random_colouring(g, args.k, args.seed)
        payload = {"colouring": serialize_colouring(args.k, colours)}
        inputs = {"graph": _digest(gdata), "k": args.k, "seed": args.seed}
    report = _report(f"gen-{args.what}", inputs, started, result=payload)
    return _emit(report, EXIT_OK)


def _cmd_oracle(args) -> int:
    started = time.perf_counter()
    budget = oracles.OracleBudget(
        max_vertices_for_subset_search=args.budget_n,
        max_state_count_for_reconfig_bfs=oracles.DEFAULT_BUDGET.max_state_count_for_reconfig_bfs,
    )
    if args.what == "decompose":
        data = _read(args.infile)
        g = load_graph(data)
        d = oracles.brute_decompose(g, args.k, budget)
        inputs = {"graph": _digest(data), "k": args.k}
        if d is None:
            report = _report("oracle-decompose", inputs, started,
                             result=None, reason="no decomposition exists")
            return _emit(report, EXIT_NO_SOLUTION)
        verified = verify_decomposition(g, args.k, d)
        report = _report("oracle-decompose", inputs, started,
                         result=_decomposition_payload(d), verified=verified)
        return _emit(report, EXIT_OK if verified else EXIT_ERROR)
    if args.what == "recolour":
        if not args.from_file or not args.to_file:
            raise ValueError("oracle recolour needs --from and --to colourings")
        gdata = _read(args.infile)
        adata = _read(args.from_file)
        bdata = _read(args.to_file)
        g = load_graph(gdata)
        ka, acol = load_colouring(adata)
        kb, bcol = load_colouring(bdata)
        if ka != kb:
            raise ValueError("endpoint colourings use different palettes")
        path = oracles.brute_reconfig_path(g, ka, acol, bcol)
        inputs = {"graph": _digest(gdata), "from": _digest(adata), "to": _digest(bdata)}
        if path is None:
            report = _report("oracle-recolour", inputs, started,
                             result=None, reason="no path exists")
            return _emit(report, EXIT_NO_SOLUTION)
        alpha = recolour.Colouring(tuple(acol), ka)
        beta = recolour.Colouring(tuple(bcol), ka)
        verified = recolour.validate_path(g, ka, alpha, path, beta)
        report = _report(
            "oracle-recolour", inputs, started,
            result={"steps": [{"v": v + 1, "to": c} for v, c in path],
                    "length": len(path)},
            verified=verified,
        )
        return _emit(report, EXIT_OK if verified else EXIT_ERROR)
    # sat
    data = _read(args.infile)
    k, inst = gadgets.load_cnf(data)
    assignment = oracles.brute_1_in_k_sat(inst, budget)
    inputs = {"cnf": _digest(data), "k": k}
    if assignment is None:
        report = _report("oracle-sat", inputs, started,
                         result=None, reason="unsatisfiable")
        return _emit(report, EXIT_NO_SOLUTION)
    report = _report(
        "oracle-sat", inputs, started,
        result={"true_variables": [i + 1 for i, bit in enumerate(assignment) if bit]},
    )
    return _emit(report, EXIT_OK)


def _cmd_bench(args) -> int:
    started = time.perf_counter()
    rows = []
    if args.what == "cubic":
        sizes = args.sizes or [10_000 * (2**i) for i in range(7)]
        for n in sizes:
            times = []
            for rep in range(args.reps):
                g = oracles.gen_random_subcubic(n, seed=args.seed + rep)
                t0 = time.perf_counter()
                cubic.decompose_subcubic(g)
                times.append(time.perf_counter() - t0)
            rows.append({"n": n, "median_s": round(statistics.median(times), 6),
                         "times_s": [round(t, 6) for t in times]})
            print(f"bench cubic n={n}: median {rows[-1]['median_s']}s", file=sys.stderr)
    else:
        sizes = args.sizes or [500, 1000, 2000, 4000]
        for n in sizes:
            times = []
            for rep in range(args.reps):
                g = oracles.gen_random_regular(4, n, seed=args.seed + rep)
                t0 = time.perf_counter()
                kdegen.decompose_k(g, 4)
                times.append(time.perf_counter() - t0)
            rows.append({"n": n, "median_s": round(statistics.median(times), 6),
                         "times_s": [round(t, 6) for t in times]})
            print(f"bench kdegen n={n}: median {rows[-1]['median_s']}s", file=sys.stderr)
    ratios = [
        round(rows[i + 1]["median_s"] / rows[i]["median_s"], 3) if rows[i]["median_s"] > 0 else None
        for i in range(len(rows) - 1)
    ]
    report = _report(f"bench-{args.what}", {"seed": args.seed, "reps": args.reps},
                     started, result={"rows": rows, "doubling_ratios": ratios})
    return _emit(report, EXIT_OK)


# -- argument parsing ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degensplit",
        description="Graph decompositions, recolouring paths, and hardness gadgets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="independent set + (k-2)-degenerate part")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--force-general", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("recolour", help="path between two (maxdeg+1)-colourings")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--from", dest="from_file", required=True)
    p.add_argument("--to", dest="to_file", required=True)
    p.set_defaults(func=_cmd_recolour)

    p = sub.add_parser("gadget", help="build a hardness instance from a 1-in-k file")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("verify", help="re-check a decomposition or a path")
    p.add_argument("what", choices=["decomposition", "path"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--from", dest="from_file", required=True)
    p.add_argument("--to", dest="to_file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="random instances")
    p.add_argument("what", choices=["regular", "subcubic", "colouring"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--in", dest="infile")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force ground truths")
    p.add_argument("what", choices=["decompose", "recolour", "sat"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--from", dest="from_file")
    p.add_argument("--to", dest="to_file")
    p.add_argument("--budget-n", type=int,
                   default=oracles.DEFAULT_BUDGET.max_vertices_for_subset_search)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="doubling-size timing tables")
    p.add_argument("what", choices=["cubic", "kdegen"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--sizes", type=int, nargs="*", default=None)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv=None) -> int:
    """Entry point: parse one subcommand, print its JSON report, return the
    exit code (0 success, 2 no-solution, 1 error)."""
    return main(argv)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, OSError, json.JSONDecodeError) as exc:
        json.dump({"command": args.command, "error": str(exc)}, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_ERROR
    except AssertionError as exc:
        json.dump(
            {"command": args.command, "error": f"internal invariant violated: {exc}",
             "internal_error": True},
            sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
