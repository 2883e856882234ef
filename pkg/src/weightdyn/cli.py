"""Command-line front end: replay traces, run the OuMv reduction, generate instances."""
from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import gadgets
from .bench import CSV_HEADER, PROBLEMS, replay
from .errors import WeightDynError
from .generate import random_bipartite_graph, random_graph, random_toggle_trace, random_trace
from .graph import parse_graph, serialize_graph
from .oracles import bruteforce_mcm, bruteforce_mwm
from .semimatching import bruteforce_semi_matching
from .trace import QUERY_KINDS, parse_trace, serialize_trace

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_path(base, index, total):
    if total == 1:
        return Path(base)
    base = Path(base)
    return base.with_name(f"{base.stem}.{index}{base.suffix}")


def _run_pair(problem, graph_path, trace_path, verify, s, t, max_delta, csv_path):
    """One replay; returns ``(exit_code, summary_line)``. Runs in a worker process."""
    try:
        g = parse_graph(Path(graph_path).read_text(encoding="utf-8"))
        trace = parse_trace(Path(trace_path).read_text(encoding="utf-8"), g)
        records, mismatch = replay(problem, g, trace, verify=verify, s=s, t=t, max_delta=max_delta)
    except (WeightDynError, OSError, ValueError) as exc:
        return EXIT_USAGE, f"{graph_path} {trace_path}: error: {exc}"
    if csv_path:
        lines = [CSV_HEADER] + [r.csv_row() for r in records]
        Path(csv_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    checked = sum(r.match is not None for r in records)
    summary = (
        f"{graph_path} {trace_path}: events={len(records)} checked={checked} "
        f"dynamic_ns={sum(r.dynamic_ns for r in records)} "
        f"static_ns={sum(r.static_ns or 0 for r in records)} "
        f"dynamic_work={sum(r.dynamic_work for r in records)}"
    )
    if mismatch is not None:
        rec = records[mismatch]
        return EXIT_MISMATCH, (
            f"{summary}\nMISMATCH at event {mismatch}: dynamic={rec.result_dynamic} static={rec.result_static}"
        )
    return EXIT_OK, summary


def cmd_run(args):
    if len(args.files) % 2:
        print("run: expected GRAPH TRACE pairs", file=sys.stderr)
        return EXIT_USAGE
    pairs = list(zip(args.files[::2], args.files[1::2]))
    jobs = [
        (
            args.problem,
            gp,
            tp,
            args.verify,
            args.source,
            args.target,
            args.max_delta,
            _csv_path(args.csv_out, i, len(pairs)) if args.csv_out else None,
        )
        for i, (gp, tp) in enumerate(pairs)
    ]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_pair, *zip(*jobs)))
    else:
        results = [_run_pair(*job) for job in jobs]
    for code, line in results:
        print(line, file=sys.stdout if code == EXIT_OK else sys.stderr)
    codes = {code for code, _ in results}
    if EXIT_USAGE in codes:
        return EXIT_USAGE
    return EXIT_MISMATCH if EXIT_MISMATCH in codes else EXIT_OK


def cmd_oumv(args):
    try:
        inst = gadgets.parse_oumv(Path(args.instance).read_text(encoding="utf-8"))
    except (WeightDynError, OSError, ValueError) as exc:
        print(f"oumv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    run = gadgets.solve_oumv_via_sssp(inst)
    direct = inst.direct_answers()
    for bit in run.outputs:
        print(int(bit))
    print(
        f"rounds={len(run.outputs)} changes={sum(run.changes_per_round)} "
        f"max_changes_per_round={max(run.changes_per_round, default=0)} "
        f"queries={run.queries} dynamic_work={run.work}",
        file=sys.stderr,
    )
    if args.csv_out:
        rows = ["round,output,direct,changes"] + [
            f"{i},{int(o)},{int(d)},{c}"
            for i, (o, d, c) in enumerate(zip(run.outputs, direct, run.changes_per_round))
        ]
        Path(args.csv_out).write_text("\n".join(rows) + "\n", encoding="utf-8")
    if args.verify and run.outputs != direct:
        bad = next(i for i, (o, d) in enumerate(zip(run.outputs, direct)) if o != d)
        print(f"MISMATCH at round {bad}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_gen_graph(args):
    try:
        if args.left is not None:
            g = random_bipartite_graph(args.left, args.n - args.left, args.density, args.W, args.seed)
        else:
            g = random_graph(args.n, args.density, args.W, args.seed, directed=args.directed, connected=args.connected)
    except (WeightDynError, ValueError) as exc:
        print(f"gen-graph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(serialize_graph(g), args.output)
    return EXIT_OK


def cmd_gen_trace(args):
    try:
        g = parse_graph(Path(args.graph).read_text(encoding="utf-8"))
        if args.toggles:
            trace = random_toggle_trace(g.n, args.length, args.seed, query_rate=args.query_rate)
        else:
            trace = random_trace(g, args.length, args.c, args.seed, query_kind=args.query, query_rate=args.query_rate)
    except (WeightDynError, OSError, ValueError) as exc:
        print(f"gen-trace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(serialize_trace(trace), args.output)
    return EXIT_OK


def cmd_gen_oumv(args):
    try:
        inst = gadgets.random_oumv(args.n, args.rounds, args.density, args.seed)
    except ValueError as exc:
        print(f"gen-oumv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(gadgets.serialize_oumv(inst), args.output)
    return EXIT_OK


def cmd_verify_gadgets(args):
    rng = random.Random(args.seed)
    failures = 0

    def report(name, ok):
        nonlocal failures
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}")

    def dichotomy(M, u, v):
        d = gadgets.gadget_distance(M, u, v)
        return d == 3 if gadgets.boolean_product(M, u, v) else d >= 5

    report("sp gadget n=2 exhaustive", all(dichotomy(*x) for x in gadgets.all_small_instances(2)))
    for n in (4, 8):
        samples = (gadgets.random_oumv(n, 1, rng.random(), rng.getrandbits(32)) for _ in range(args.samples))
        report(f"sp gadget n={n} x{args.samples}", all(dichotomy(i.matrix, *i.rounds[0]) for i in samples))
    inst = gadgets.random_oumv(args.n, args.n, 0.3, rng.getrandbits(32))
    run = gadgets.solve_oumv_via_sssp(inst)
    report(f"oumv reduction n={args.n}", run.outputs == inst.direct_answers())
    for N in (2, 3, 4):
        ok_mwm = ok_semi = True
        for _ in range(args.samples // 10):
            edges = gadgets.random_subgraph(N, rng.random(), rng)
            mcm = bruteforce_mcm(gadgets.subgraph_graph(N, edges)).value
            ok_mwm &= bruteforce_mwm(gadgets.matching_shift_transform(N, edges)).value == N + mcm
            ok_semi &= bruteforce_semi_matching(gadgets.semimatching_shift_transform(N, edges)) == 2 * N - mcm
        report(f"matching shift N={N}", ok_mwm)
        report(f"semi-matching shift N={N}", ok_semi)
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (u64)")
    common.add_argument("--csv-out", help="write per-event CSV here")
    common.add_argument("--jobs", type=int, default=1, help="independent replays to run in parallel")
    common.add_argument("--max-delta", type=int, help="reject traces with a larger |delta|")

    p = argparse.ArgumentParser(prog="weightdyn", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="replay traces through a dynamic structure")
    run.add_argument("problem", choices=PROBLEMS)
    run.add_argument("files", nargs="+", metavar="GRAPH TRACE", help="one or more graph/trace file pairs")
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--verify", action="store_true", help="recompute from scratch after every event")
    mode.add_argument("--bench", action="store_true", help="recompute only at queries (default)")
    run.add_argument("--source", type=int, help="source node for dist/flow (default 1)")
    run.add_argument("--target", type=int, help="target node for dist/flow (default n)")
    run.set_defaults(func=cmd_run)

    om = sub.add_parser("oumv", parents=[common], help="answer an OuMv instance via dynamic shortest paths")
    om.add_argument("instance")
    om.add_argument("--verify", action="store_true")
    om.set_defaults(func=cmd_oumv)

    gg = sub.add_parser("gen-graph", parents=[common], help="random graph file")
    gg.add_argument("--n", type=int, required=True)
    gg.add_argument("--density", type=float, required=True)
    gg.add_argument("--W", type=int, required=True)
    gg.add_argument("--directed", action="store_true")
    gg.add_argument("--connected", action="store_true")
    gg.add_argument("--left", type=int, help="make a bipartite graph with this many left nodes")
    gg.add_argument("-o", "--output")
    gg.set_defaults(func=cmd_gen_graph)

    gt = sub.add_parser("gen-trace", parents=[common], help="random trace for a graph file")
    gt.add_argument("graph")
    gt.add_argument("--length", type=int, required=True)
    gt.add_argument("--c", type=int, default=1, help="bound on |delta| per change")
    gt.add_argument("--query", choices=QUERY_KINDS)
    gt.add_argument("--query-rate", type=float, default=0.1)
    gt.add_argument("--toggles", action="store_true", help="add/remove stream for conn instead")
    gt.add_argument("-o", "--output")
    gt.set_defaults(func=cmd_gen_trace)

    go = sub.add_parser("gen-oumv", parents=[common], help="random OuMv instance file")
    go.add_argument("--n", type=int, required=True)
    go.add_argument("--rounds", type=int, required=True)
    go.add_argument("--density", type=float, default=0.3)
    go.add_argument("-o", "--output")
    go.set_defaults(func=cmd_gen_oumv)

    vg = sub.add_parser("verify-gadgets", parents=[common], help="check the gadget identities")
    vg.add_argument("--samples", type=int, default=200)
    vg.add_argument("--n", type=int, default=16, help="dimension for the reduction round-trip")
    vg.set_defaults(func=cmd_verify_gadgets)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
