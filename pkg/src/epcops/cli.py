"""Command-line interface.

Exit codes: 0 success / cop-winning / PCA witness found, 1 robber-winning /
no PCA witness, 2 usage or input error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bench as bench_mod
from .chase import greedy_directed_chase, write_counterexample
from .families import (CLOCKWISE, COUNTERCLOCKWISE, RunningCop, gen_cycle_l1,
                       gen_cycle_l2, random_cycle, table1_strategies)
from .game import Stay, simulate
from .graph import GraphError, ParseError, parse_graph, serialize_graph
from .pca import parse_pca, pca_solve
from .reductions import (reduce_pca_to_directed_cycle, reduce_pca_to_undirected_cycle,
                         reduction_header)
from .solver import (DEFAULT_CONFIG_BUDGET, DEFAULT_LEVEL_BUDGET, BudgetExceeded, StrategyError,
                     evasion_certificate, extract_cop_strategy, robber_best_response,
                     solve_fixpoint, solve_streaming)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.file))
    win = None
    if args.solver == "fixpoint":
        outcome, win = solve_fixpoint(g, budget=args.budget or DEFAULT_CONFIG_BUDGET)
    else:
        outcome = solve_streaming(g, level_budget=args.budget or DEFAULT_LEVEL_BUDGET)
    trace = None
    if args.witness:
        if win is None:
            _, win = solve_fixpoint(g, budget=DEFAULT_CONFIG_BUDGET)
        if outcome.cop_winning:
            cop = extract_cop_strategy(g, win)
            robber = robber_best_response(g, win)
            trace = simulate(g, cop, robber, outcome.rounds_bound)
            outcome.witness = {"type": "capture", "cop_start": trace.starts[0],
                               "trace": trace.to_json()}
        else:
            cert = evasion_certificate(win)
            outcome.witness = {"type": "evasion",
                               "robber_starts": {str(c): r for c, r in cert.items()}}
    if args.json:
        print(outcome.dumps())
    else:
        if outcome.cop_winning:
            print("cop-winning; starts: " + " ".join(map(str, outcome.winning_starts)))
        else:
            print("robber-winning")
        if trace is not None:
            sys.stdout.write(trace.to_text())
        elif outcome.witness is not None:
            for c, r in outcome.witness["robber_starts"].items():
                print(f"cop start {c}: robber evades from {r}")
    return EXIT_OK if outcome.cop_winning else EXIT_NO


def cmd_pca(args) -> int:
    x = parse_pca(_read(args.file))
    i = pca_solve(x)
    print("none" if i is None else i)
    return EXIT_NO if i is None else EXIT_OK


REDUCTIONS = {"undirected-cycle": reduce_pca_to_undirected_cycle,
              "directed-cycle": reduce_pca_to_directed_cycle}


def cmd_reduce(args) -> int:
    x = parse_pca(_read(args.file))
    g = REDUCTIONS[args.target](x)
    _write(args.output, serialize_graph(g, comments=reduction_header(x, args.target)))
    return EXIT_OK


def cmd_family(args) -> int:
    gen = gen_cycle_l2 if args.ell == 2 else gen_cycle_l1
    g = gen(args.k)
    p = g.profile
    header = [f"cop-winning cycle family ell={args.ell} k={args.k}",
              f"n={g.n} lcm={p.lcm} max_period={p.max_period} computed_ell={p.ell}",
              "cop start 0"]
    _write(args.output, serialize_graph(g, comments=header))
    return EXIT_OK


def cmd_random(args) -> int:
    g = random_cycle(args.n, args.max_period, args.seed, directed=args.directed)
    header = [f"random cycle n={args.n} max_period={args.max_period} seed={args.seed}"]
    _write(args.output, serialize_graph(g, comments=header))
    return EXIT_OK


def _player(spec: str, role: str, g, win_holder: dict):
    """Build a strategy from ``name[@start]``."""
    name, _, at = spec.partition("@")
    start = int(at) if at else None

    def winset():
        if "win" not in win_holder:
            win_holder["win"] = solve_fixpoint(g)[1]
        return win_holder["win"]

    if name == "stay":
        return Stay(0 if start is None else start)
    if name == "attractor" and role == "cop":
        return extract_cop_strategy(g, winset(), start)
    if name in ("attractor", "best-response") and role == "robber":
        return robber_best_response(g, winset(), start)
    if name in ("run", "run-cw", "run-ccw") and role == "cop":
        direction = {"run": None, "run-cw": CLOCKWISE, "run-ccw": COUNTERCLOCKWISE}[name]
        return RunningCop(direction, 0 if start is None else start)
    if name in ("table1-cw", "table1-ccw"):
        if (g.n + 1) % 4:
            raise UsageError("table1 strategies need a 4k-1 vertex family cycle")
        k = (g.n + 1) // 4
        cop, robber = table1_strategies(k, CLOCKWISE if name == "table1-cw" else COUNTERCLOCKWISE)
        return cop if role == "cop" else robber
    raise UsageError(f"unknown {role} strategy {spec!r}")


def cmd_simulate(args) -> int:
    g = parse_graph(_read(args.file))
    holder: dict = {}
    cop = _player(args.cop, "cop", g, holder)
    robber = _player(args.robber, "robber", g, holder)
    trace = simulate(g, cop, robber, args.horizon)
    if args.json:
        print(trace.dumps())
        return EXIT_OK if trace.captured else EXIT_NO
    if args.trace:
        sys.stdout.write(trace.to_text())
    if trace.captured:
        print(f"captured at round {trace.capture_round}")
    else:
        print(f"evaded for {len(trace.rounds)} rounds")
    return EXIT_OK if trace.captured else EXIT_NO


def cmd_chase(args) -> int:
    if not args.greedy:
        raise UsageError("chase currently supports only --greedy")
    g = parse_graph(_read(args.file))
    report = greedy_directed_chase(g, horizon=args.horizon, threads=args.threads)
    payload = report.to_json()
    status = EXIT_OK if report.cop_winning else EXIT_NO
    if args.check:
        exact, _ = solve_fixpoint(g)
        payload["exact_cop_winning"] = exact.cop_winning
        payload["agrees"] = exact.cop_winning == report.cop_winning
        if not payload["agrees"] and args.counterexample:
            write_counterexample(args.counterexample, g, report, exact.cop_winning, label=args.file)
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(report.to_table())
        if args.check:
            print("exact solver: " + ("cop-winning" if payload["exact_cop_winning"] else "robber-winning")
                  + ("" if payload["agrees"] else "  (DISAGREES)"))
    return status


def cmd_bench(args) -> int:
    if args.csv == "-":
        bench_mod.run_bench(args.suite, args.max_lcm, sys.stdout)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            bench_mod.run_bench(args.suite, args.max_lcm, fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="epcops", description="Cops and robber on edge-periodic graphs")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide whether the graph is cop-winning")
    s.add_argument("file")
    s.add_argument("--solver", choices=["fixpoint", "streaming"], default="fixpoint")
    s.add_argument("--budget", type=int, default=None,
                   help="configuration budget (fixpoint) or level budget (streaming)")
    s.add_argument("--json", action="store_true")
    s.add_argument("--witness", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("pca", help="find an aligned position of a PCA instance")
    s.add_argument("file")
    s.set_defaults(func=cmd_pca)

    s = sub.add_parser("reduce", help="build a cycle instance from a PCA instance")
    s.add_argument("file")
    s.add_argument("--target", choices=sorted(REDUCTIONS), required=True)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("family", help="emit a cop-winning cycle of length 2*ell*lcm-1")
    s.add_argument("--ell", type=int, choices=[1, 2], required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("random", help="emit a random edge-periodic cycle")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-period", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--directed", action="store_true")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("simulate", help="play two strategies against each other")
    s.add_argument("file")
    s.add_argument("--cop", required=True,
                   help="attractor | stay | run | run-cw | run-ccw | table1-cw | table1-ccw, optional @start")
    s.add_argument("--robber", required=True,
                   help="attractor | best-response | stay | table1-cw | table1-ccw, optional @start")
    s.add_argument("--horizon", type=int, required=True)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("chase", help="greedy chase on a directed cycle")
    s.add_argument("file")
    s.add_argument("--greedy", action="store_true")
    s.add_argument("--check", action="store_true", help="cross-run the exact solver")
    s.add_argument("--horizon", type=int, default=None)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--counterexample", default=None,
                   help="write the instance here if greedy and exact verdicts differ")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_chase)

    s = sub.add_parser("bench", help="solver runtime against lcm")
    s.add_argument("--suite", choices=sorted(bench_mod.SUITES), required=True)
    s.add_argument("--max-lcm", type=int, required=True)
    s.add_argument("--csv", default="-")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParseError, GraphError, StrategyError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
