"""Runtime of both solvers as the period grows."""
from __future__ import annotations

import csv
import time
from typing import Iterator, TextIO

from .families import gen_cycle_l1, gen_cycle_l2
from .graph import EdgePeriodicGraph
from .reductions import reduce_pca_to_directed_cycle, reduce_pca_to_undirected_cycle
from .solver import solve_fixpoint, solve_streaming

CSV_COLUMNS = ["instance", "n", "lcm", "solver", "seconds", "peak_cells"]


def suite_reductions(max_lcm: int) -> Iterator[tuple[str, EdgePeriodicGraph]]:
    """Fixed underlying cycles (m = 2) whose period grows with ``p``."""
    for p in range(1, max_lcm + 1):
        x = ["1", "0" * (p - 1) + "1"]
        for name, build, q in (("undirected", reduce_pca_to_undirected_cycle, 7),
                               ("directed", reduce_pca_to_directed_cycle, 6)):
            if q * p <= max_lcm:
                yield f"{name}-p{p}", build(x)


def suite_families(max_lcm: int) -> Iterator[tuple[str, EdgePeriodicGraph]]:
    k = 2
    while True:
        emitted = False
        for name, gen in (("l2", gen_cycle_l2), ("l1", gen_cycle_l1)):
            g = gen(k)
            if g.lcm <= max_lcm:
                emitted = True
                yield f"{name}-k{k}", g
        if not emitted:
            return
        k += 1


SUITES = {"reductions": suite_reductions, "families": suite_families}


def run_bench(suite: str, max_lcm: int, out: TextIO, solvers=("fixpoint", "streaming")) -> list[dict]:
    rows = []
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for name, g in SUITES[suite](max_lcm):
        for solver in solvers:
            start = time.perf_counter()
            if solver == "fixpoint":
                outcome, _ = solve_fixpoint(g)
            else:
                outcome = solve_streaming(g)
            elapsed = time.perf_counter() - start
            row = {"instance": name, "n": g.n, "lcm": g.lcm, "solver": solver,
                   "seconds": f"{elapsed:.6f}", "peak_cells": outcome.stats["peak_cells"]}
            writer.writerow(row)
            rows.append(row)
    return rows
