"""Greedy chase on directed edge-periodic cycles.

Both players keep running forward whenever their edge is present; the robber
starts directly behind the cop and never steps onto the cop.  Whether this
play is optimal is unproven, so verdicts are cross-checked against the exact
solver by the callers.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .graph import EdgePeriodicGraph, cycle_successor, serialize_graph


@dataclass(frozen=True)
class StartReport:
    cop_start: int
    robber_start: int
    caught: bool
    rounds: int
    capture_round: Optional[int]


@dataclass
class ChaseReport:
    starts: list[StartReport] = field(default_factory=list)
    horizon: int = 0

    @property
    def cop_winning(self) -> bool:
        return any(s.caught for s in self.starts)

    @property
    def winning_starts(self) -> list[int]:
        return [s.cop_start for s in self.starts if s.caught]

    def to_json(self) -> dict:
        return {
            "cop_winning": self.cop_winning,
            "horizon": self.horizon,
            "starts": [
                {"cop": s.cop_start, "robber": s.robber_start,
                 "verdict": "caught" if s.caught else "evaded",
                 "rounds": s.rounds, "capture_round": s.capture_round}
                for s in self.starts
            ],
        }

    def to_table(self) -> str:
        lines = [f"{'cop':>4} {'robber':>6} {'verdict':>8} {'rounds':>8} {'capture':>8}"]
        for s in self.starts:
            cap = "-" if s.capture_round is None else str(s.capture_round)
            verdict = "caught" if s.caught else "evaded"
            lines.append(f"{s.cop_start:>4} {s.robber_start:>6} {verdict:>8} {s.rounds:>8} {cap:>8}")
        lines.append("cop-winning" if self.cop_winning else "robber-winning")
        return "\n".join(lines)


def _chase_from(g: EdgePeriodicGraph, nxt: list[int], cop_start: int, horizon: int) -> StartReport:
    prev = {v: u for u, v in enumerate(nxt)}
    cop, robber = cop_start, prev[cop_start]
    robber_start = robber
    tau = {e.u: e.tau for e in g.edges}
    for t in range(horizon):
        if tau[cop].at(t):
            cop = nxt[cop]
            if cop == robber:
                return StartReport(cop_start, robber_start, True, t + 1, t)
        if tau[robber].at(t) and nxt[robber] != cop:
            robber = nxt[robber]
    return StartReport(cop_start, robber_start, False, horizon, None)


def greedy_directed_chase(g: EdgePeriodicGraph, horizon: Optional[int] = None,
                          threads: int = 1) -> ChaseReport:
    nxt = cycle_successor(g)
    if horizon is None:
        horizon = g.n * g.n * g.lcm

    def run(u):
        return _chase_from(g, nxt, u, horizon)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(run, range(g.n)))
    else:
        reports = [run(u) for u in range(g.n)]
    return ChaseReport(starts=reports, horizon=horizon)


def write_counterexample(path, g: EdgePeriodicGraph, report: ChaseReport, exact_cop_winning: bool,
                         label: str = "") -> None:
    """Dump a disagreement between greedy play and the exact solver as an instance file."""
    header = [
        f"greedy/exact disagreement {label}".rstrip(),
        f"greedy cop_winning={report.cop_winning} exact cop_winning={exact_cop_winning}",
        "report " + json.dumps(report.to_json(), sort_keys=True),
    ]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g, comments=header))
