"""Cop-winning cycle families at the robber-winning length threshold, the
scripted chase strategies that go with them, and random instance generators.

Family vertices are clockwise indices ``0..4k-2`` with the cop starting at 0;
the counterclockwise label ``-j`` is vertex ``(4k-1) - j``.
"""
from __future__ import annotations

import random
from typing import Optional, Sequence

from .game import Configuration, Strategy, Turn
from .graph import EdgePeriodicGraph

CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"
DIRECTIONS = (CLOCKWISE, COUNTERCLOCKWISE)


def _family_edges(k: int) -> dict[tuple[int, int], str]:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    n = 4 * k - 1
    taus = {(i, (i + 1) % n): "1" for i in range(n)}
    # special edges last: at k=2 vertex 2k and 3k-2 coincide
    taus[(0, 1)] = "1" + "0" * (k - 1)
    taus[(2 * k - 1, 2 * k)] = "0" * (k - 1) + "1"
    taus[(3 * k - 2, 3 * k - 1)] = "1" + "0" * (k - 1)
    return taus


def gen_cycle_l2(k: int) -> EdgePeriodicGraph:
    taus = _family_edges(k)
    return EdgePeriodicGraph(n=4 * k - 1, directed=False,
                             edges=tuple((u, v, t) for (u, v), t in taus.items()))


def gen_cycle_l1(k: int) -> EdgePeriodicGraph:
    """``gen_cycle_l2(k)`` with edge (1, 2) present only at odd times, period ``2^(i+1)``
    where ``2^i`` is the largest power of two dividing ``k``."""
    taus = _family_edges(k)
    i = (k & -k).bit_length() - 1
    taus[(1, 2)] = "01" * 2**i
    return EdgePeriodicGraph(n=4 * k - 1, directed=False,
                             edges=tuple((u, v, t) for (u, v), t in taus.items()))


def signed_vertex(k: int, label: int) -> int:
    """Map a signed family label (``+j`` clockwise, ``-j`` counterclockwise) to an id."""
    return label % (4 * k - 1)


def table1_rows(k: int, direction: str) -> list[tuple[Optional[int], int, Optional[int]]]:
    """Listed ``(time, cop, robber)`` entries of the chase table, as vertex ids.

    Time ``None`` is the start column; robber ``None`` marks the capture.
    """
    if direction == CLOCKWISE:
        times = [None, 0, k - 1, 2*k - 3, 2*k - 2, 2*k - 1, 2*k, 3*k - 3, 3*k, 3*k + 1, 4*k - 1, 4*k]
        cop = [0, 1, k, 2*k - 2, 2*k - 1, 2*k, 2*k + 1, 3*k - 2, 3*k - 1, 3*k, 4*k - 2, 0]
        rob = [2*k - 1, 2*k - 1, 2*k, 3*k - 2, 3*k - 2, 3*k - 2, 3*k - 1, 4*k - 4, 0, 0, 0, None]
    elif direction == COUNTERCLOCKWISE:
        times = [None, k - 1, k, 2*k - 2, 2*k - 1, 3*k - 3, 3*k, 4*k - 3, 4*k, 5*k - 1, 5*k]
        cop = [0, -k, -(k + 1), -(2*k - 1), -2*k, -(3*k - 2), -(3*k + 1), -(4*k - 2), 0, -(k - 1), -k]
        rob = [-(2*k - 1), -2*k, -(2*k + 1), -(3*k - 1), -3*k, -(4*k - 2), 0, -(k - 3), -k, -k, None]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return [(t, signed_vertex(k, c), None if r is None else signed_vertex(k, r))
            for t, c, r in zip(times, cop, rob)]


def _step(n: int, v: int, direction: str) -> int:
    return (v + 1) % n if direction == CLOCKWISE else (v - 1) % n


class RunningCop(Strategy):
    """Start at 0 and run around the cycle whenever the next edge is present.

    With ``direction=None`` the side is picked from the robber's start: clockwise
    if the robber is at clockwise distance at most ``(n-1)/2``.
    """

    def __init__(self, direction: Optional[str] = None, start: int = 0):
        self.direction = direction
        self.start = start

    def choose_start(self, g, cop_start):
        return self.start

    def begin(self, g, cop_start, robber_start):
        if self.direction is not None:
            return self.direction
        ahead = (robber_start - cop_start) % g.n
        return CLOCKWISE if ahead <= (g.n - 1) // 2 else COUNTERCLOCKWISE

    def move(self, g, config, direction):
        nxt = _step(g.n, config.cop, direction)
        e = g.edge(config.cop, nxt)
        return (nxt if e.tau.at(config.time) else config.cop), direction


class ScriptedRobber(Strategy):
    """Robber that hits the given ``time -> vertex`` anchors, moving one step in
    ``direction`` only when the remaining distance requires it."""

    def __init__(self, start: int, anchors: dict[int, int], direction: str):
        self.start = start
        self.anchors = sorted(anchors.items())
        self.direction = direction

    def choose_start(self, g, cop_start):
        return self.start

    def move(self, g, config, state):
        t, here = config.time, config.robber
        target = next(((ta, p) for ta, p in self.anchors if ta >= t), None)
        if target is None:
            return here, state
        ta, p = target
        if self.direction == CLOCKWISE:
            dist = (p - here) % g.n
        else:
            dist = (here - p) % g.n
        if dist and dist >= ta - t + 1:
            return _step(g.n, here, self.direction), state
        return here, state


def table1_strategies(k: int, direction: str) -> tuple[RunningCop, ScriptedRobber]:
    rows = table1_rows(k, direction)
    start = rows[0][2]
    anchors: dict[int, int] = {}
    for t, _, r in rows[1:]:
        if r is not None:
            anchors.setdefault(t, r)
    return RunningCop(direction), ScriptedRobber(start, anchors, direction)


def random_cycle(n: int, max_period: int, seed, directed: bool = False,
                 lengths: Optional[Sequence[int]] = None) -> EdgePeriodicGraph:
    """Cycle ``0 -> 1 -> ... -> n-1 -> 0`` with uniform random presence strings.

    String lengths are uniform in ``1..max_period``, or drawn from ``lengths``.
    """
    if n < (2 if directed else 3) or max_period < 1:
        raise ValueError("need n >= 3 (n >= 2 directed) and max_period >= 1")
    if lengths is not None and (not lengths or not all(1 <= x <= max_period for x in lengths)):
        raise ValueError("lengths must be nonempty and within 1..max_period")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n, random_bits(rng, max_period, lengths)) for i in range(n)]
    return EdgePeriodicGraph(n=n, directed=directed, edges=tuple(edges))


def random_bits(rng: random.Random, max_period: int, lengths: Optional[Sequence[int]] = None) -> str:
    length = rng.choice(lengths) if lengths else rng.randint(1, max_period)
    while True:
        bits = "".join(rng.choice("01") for _ in range(length))
        if "1" in bits:
            return bits


def random_graph(n: int, max_period: int, seed, directed: bool = False,
                 density: float = 0.5) -> EdgePeriodicGraph:
    """Random simple graph; each possible edge kept with probability ``density``."""
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v or (not directed and v < u):
                continue
            if rng.random() < density:
                edges.append((u, v, random_bits(rng, max_period)))
    return EdgePeriodicGraph(n=n, directed=directed, edges=tuple(edges))
