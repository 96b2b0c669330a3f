"""Game semantics for one cop and one robber on an edge-periodic graph.

Within round ``t`` the cop moves first, then the robber, both over edges
of the snapshot at ``t``; the robber's move advances the clock.  Positions
coinciding after either move is a capture.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Callable, NamedTuple, Optional

from .graph import EdgePeriodicGraph


class Turn(enum.IntEnum):
    COP = 0
    ROBBER = 1


class Configuration(NamedTuple):
    cop: int
    robber: int
    turn: Turn
    time: int

    @property
    def captured(self) -> bool:
        return self.cop == self.robber


def neighbors(g: EdgePeriodicGraph, v: int, t: int) -> list[int]:
    """Vertices reachable from ``v`` in one move at time ``t``, pass included."""
    out = {v}
    for w, e in g.out_edges(v):
        if e.tau.at(t):
            out.add(w)
    return sorted(out)


def successors(g: EdgePeriodicGraph, c: Configuration) -> set[Configuration]:
    L = g.lcm
    if c.turn == Turn.COP:
        return {Configuration(w, c.robber, Turn.ROBBER, c.time)
                for w in neighbors(g, c.cop, c.time)}
    nxt = (c.time + 1) % L
    return {Configuration(c.cop, w, Turn.COP, nxt)
            for w in neighbors(g, c.robber, c.time)}


class IllegalMoveError(RuntimeError):
    def __init__(self, round_index: int, mover: str, src: int, dst: int):
        super().__init__(f"round {round_index}: {mover} cannot move {src} -> {dst}")
        self.round_index = round_index
        self.mover = mover


class Strategy:
    """Base class for players.

    ``choose_start`` gets the cop's start vertex when called for the robber
    (``None`` for the cop).  ``begin`` returns the initial opaque state and
    ``move`` maps ``(config, state)`` to ``(vertex, new_state)``; the
    configuration's ``time`` is the absolute round index.
    """

    def choose_start(self, g: EdgePeriodicGraph, cop_start: Optional[int]) -> int:
        raise NotImplementedError(f"{type(self).__name__} has no start rule")

    def begin(self, g: EdgePeriodicGraph, cop_start: int, robber_start: int) -> Any:
        return None

    def move(self, g: EdgePeriodicGraph, config: Configuration, state: Any) -> tuple[int, Any]:
        raise NotImplementedError


class Stay(Strategy):
    def __init__(self, start: int = 0):
        self.start = start

    def choose_start(self, g, cop_start):
        return self.start

    def move(self, g, config, state):
        pos = config.cop if config.turn == Turn.COP else config.robber
        return pos, state


class Positional(Strategy):
    """Wrap ``fn(g, config) -> vertex`` as a memoryless strategy."""

    def __init__(self, fn: Callable[[EdgePeriodicGraph, Configuration], int],
                 start: Callable[[EdgePeriodicGraph, Optional[int]], int] | int = 0):
        self.fn = fn
        self.start = start

    def choose_start(self, g, cop_start):
        return self.start(g, cop_start) if callable(self.start) else self.start

    def move(self, g, config, state):
        return self.fn(g, config), state


@dataclass(frozen=True)
class Round:
    t: int
    cop: int
    robber: Optional[int]  # None marks capture

    @property
    def captured(self) -> bool:
        return self.robber is None


@dataclass
class Trace:
    starts: tuple[int, int]
    rounds: list[Round] = field(default_factory=list)

    @property
    def captured(self) -> bool:
        if self.starts[0] == self.starts[1]:
            return True
        return bool(self.rounds) and self.rounds[-1].captured

    @property
    def capture_round(self) -> Optional[int]:
        if self.starts[0] == self.starts[1]:
            return -1
        if self.rounds and self.rounds[-1].captured:
            return self.rounds[-1].t
        return None

    def position(self, t: int) -> tuple[int, Optional[int]]:
        r = self.rounds[t]
        assert r.t == t
        return r.cop, r.robber

    def to_text(self) -> str:
        lines = [f"# start cop={self.starts[0]} robber={self.starts[1]}"]
        for r in self.rounds:
            rob = "CAPTURED" if r.robber is None else r.robber
            lines.append(f"t={r.t} cop={r.cop} robber={rob}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "starts": {"cop": self.starts[0], "robber": self.starts[1]},
            "rounds": [{"t": r.t, "cop": r.cop,
                        "robber": "CAPTURED" if r.robber is None else r.robber}
                       for r in self.rounds],
            "captured": self.captured,
            "capture_round": self.capture_round,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def simulate(g: EdgePeriodicGraph, cop: Strategy, robber: Strategy, horizon: int, *,
             cop_start: Optional[int] = None, robber_start: Optional[int] = None) -> Trace:
    """Play rounds ``0..horizon-1`` or until capture.

    Explicit start vertices override the strategies' own start rules.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    c = cop.choose_start(g, None) if cop_start is None else cop_start
    r = robber.choose_start(g, c) if robber_start is None else robber_start
    for who, v in (("cop", c), ("robber", r)):
        if not 0 <= v < g.n:
            raise IllegalMoveError(-1, who, v, v)
    trace = Trace(starts=(c, r))
    if c == r:
        return trace
    cop_state = cop.begin(g, c, r)
    rob_state = robber.begin(g, c, r)
    for t in range(horizon):
        nc, cop_state = cop.move(g, Configuration(c, r, Turn.COP, t), cop_state)
        if nc not in neighbors(g, c, t):
            raise IllegalMoveError(t, "cop", c, nc)
        c = nc
        if c == r:
            trace.rounds.append(Round(t, c, None))
            return trace
        nr, rob_state = robber.move(g, Configuration(c, r, Turn.ROBBER, t), rob_state)
        if nr not in neighbors(g, r, t):
            raise IllegalMoveError(t, "robber", r, nr)
        r = nr
        if c == r:
            trace.rounds.append(Round(t, c, None))
            return trace
        trace.rounds.append(Round(t, c, r))
    return trace
