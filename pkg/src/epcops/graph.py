"""Edge-periodic graphs: data model, instance format, and temporal evaluation.

An edge ``e`` carrying presence string ``tau`` exists at time ``t`` iff
``tau[t mod len(tau)] == '1'``.  Vertices are dense ids ``0..n-1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Iterator

import numpy as np


class GraphError(ValueError):
    """Invalid graph structure."""


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


@dataclass(frozen=True)
class PeriodString:
    """A nonempty bitstring indexed modulo its length."""

    bits: str

    def __post_init__(self):
        if not isinstance(self.bits, str):
            object.__setattr__(self, "bits", "".join(str(int(b)) for b in self.bits))
        if not self.bits:
            raise ValueError("period string must be nonempty")
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"period string must be over {{0,1}}: {self.bits!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def at(self, t: int) -> bool:
        return self.bits[t % len(self.bits)] == "1"

    def has_one(self) -> bool:
        return "1" in self.bits

    def unroll(self, length: int) -> np.ndarray:
        """Boolean presence vector for times ``0..length-1``."""
        base = np.frombuffer(self.bits.encode(), dtype=np.uint8) == ord("1")
        return np.resize(base, length)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    tau: PeriodString

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class PeriodProfile:
    periods: tuple[int, ...]
    lcm: int
    max_period: int
    ell: int


def _as_tau(tau) -> PeriodString:
    return tau if isinstance(tau, PeriodString) else PeriodString(tau)


@dataclass(frozen=True)
class EdgePeriodicGraph:
    """Immutable edge-periodic graph.

    Undirected edges are stored with ``u < v``; edges are kept sorted by
    ``(u, v)`` so equal graphs compare and serialize identically.
    """

    n: int
    directed: bool
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        normalized = []
        seen = set()
        for e in self.edges:
            if not isinstance(e, Edge):
                u, v, tau = e
                e = Edge(int(u), int(v), _as_tau(tau))
            u, v = e.u, e.v
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}): vertex id out of range 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge ({u},{v}): self-loops are not allowed")
            if not e.tau.has_one():
                raise GraphError(f"edge ({u},{v}): all-zero presence string {e.tau}")
            if not self.directed and u > v:
                e = Edge(v, u, e.tau)
            if e.pair in seen:
                raise GraphError(f"edge ({u},{v}): duplicate edge")
            seen.add(e.pair)
            normalized.append(e)
        normalized.sort(key=lambda e: e.pair)
        object.__setattr__(self, "edges", tuple(normalized))

    @cached_property
    def profile(self) -> PeriodProfile:
        return period_profile(self)

    @property
    def lcm(self) -> int:
        return self.profile.lcm

    def edge(self, u: int, v: int) -> Edge:
        if not self.directed and u > v:
            u, v = v, u
        for e in self.edges:
            if e.pair == (u, v):
                return e
        raise KeyError((u, v))

    def out_edges(self, u: int) -> Iterator[tuple[int, Edge]]:
        """Yield ``(neighbor, edge)`` pairs usable when leaving ``u``."""
        for e in self.edges:
            if e.u == u:
                yield e.v, e
            elif not self.directed and e.v == u:
                yield e.u, e

    def adjacency(self, t: int) -> np.ndarray:
        """Move matrix at time ``t``: ``A[a, b]`` iff a player on ``a`` may end on ``b``.

        The diagonal is set (passing is always legal).
        """
        a = np.eye(self.n, dtype=bool)
        for e in self.edges:
            if e.tau.at(t):
                a[e.u, e.v] = True
                if not self.directed:
                    a[e.v, e.u] = True
        return a

    def adjacency_table(self) -> np.ndarray:
        """Stack of move matrices for ``t = 0..lcm-1``, shape ``(lcm, n, n)``."""
        L = self.lcm
        table = np.zeros((L, self.n, self.n), dtype=bool)
        idx = np.arange(self.n)
        table[:, idx, idx] = True
        for e in self.edges:
            present = e.tau.unroll(L)
            table[:, e.u, e.v] |= present
            if not self.directed:
                table[:, e.v, e.u] |= present
        return table


def edge_present(g: EdgePeriodicGraph, e: Edge | tuple[int, int], t: int) -> bool:
    if not isinstance(e, Edge):
        e = g.edge(*e)
    return e.tau.at(t)


def snapshot(g: EdgePeriodicGraph, t: int) -> list[tuple[int, int]]:
    """Edges present at time ``t``, as ``(u, v)`` pairs in canonical order."""
    return [e.pair for e in g.edges if e.tau.at(t)]


def period_profile(g: EdgePeriodicGraph) -> PeriodProfile:
    periods = tuple(len(e.tau) for e in g.edges)
    lcm = reduce(math.lcm, set(periods), 1)
    max_period = max(periods, default=1)
    ell = 1 if lcm >= 2 * max_period else 2
    return PeriodProfile(periods=periods, lcm=lcm, max_period=max_period, ell=ell)


def is_cycle(g: EdgePeriodicGraph) -> bool:
    """True if the underlying graph is a single (directed or undirected) cycle."""
    n = g.n
    if len(g.edges) != n or n < (2 if g.directed else 3):
        return False
    succ: dict[int, list[int]] = {v: [] for v in range(n)}
    for e in g.edges:
        succ[e.u].append(e.v)
        if not g.directed:
            succ[e.v].append(e.u)
    want = 1 if g.directed else 2
    if any(len(s) != want for s in succ.values()):
        return False
    # walk once around
    prev, cur, steps = None, 0, 0
    while True:
        nxt = succ[cur][0] if g.directed or succ[cur][0] != prev else succ[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == 0:
            return steps == n
        if steps > n:
            return False


def cycle_successor(g: EdgePeriodicGraph) -> list[int]:
    """For a directed cycle, the out-neighbor of every vertex."""
    if not g.directed or not is_cycle(g):
        raise GraphError("expected a directed cycle")
    nxt = [0] * g.n
    for e in g.edges:
        nxt[e.u] = e.v
    return nxt


# --- instance format -------------------------------------------------------

def _tokens(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph(text: str | bytes) -> EdgePeriodicGraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    directed = n = None
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, toks in _tokens(text):
        last_line = lineno
        head = toks[0]
        if directed is None:
            if head != "graph" or len(toks) != 2 or toks[1] not in ("directed", "undirected"):
                raise ParseError(lineno, "expected 'graph directed' or 'graph undirected'")
            directed = toks[1] == "directed"
        elif n is None:
            if head != "vertices" or len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise ParseError(lineno, "expected 'vertices <n>' with n >= 1")
            n = int(toks[1])
        elif head == "edge":
            if len(toks) != 4:
                raise ParseError(lineno, "expected 'edge <u> <v> <bitstring>'")
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError(lineno, "vertex ids must be integers") from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
            if u == v:
                raise ParseError(lineno, "self-loops are not allowed")
            try:
                tau = PeriodString(toks[3])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if not tau.has_one():
                raise ParseError(lineno, f"all-zero presence string {tau}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"duplicate edge {key}")
            seen.add(key)
            edges.append(Edge(u, v, tau))
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    if directed is None or n is None:
        raise ParseError(last_line + 1, "missing 'graph' or 'vertices' header")
    return EdgePeriodicGraph(n=n, directed=directed, edges=tuple(edges))


def serialize_graph(g: EdgePeriodicGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("graph directed" if g.directed else "graph undirected")
    lines.append(f"vertices {g.n}")
    lines.extend(f"edge {e.u} {e.v} {e.tau}" for e in g.edges)
    return "\n".join(lines) + "\n"
