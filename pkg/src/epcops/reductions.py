"""Reductions from PCA to the cop game on undirected and directed cycles.

Undirected layout: ``l_j -> j`` and ``r_j -> m+1+j`` for ``0 <= j <= m``.
Directed layout: ``v_j -> j`` and ``s -> m+1``.
"""
from __future__ import annotations

from .graph import EdgePeriodicGraph
from .pca import PcaInstance, _instance


def _concat(symbols: str, block) -> str:
    return "".join(block(c) for c in symbols)


def undirected_period(m: int) -> int:
    return 2 * m + 3


def directed_period(m: int) -> int:
    return 2 * m + 2


def reduce_pca_to_undirected_cycle(x) -> EdgePeriodicGraph:
    x = _instance(x)
    m = len(x)

    def xi(c: str) -> str:
        return "1" * m + "00" + c * m + "1"

    def left(j):
        return j

    def right(j):
        return m + 1 + j

    edges = [
        (left(0), right(m), "0" * m + "01" + "0" * m + "1"),
        (left(m), right(0), "0" * m + "10" + "0" * m + "1"),
    ]
    for j, s in enumerate(x.strings, 1):
        tau = _concat(s.bits, xi)
        edges.append((left(j - 1), left(j), tau))
        edges.append((right(j - 1), right(j), tau))
    return EdgePeriodicGraph(n=2 * m + 2, directed=False, edges=tuple(edges))


def reduce_pca_to_directed_cycle(x) -> EdgePeriodicGraph:
    x = _instance(x)
    m = len(x)
    s = m + 1

    def xi(c: str) -> str:
        return c * m + "0" + "1" * (m + 1)

    edges = [
        (m, s, "0" * m + "1" + "0" * (m + 1)),
        (s, 0, "0" * (2 * m + 1) + "1"),
    ]
    for j, string in enumerate(x.strings, 1):
        edges.append((j - 1, j, _concat(string.bits, xi)))
    return EdgePeriodicGraph(n=m + 2, directed=True, edges=tuple(edges))


def reduction_header(x: PcaInstance, target: str) -> list[str]:
    x = _instance(x)
    m = len(x)
    q = undirected_period(m) if target == "undirected-cycle" else directed_period(m)
    return [f"reduction from PCA to {target}",
            "X = " + " ".join(str(s) for s in x.strings),
            f"q = {q}"]
