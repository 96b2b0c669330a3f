"""Periodic Character Alignment: find ``i`` with ``x[i mod |x|] == 1`` for all ``x``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

import numpy as np

from .graph import ParseError, PeriodString
from .solver import BudgetExceeded

DEFAULT_PCA_BUDGET = 2**26


@dataclass(frozen=True)
class PcaInstance:
    strings: tuple[PeriodString, ...]

    def __init__(self, strings: Iterable):
        strings = tuple(s if isinstance(s, PeriodString) else PeriodString(s) for s in strings)
        if not strings:
            raise ValueError("PCA instance needs at least one string")
        object.__setattr__(self, "strings", strings)

    def __len__(self) -> int:
        return len(self.strings)

    @property
    def lcm(self) -> int:
        return reduce(math.lcm, (len(s) for s in self.strings), 1)


def _instance(x) -> PcaInstance:
    return x if isinstance(x, PcaInstance) else PcaInstance(x)


def pca_solve(x, budget: int = DEFAULT_PCA_BUDGET) -> Optional[int]:
    """Smallest aligned position in ``[0, lcm)``, or ``None``."""
    x = _instance(x)
    L = x.lcm
    if L > budget:
        raise BudgetExceeded("lcm of string lengths", L, budget)
    aligned = np.ones(L, dtype=bool)
    for s in x.strings:
        aligned &= s.unroll(L)
    hits = np.flatnonzero(aligned)
    return int(hits[0]) if hits.size else None


def parse_pca(text: str | bytes) -> PcaInstance:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    strings = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            strings.append(PeriodString(line))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
    return PcaInstance(strings)


def serialize_pca(x: PcaInstance) -> str:
    return "".join(f"{s}\n" for s in x.strings)
