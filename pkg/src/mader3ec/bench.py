"""Wall-clock measurements for the linearity check."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .greedy import run_greedy
from .graph import MultiGraph
from .linear import run as run_linear
from .oracle import random_3ec

ALGOS: dict[str, Callable[[MultiGraph], object]] = {"linear": run_linear, "greedy": run_greedy}


@dataclass
class Timing:
    algo: str
    seed: int
    n: int
    m: int
    seconds: float


def time_certify(g: MultiGraph, algo: str = "linear", repeat: int = 2) -> float:
    """Best of ``repeat`` runs with the garbage collector paused."""
    fn = ALGOS[algo]
    best = float("inf")
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn(g)
            best = min(best, time.perf_counter() - t0)
    finally:
        if was_enabled:
            gc.enable()
    return best


def run_bench(sizes: Iterable[int], algos: Sequence[str] = ("linear",), seeds: Sequence[int] = (1,), repeat: int = 2):
    """Yield one :class:`Timing` per (size, seed, algo); sizes are edge counts."""
    for m in sizes:
        for seed in seeds:
            g = random_3ec(2, seed, m_target=m)
            for algo in algos:
                yield Timing(algo, seed, g.n, g.m, time_certify(g, algo, repeat))
            del g


def median_by_size(rows: Iterable[Timing], algo: str = "linear") -> list[tuple[int, float]]:
    """Median seconds per requested size, in the order sizes appear."""
    groups: dict[int, list[Timing]] = {}
    for row in rows:
        if row.algo == algo:
            groups.setdefault(round(row.m, -2), []).append(row)
    return [(m, statistics.median(r.seconds for r in rs)) for m, rs in groups.items()]
