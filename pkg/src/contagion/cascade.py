"""k-threshold activation cascades.

An inactive vertex activates once at least k of its neighbors are active;
active vertices stay active. simulate() propagates round by round: each
round's newly activated vertices push one counter increment to each
neighbor, so the total work is O(n + m) regardless of how many rounds the
process takes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Graph, csr_gather

__all__ = [
    "ThresholdConfig",
    "CascadeResult",
    "simulate",
    "is_contagious",
    "parse_seed_set",
]


@dataclass(frozen=True)
class ThresholdConfig:
    """Uniform activation threshold k >= 1."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"threshold k must be >= 1, got {self.k}")


@dataclass(frozen=True)
class CascadeResult:
    """Outcome of one cascade.

    rounds[v] is the synchronous round in which v activated (0 for seeds,
    -1 if it never activates). order lists vertices in activation order,
    round by round, ascending id within a round.
    """

    rounds: np.ndarray
    order: np.ndarray
    fully_activated: bool
    activated_count: int

    def activated(self) -> np.ndarray:
        return np.flatnonzero(self.rounds >= 0)


def _as_seed_array(g: Graph, seeds: Iterable[int]) -> np.ndarray:
    arr = np.unique(np.fromiter((int(s) for s in seeds), dtype=np.int64))
    if arr.size and (arr[0] < 0 or arr[-1] >= g.n):
        bad = arr[0] if arr[0] < 0 else arr[-1]
        raise ValueError(f"seed id {bad} outside 0..{g.n - 1}")
    return arr


def simulate(g: Graph, cfg: ThresholdConfig, seeds: Iterable[int]) -> CascadeResult:
    """Run the cascade from the given seed set to its fixed point.

    Rounds follow synchronous semantics: a vertex's round is one more
    than the k-th smallest round among its activated neighbors.
    """
    seed_arr = _as_seed_array(g, seeds)
    n = g.n
    rounds = np.full(n, -1, dtype=np.int64)
    active = np.zeros(n, dtype=bool)
    counts = np.zeros(n, dtype=np.int64)
    order_parts = [seed_arr]
    rounds[seed_arr] = 0
    active[seed_arr] = True

    frontier = seed_arr
    r = 0
    while frontier.size:
        neigh = csr_gather(g.indptr, g.indices, frontier)
        if neigh.size == 0:
            break
        np.add.at(counts, neigh, 1)
        cand = np.unique(neigh)
        cand = cand[~active[cand]]
        newly = cand[counts[cand] >= cfg.k]
        if newly.size == 0:
            break
        r += 1
        active[newly] = True
        rounds[newly] = r
        order_parts.append(newly)
        frontier = newly

    order = np.concatenate(order_parts) if order_parts else np.zeros(0, dtype=np.int64)
    activated_count = int(active.sum())
    return CascadeResult(
        rounds=rounds,
        order=order,
        fully_activated=activated_count == n,
        activated_count=activated_count,
    )


def is_contagious(g: Graph, cfg: ThresholdConfig, s: Iterable[int]) -> bool:
    """True iff activating s activates the whole graph (vacuously true for n=0)."""
    return simulate(g, cfg, s).fully_activated


def parse_seed_set(text: str) -> list[int]:
    """Seed file format: one vertex id per line, '#' comments, blanks skipped."""
    seeds: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise ValueError(f"seed file line {line_no}: not an integer: {raw!r}") from None
        if v < 0:
            raise ValueError(f"seed file line {line_no}: negative vertex id {v}")
        seeds.append(v)
    return seeds
