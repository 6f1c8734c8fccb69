"""Contagious sets from a uniform random vertex permutation.

Draw a permutation of the vertices and keep every vertex that ranks
among the first k of its own closed neighborhood. The kept set L is
always contagious (walk the permutation left to right: any discarded
vertex has k neighbors before it, active by induction) and induces a
k-degenerate subgraph. Each vertex lands in L with probability
min{1, k/(d(v)+1)}, so E|L| equals the weight bound exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import vertex_term, weight_value
from .cascade import ThresholdConfig, is_contagious
from .graph import Graph
from .reports import ContagiousSetReport
from .rng import derive_seed, make_rng

__all__ = [
    "PermutationSample",
    "sample_L",
    "membership_probability",
    "estimate_expected_L_size",
    "randomized_contagious",
]


@dataclass(frozen=True)
class PermutationSample:
    """One permutation draw and the derived kept set.

    rank[v] is v's position in the permutation (a bijection onto
    0..n-1); closed_rank[v] = 1 + number of neighbors ranked before v;
    L holds exactly the vertices with closed_rank <= k, ascending.
    """

    seed: int
    rank: np.ndarray
    closed_rank: np.ndarray
    L: np.ndarray


def sample_L(g: Graph, cfg: ThresholdConfig, seed: int) -> PermutationSample:
    """Draw one uniform permutation and compute L in O(n + m)."""
    rng = make_rng(seed)
    rank = np.zeros(g.n, dtype=np.int64)
    rank[rng.permutation(g.n)] = np.arange(g.n, dtype=np.int64)
    owner = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    earlier = np.zeros(g.n, dtype=np.int64)
    if g.m:
        np.add.at(earlier, owner, rank[g.indices] < rank[owner])
    closed_rank = earlier + 1
    L = np.flatnonzero(closed_rank <= cfg.k)
    return PermutationSample(seed=seed, rank=rank, closed_rank=closed_rank, L=L)


def membership_probability(g: Graph, cfg: ThresholdConfig, v: int) -> Fraction:
    """Exact probability that v lands in L: min{1, k/(d(v)+1)}."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return vertex_term(cfg.k, g.degree(v))


def estimate_expected_L_size(
    g: Graph, cfg: ThresholdConfig, samples: int, seed: int
) -> tuple[float, float]:
    """Monte-Carlo (mean, standard error) of |L| over independent draws.

    Trial t uses the derived seed derive_seed(seed, t), so any single
    trial can be replayed on its own.
    """
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    sizes = np.fromiter(
        (sample_L(g, cfg, derive_seed(seed, t)).L.size for t in range(samples)),
        dtype=np.int64,
        count=samples,
    )
    mean = float(sizes.mean())
    stderr = float(sizes.std(ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return mean, stderr


def randomized_contagious(
    g: Graph, cfg: ThresholdConfig, seed: int, max_trials: int = 1000
) -> ContagiousSetReport:
    """Sample permutations until some |L| <= floor(w(G)).

    The expectation argument guarantees such a draw exists but bounds no
    trial count, so after max_trials the smallest L seen is returned
    instead (flagged accepted=False). Either way the returned set is
    re-verified by simulation.
    """
    if max_trials < 1:
        raise ValueError(f"need max_trials >= 1, got {max_trials}")
    w = weight_value(g, cfg)
    target = math.floor(w)
    best: PermutationSample | None = None
    best_trial = -1
    accepted = False
    trials_run = 0
    for t in range(1, max_trials + 1):
        trials_run = t
        sample = sample_L(g, cfg, derive_seed(seed, t))
        if best is None or sample.L.size < best.L.size:
            best, best_trial = sample, t
        if sample.L.size <= target:
            accepted = True
            break
    assert best is not None
    chosen = best.L.tolist()
    verified = is_contagious(g, cfg, chosen)
    if not verified:
        raise RuntimeError("permutation construction produced a non-contagious set")
    return ContagiousSetReport(
        set=chosen,
        size=len(chosen),
        w=w,
        algorithm="random",
        certificate={
            "seed": seed,
            "trial": best_trial,
            "trial_seed": derive_seed(seed, best_trial),
            "trials_run": trials_run,
            "accepted": accepted,
        },
        verified=True,
    )
