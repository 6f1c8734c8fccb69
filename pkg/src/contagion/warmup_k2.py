"""Probabilistic seed constructions for threshold 2.

Two schemes on a graph of minimum degree d. The baseline activates each
vertex with p = ln(d+1)/(d+1) and patches every vertex left with fewer
than two chosen neighbors, yielding a 2-dominating set of expected size
O(n ln d / d). The iterated scheme activates with the cheaper p = 1/d,
lets the threshold-2 process spread inside the current residual, and
recurses on whatever stayed uninfected; the geometric decay of the
residual brings the total down to O(n/d).

Both return only sets that re-verified as contagious for k=2. Size
guarantees are expectation-level, so a run that verifies badly restarts
with a fresh derived seed and, as a last resort, patches uncovered
vertices in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import weight_value
from .cascade import ThresholdConfig, simulate
from .graph import Graph, induced_subgraph
from .reports import ContagiousSetReport
from .rng import derive_seed, make_rng

__all__ = [
    "WarmupParams",
    "WarmupRound",
    "random_2dom_baseline",
    "iterated_random_k2",
]

_K2 = ThresholdConfig(2)


@dataclass(frozen=True)
class WarmupParams:
    """Controls for the iterated scheme.

    cutoff: stop recursing once the residual minimum degree falls below
    this (the leftover residual is seeded wholesale). max_rounds defaults
    to 10 ln n. max_restarts bounds reruns after a failed verification.
    """

    seed: int
    cutoff: int = 3
    max_rounds: int | None = None
    max_restarts: int = 20

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be >= 1, got {self.cutoff}")

    def rounds_limit(self, n: int) -> int:
        if self.max_rounds is not None:
            return self.max_rounds
        return max(1, math.ceil(10 * math.log(max(n, 2))))


@dataclass(frozen=True)
class WarmupRound:
    """State of one recursion round (diagnostic record)."""

    index: int
    residual: np.ndarray
    residual_min_degree: int
    chosen: np.ndarray
    p: float

    def summary(self) -> dict:
        return {
            "round": self.index,
            "residual_size": int(self.residual.size),
            "residual_min_degree": self.residual_min_degree,
            "p": self.p,
            "chosen": int(self.chosen.size),
        }


def random_2dom_baseline(g: Graph, seed: int) -> ContagiousSetReport:
    """Random 2-dominating set: Bernoulli(ln(d+1)/(d+1)) sampling plus patch-up.

    Every vertex outside the output has at least two chosen neighbors, so
    the output is 2-dominating and therefore contagious for k=2.
    """
    d = g.min_degree()
    if d < 2:
        raise ValueError(
            f"baseline needs minimum degree >= 2 (got {d}); use the greedy peel instead"
        )
    p = math.log(d + 1) / (d + 1)
    rng = make_rng(seed)
    chosen = rng.random(g.n) < p
    owner = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    chosen_nbrs = np.bincount(owner, weights=chosen[g.indices], minlength=g.n)
    patched = ~chosen & (chosen_nbrs < 2)
    out = np.flatnonzero(chosen | patched)
    result = simulate(g, _K2, out)
    if not result.fully_activated:
        raise RuntimeError("2-dominating set failed to verify; graph state is corrupt")
    return ContagiousSetReport(
        set=out.tolist(),
        size=int(out.size),
        w=weight_value(g, _K2),
        algorithm="k2base",
        certificate={
            "seed": seed,
            "p": p,
            "sampled": int(chosen.sum()),
            "patched": int(patched.sum()),
        },
        verified=True,
    )


def _run_rounds(
    g: Graph, params: WarmupParams, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray, list[WarmupRound]]:
    """One pass of the recursion; returns (chosen set, final residual, rounds).

    Each round seeds Bernoulli(1/d_r) inside the current residual and runs
    the threshold-2 process on the residual's induced subgraph; the next
    residual is whatever that process left uninfected.
    """
    n = g.n
    owner = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    residual = np.ones(n, dtype=bool)
    chosen_all = np.zeros(n, dtype=bool)
    rounds: list[WarmupRound] = []
    limit = params.rounds_limit(n)
    for index in range(1, limit + 1):
        res_verts = np.flatnonzero(residual)
        if res_verts.size == 0:
            break
        res_deg = np.bincount(owner, weights=residual[g.indices], minlength=n)
        d_r = int(res_deg[res_verts].min())
        if d_r < params.cutoff:
            break
        p = 1.0 / d_r
        pick = residual & (rng.random(n) < p)
        rounds.append(
            WarmupRound(
                index=index,
                residual=res_verts,
                residual_min_degree=d_r,
                chosen=np.flatnonzero(pick),
                p=p,
            )
        )
        chosen_all |= pick
        sub = induced_subgraph(g, res_verts)
        pick_local = np.flatnonzero(pick[res_verts])
        infected = simulate(sub, _K2, pick_local)
        residual = np.zeros(n, dtype=bool)
        residual[res_verts[infected.rounds < 0]] = True
    return np.flatnonzero(chosen_all), np.flatnonzero(residual), rounds


def iterated_random_k2(g: Graph, params: WarmupParams) -> ContagiousSetReport:
    """Iterated p = 1/d sampling on the shrinking residual, for k=2.

    Each round samples within the current residual's induced subgraph;
    uncovered unchosen vertices carry to the next round. The final
    residual (empty, low-degree, or round-capped) is seeded wholesale.
    Verification failures restart with derived seeds; if every restart
    fails, unactivated vertices are patched in until the cascade covers
    the graph.
    """
    if g.n == 0:
        return ContagiousSetReport(
            set=[],
            size=0,
            w=weight_value(g, _K2),
            algorithm="k2iter",
            certificate={"seed": params.seed, "attempt": 0, "rounds": [], "patched": 0},
            verified=True,
        )
    last_seed_set: np.ndarray | None = None
    last_cert: dict = {}
    for attempt in range(params.max_restarts + 1):
        rng = make_rng(derive_seed(params.seed, attempt))
        chosen, final_residual, rounds = _run_rounds(g, params, rng)
        seed_set = np.union1d(chosen, final_residual)
        last_seed_set = seed_set
        last_cert = {
            "seed": params.seed,
            "attempt": attempt,
            "rounds": [r.summary() for r in rounds],
            "final_residual_size": int(final_residual.size),
            "patched": 0,
        }
        if simulate(g, _K2, seed_set).fully_activated:
            return ContagiousSetReport(
                set=seed_set.tolist(),
                size=int(seed_set.size),
                w=weight_value(g, _K2),
                algorithm="k2iter",
                certificate=last_cert,
                verified=True,
            )
    # all restarts failed: force validity by seeding unactivated vertices
    assert last_seed_set is not None
    members = set(last_seed_set.tolist())
    patched = 0
    while True:
        result = simulate(g, _K2, members)
        if result.fully_activated:
            break
        inactive = np.flatnonzero(result.rounds < 0)
        members.add(int(inactive[0]))
        patched += 1
    last_cert["patched"] = patched
    out = sorted(members)
    return ContagiousSetReport(
        set=out,
        size=len(out),
        w=weight_value(g, _K2),
        algorithm="k2iter",
        certificate=last_cert,
        verified=True,
    )
