"""The degree-sequence weight bound and its single-deletion delta.

w(G) = sum over vertices of min{1, k/(d(v)+1)}, evaluated in exact
rational arithmetic. A greedy run asserts non-increase of this quantity
across thousands of deletions, so floating point is deliberately kept out
of the bound itself; reports render a decimal alongside the fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cascade import ThresholdConfig
from .graph import Graph

__all__ = ["WeightReport", "vertex_term", "weight", "weight_value", "delta_weight"]


def vertex_term(k: int, degree: int) -> Fraction:
    """min{1, k/(degree+1)} as an exact rational."""
    return min(Fraction(1), Fraction(k, degree + 1))


@dataclass(frozen=True)
class WeightReport:
    """w(G) together with its per-vertex terms (all exact rationals)."""

    w: Fraction
    per_vertex: list[Fraction]

    @property
    def floor(self) -> int:
        return math.floor(self.w)


def weight_value(g: Graph, cfg: ThresholdConfig) -> Fraction:
    """w(G) alone, summed per distinct degree so large graphs stay cheap."""
    if g.n == 0:
        return Fraction(0)
    hist = np.bincount(g.degrees)
    total = Fraction(0)
    for d, count in enumerate(hist.tolist()):
        if count:
            total += count * vertex_term(cfg.k, d)
    return total


def weight(g: Graph, cfg: ThresholdConfig) -> WeightReport:
    terms_by_degree = {int(d): vertex_term(cfg.k, int(d)) for d in np.unique(g.degrees)}
    per_vertex = [terms_by_degree[int(d)] for d in g.degrees]
    return WeightReport(w=weight_value(g, cfg), per_vertex=per_vertex)


def delta_weight(g: Graph, cfg: ThresholdConfig, u: int) -> Fraction:
    """w(G minus u) - w(G), computed from u's term and its neighbors' terms.

    A neighbor of degree d drops to d-1, so its term moves from
    min{1, k/(d+1)} to min{1, k/d}; neighbors of degree <= k-1 are capped
    at 1 on both sides and contribute nothing.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} outside 0..{g.n - 1}")
    k = cfg.k
    delta = -vertex_term(k, g.degree(u))
    for nb in g.neighbors(u).tolist():
        dn = int(g.degrees[nb])
        if dn >= k:
            delta += Fraction(k, dn) - Fraction(k, dn + 1)
    return delta
