"""Minimum contagious sets by exhaustive subset search.

Used as the correctness oracle for small graphs and as the exact solver
on dense graphs, where the weight bound caps the optimum at a constant
and the search space collapses to polynomially many small subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .bounds import weight_value
from .cascade import ThresholdConfig, simulate
from .graph import Graph

__all__ = ["ExactResult", "SearchSpaceError", "min_contagious_exact", "solve_dense"]

# refuse unbounded enumeration: above this many candidate subsets the caller
# must pass allow_large=True
SUBSET_BUDGET = 10**8


class SearchSpaceError(ValueError):
    """Enumeration would exceed the subset budget and was not overridden."""


@dataclass(frozen=True)
class ExactResult:
    """Outcome of the exhaustive search.

    optimum_set is None when no contagious set of size <= cap exists
    (cap_exceeded); otherwise it is the first hit in the deterministic
    enumeration order and no strictly smaller contagious set exists.
    """

    optimum_set: list[int] | None
    optimum_size: int | None
    cap: int
    subsets_tested: int

    @property
    def cap_exceeded(self) -> bool:
        return self.optimum_set is None


def _search_space_size(free: int, forced: int, cap: int) -> int:
    return sum(math.comb(free, s - forced) for s in range(forced, cap + 1))


def min_contagious_exact(
    g: Graph, cfg: ThresholdConfig, cap: int, allow_large: bool = False
) -> ExactResult:
    """Smallest contagious set of size <= cap, by enumeration in size order.

    Vertices of degree below k can never be activated by neighbors, so
    they are forced into every candidate and the search enumerates only
    the remainder (lexicographically within each size). Each candidate
    costs one cascade simulation.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    forced = [v for v in range(g.n) if g.degree(v) < cfg.k]
    others = [v for v in range(g.n) if g.degree(v) >= cfg.k]
    tested = 0
    if len(forced) > cap:
        return ExactResult(None, None, cap, tested)
    space = _search_space_size(len(others), len(forced), cap)
    if space > SUBSET_BUDGET and not allow_large:
        raise SearchSpaceError(
            f"{space} candidate subsets exceed the budget of {SUBSET_BUDGET}; "
            "pass allow_large=True to search anyway"
        )
    for size in range(len(forced), cap + 1):
        for extra in combinations(others, size - len(forced)):
            candidate = sorted(forced + list(extra))
            tested += 1
            if simulate(g, cfg, candidate).fully_activated:
                return ExactResult(candidate, size, cap, tested)
    return ExactResult(None, None, cap, tested)


def solve_dense(g: Graph, cfg: ThresholdConfig, allow_large: bool = False) -> ExactResult:
    """Exact optimum with cap = floor(w(G)).

    A contagious set of that size always exists (the peeling algorithm
    produces one), so the search never comes back cap-exceeded; on dense
    graphs the cap is a small constant and the run is polynomial.
    """
    cap = math.floor(weight_value(g, cfg))
    result = min_contagious_exact(g, cfg, cap, allow_large=allow_large)
    assert not result.cap_exceeded, "weight-capped search must succeed"
    return result
