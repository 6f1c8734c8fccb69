"""Shared test oracles and graph strategies.

The oracles here are deliberately naive re-derivations of the quantities
under test (set-based synchronous cascade, direct definition of the
weight sum, full-subset enumeration, all-induced-subgraphs degeneracy),
kept independent of the library's implementations.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from contagion import Graph, build_graph, gen_gnp


# ---------------------------------------------------------------------------
# naive cascade (synchronous, set-based)


def naive_cascade(adj: list[list[int]], k: int, seeds) -> dict[int, int]:
    """Reference cascade: returns {vertex: round} for activated vertices."""
    rounds = {v: 0 for v in seeds}
    active = set(seeds)
    r = 0
    while True:
        r += 1
        newly = [
            v
            for v in range(len(adj))
            if v not in active and sum(1 for u in adj[v] if u in active) >= k
        ]
        if not newly:
            return rounds
        for v in newly:
            rounds[v] = r
            active.add(v)


def naive_is_contagious(adj: list[list[int]], k: int, seeds) -> bool:
    return len(naive_cascade(adj, k, seeds)) == len(adj)


def worklist_cascade(adj: list[list[int]], k: int, seeds, order_rng: random.Random) -> set[int]:
    """Asynchronous worklist with shuffled processing order; same fixed point."""
    counts = [0] * len(adj)
    active = set(seeds)
    pending = list(seeds)
    while pending:
        order_rng.shuffle(pending)
        v = pending.pop()
        for u in adj[v]:
            if u not in active:
                counts[u] += 1
                if counts[u] >= k:
                    active.add(u)
                    pending.append(u)
    return active


# ---------------------------------------------------------------------------
# naive weight / exact optimum / degeneracy


def naive_weight(degrees, k: int) -> Fraction:
    return sum((min(Fraction(1), Fraction(k, d + 1)) for d in degrees), Fraction(0))


def naive_min_contagious(adj: list[list[int]], k: int):
    """Smallest contagious set by full enumeration (first hit in size/lex order)."""
    n = len(adj)
    for size in range(n + 1):
        for cand in combinations(range(n), size):
            if naive_is_contagious(adj, k, cand):
                return list(cand)
    raise AssertionError("the full vertex set is always contagious")


def naive_is_k_degenerate(adj: list[list[int]], k: int) -> bool:
    """Definition check: every induced subgraph has a vertex of degree < k."""
    n = len(adj)
    for size in range(1, n + 1):
        for sub in combinations(range(n), size):
            members = set(sub)
            if all(sum(1 for u in adj[v] if u in members) >= k for v in sub):
                return False
    return True


# ---------------------------------------------------------------------------
# graph construction helpers


def graph_from_adj(adj: list[list[int]]) -> Graph:
    edges = [(u, v) for u in range(len(adj)) for v in adj[u] if u < v]
    return build_graph(len(adj), edges)


def random_small_graph(seed: int, n_max: int = 12) -> Graph:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, n_max + 1))
    p = float(rng.uniform(0.0, 0.7))
    return gen_gnp(n, p, seed)


# hypothesis strategy: a small simple graph as (n, edge list)
@st.composite
def small_graphs(draw, max_n: int = 10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    if n == 1:
        return build_graph(1, [])
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
        lambda e: e[0] != e[1]
    )
    edges = draw(st.lists(pairs, max_size=3 * n))
    return build_graph(n, edges)


@st.composite
def small_graphs_and_k(draw, max_n: int = 10, max_k: int = 3):
    g = draw(small_graphs(max_n=max_n))
    k = draw(st.integers(min_value=1, max_value=max_k))
    return g, k
