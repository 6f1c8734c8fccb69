import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contagion import (
    ThresholdConfig,
    build_graph,
    derive_seed,
    estimate_expected_L_size,
    gen_cycle,
    gen_disjoint_cliques,
    gen_gnp,
    induced_subgraph,
    is_contagious,
    is_k_degenerate,
    membership_probability,
    randomized_contagious,
    sample_L,
    weight_value,
)
from conftest import small_graphs_and_k

K1, K2 = ThresholdConfig(1), ThresholdConfig(2)


class TestSampleL:
    def test_single_vertex(self):
        g = build_graph(1, [])
        for seed in range(5):
            assert sample_L(g, K2, seed).L.tolist() == [0]

    def test_k3_threshold1_takes_first(self):
        g = gen_disjoint_cliques(1, 3)
        for seed in range(10):
            s = sample_L(g, K1, seed)
            first = int(np.argmin(s.rank))
            assert s.L.tolist() == [first]

    def test_edge_first_endpoint(self):
        g = build_graph(2, [(0, 1)])
        for seed in range(10):
            s = sample_L(g, K1, seed)
            assert s.L.tolist() == [int(np.argmin(s.rank))]

    def test_same_seed_same_sample(self):
        g = gen_gnp(30, 0.2, 5)
        a, b = sample_L(g, K2, 99), sample_L(g, K2, 99)
        assert np.array_equal(a.rank, b.rank) and np.array_equal(a.L, b.L)

    @settings(max_examples=80, deadline=None)
    @given(small_graphs_and_k(), st.integers(0, 2**32))
    def test_sample_structure(self, gk, seed):
        g, k = gk
        cfg = ThresholdConfig(k)
        s = sample_L(g, cfg, seed)
        assert sorted(s.rank.tolist()) == list(range(g.n))
        for v in range(g.n):
            earlier = sum(1 for u in g.neighbors(v).tolist() if s.rank[u] < s.rank[v])
            assert s.closed_rank[v] == earlier + 1
            assert (v in s.L.tolist()) == (s.closed_rank[v] <= k)

    @settings(max_examples=60, deadline=None)
    @given(small_graphs_and_k(), st.integers(0, 2**32))
    def test_L_contagious_and_degenerate(self, gk, seed):
        g, k = gk
        cfg = ThresholdConfig(k)
        s = sample_L(g, cfg, seed)
        assert is_contagious(g, cfg, s.L.tolist())
        assert is_k_degenerate(induced_subgraph(g, s.L.tolist()), k)
        forced = sum(1 for v in range(g.n) if g.degree(v) < k)
        assert s.L.size >= forced


class TestMembershipProbability:
    def test_degree4_k2(self):
        g = build_graph(5, [(0, i) for i in range(1, 5)])
        assert membership_probability(g, K2, 0) == Fraction(2, 5)

    def test_isolated(self):
        g = build_graph(2, [])
        for k in (1, 2, 9):
            assert membership_probability(g, ThresholdConfig(k), 0) == 1

    def test_cap(self):
        g = gen_cycle(4)
        assert membership_probability(g, ThresholdConfig(3), 0) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            membership_probability(gen_cycle(3), K1, 5)

    def test_empirical_frequency(self):
        g = gen_gnp(12, 0.35, 21)
        cfg = K2
        trials = 4000
        hits = np.zeros(g.n)
        for t in range(trials):
            hits[sample_L(g, cfg, derive_seed(888, t)).L] += 1
        for v in range(g.n):
            p = float(membership_probability(g, cfg, v))
            sigma = math.sqrt(p * (1 - p) / trials)
            assert abs(hits[v] / trials - p) <= 4 * sigma + 1e-12


class TestExpectedSize:
    def test_isolated_exact(self):
        g = build_graph(6, [])
        mean, err = estimate_expected_L_size(g, K2, samples=50, seed=1)
        assert (mean, err) == (6.0, 0.0)

    def test_k4_threshold4_capped(self):
        g = gen_disjoint_cliques(1, 4)
        mean, err = estimate_expected_L_size(g, ThresholdConfig(4), samples=40, seed=2)
        assert (mean, err) == (4.0, 0.0)

    def test_c8_matches_weight(self):
        g = gen_cycle(8)
        mean, err = estimate_expected_L_size(g, K2, samples=4000, seed=33)
        assert abs(mean - 16 / 3) <= 3 * err

    def test_invalid_samples(self):
        with pytest.raises(ValueError):
            estimate_expected_L_size(gen_cycle(3), K1, samples=0, seed=0)


class TestRandomizedContagious:
    def test_three_k5(self):
        g = gen_disjoint_cliques(3, 5)
        rep = randomized_contagious(g, K2, seed=7, max_trials=1000)
        assert rep.size <= 6
        assert rep.certificate["accepted"]
        assert rep.certificate["trial"] == 1  # every draw keeps 2 per clique
        assert rep.verified

    def test_single_vertex(self):
        rep = randomized_contagious(build_graph(1, []), K2, seed=0)
        assert rep.set == [0] and rep.certificate["trials_run"] == 1

    def test_low_degree_graph_returns_everything(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        rep = randomized_contagious(g, ThresholdConfig(3), seed=5)
        assert rep.set == [0, 1, 2, 3]
        assert rep.size == rep.w == 4

    def test_deterministic(self):
        g = gen_gnp(25, 0.3, 9)
        a = randomized_contagious(g, K2, seed=123)
        b = randomized_contagious(g, K2, seed=123)
        assert a == b

    def test_invalid_trials(self):
        with pytest.raises(ValueError):
            randomized_contagious(gen_cycle(3), K1, seed=1, max_trials=0)

    @settings(max_examples=40, deadline=None)
    @given(small_graphs_and_k(), st.integers(0, 2**32))
    def test_always_verified_and_within_floor_or_flagged(self, gk, seed):
        g, k = gk
        cfg = ThresholdConfig(k)
        rep = randomized_contagious(g, cfg, seed=seed, max_trials=50)
        assert rep.verified and is_contagious(g, cfg, rep.set)
        if rep.certificate["accepted"]:
            assert rep.size <= math.floor(weight_value(g, cfg))
