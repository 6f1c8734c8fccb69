#!/usr/bin/env python3
"""Monte-Carlo check that the mean permutation-sample size matches the bound.

Draws many random-permutation samples per graph and compares the mean |L|
against the exact degree-sequence bound w(G), reporting the deviation in
standard errors.

Usage: python scripts/expectation_check.py [--samples 20000] [--seed 7]
"""

import argparse

from contagion import (
    ThresholdConfig,
    estimate_expected_L_size,
    gen_cycle,
    gen_disjoint_cliques,
    gen_gnp,
    gen_grid,
    weight_value,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--k", type=int, default=2)
    args = ap.parse_args()

    cfg = ThresholdConfig(args.k)
    cases = [
        ("C8", gen_cycle(8)),
        ("3xK5", gen_disjoint_cliques(3, 5)),
        ("grid 4x5", gen_grid(4, 5)),
        ("gnp(30,0.2)", gen_gnp(30, 0.2, args.seed)),
        ("gnp(50,0.1)", gen_gnp(50, 0.1, args.seed + 1)),
    ]
    print(f"{'graph':>12} {'w':>9} {'mean|L|':>9} {'stderr':>8} {'sigmas':>7}")
    for name, g in cases:
        w = float(weight_value(g, cfg))
        mean, err = estimate_expected_L_size(g, cfg, samples=args.samples, seed=args.seed)
        sigmas = abs(mean - w) / err if err else 0.0
        print(f"{name:>12} {w:>9.4f} {mean:>9.4f} {err:>8.4f} {sigmas:>7.2f}")


if __name__ == "__main__":
    main()
