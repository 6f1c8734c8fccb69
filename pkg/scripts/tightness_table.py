#!/usr/bin/env python3
"""Tightness of the degree bound on disjoint-clique families.

For q disjoint cliques of size l the bound evaluates to q*l*k/l = q*k and
the peeling algorithm meets it exactly; the brute-force optimum on a
single clique confirms k seeds are necessary and sufficient.

Usage: python scripts/tightness_table.py [--max-l 7]
"""

import argparse
from fractions import Fraction

from contagion import (
    ThresholdConfig,
    gen_disjoint_cliques,
    greedy_contagious,
    min_contagious_exact,
    weight_value,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-l", type=int, default=7)
    ap.add_argument("--cliques", type=int, default=3, help="number of disjoint cliques")
    args = ap.parse_args()

    print(f"{'l':>3} {'k':>3} {'w':>8} {'greedy':>7} {'opt(K_l)':>9} {'tight':>6}")
    for l in range(2, args.max_l + 1):
        for k in range(1, l):
            cfg = ThresholdConfig(k)
            g = gen_disjoint_cliques(args.cliques, l)
            w = weight_value(g, cfg)
            grd = greedy_contagious(g, cfg)
            opt = min_contagious_exact(gen_disjoint_cliques(1, l), cfg, cap=k)
            tight = grd.size == w == Fraction(args.cliques * k)
            print(
                f"{l:>3} {k:>3} {str(w):>8} {grd.size:>7} {opt.optimum_size:>9} "
                f"{'yes' if tight else 'NO':>6}"
            )


if __name__ == "__main__":
    main()
