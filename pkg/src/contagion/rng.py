"""Seed derivation and generator construction.

All randomness in the package flows through numpy Generators created here.
Independent streams (trials, restarts, benchmark runs) use seeds derived
deterministically from a master seed and an index path, so any individual
run can be replayed in isolation.
"""

from __future__ import annotations

import secrets

import numpy as np

__all__ = ["derive_seed", "make_rng", "fresh_entropy_seed"]


def derive_seed(master: int, *path: int) -> int:
    """Mix a master seed with an index path into a new 64-bit seed.

    derive_seed(s, i) != derive_seed(s, j) for i != j in practice; the mix
    is numpy's SeedSequence entropy hash, so streams for distinct paths are
    statistically independent.
    """
    state = np.random.SeedSequence([int(master), *map(int, path)]).generate_state(1, np.uint64)
    return int(state[0])


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator for the given seed."""
    return np.random.default_rng(int(seed))


def fresh_entropy_seed() -> int:
    """OS-entropy seed for runs where the caller did not pin one.

    Callers are expected to record the returned value so the run stays
    replayable.
    """
    return secrets.randbits(63)
