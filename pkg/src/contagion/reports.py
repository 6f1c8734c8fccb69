"""Shared result record for contagious-set algorithms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

__all__ = ["ContagiousSetReport", "fraction_dict"]


@dataclass(frozen=True)
class ContagiousSetReport:
    """A verified contagious set plus the evidence of how it was found.

    set is sorted ascending; verified is always True for reports returned
    by the algorithms (each one replays the cascade before returning).
    certificate depends on the algorithm: deletion order for the peeling
    algorithm, seed/trial bookkeeping for the randomized ones.
    """

    set: list[int]
    size: int
    w: Fraction
    algorithm: str
    certificate: dict[str, Any] = field(default_factory=dict)
    verified: bool = False


def fraction_dict(x: Fraction) -> dict[str, Any]:
    """JSON rendering of an exact rational: numerator/denominator plus decimal."""
    return {
        "numerator": x.numerator,
        "denominator": x.denominator,
        "decimal": float(x),
    }
