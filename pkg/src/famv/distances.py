"""Distance measures feeding the attractiveness computation."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np

from .core import MixedSolution, SearchSpace


class DistanceKind(Enum):
    EUCLIDEAN = "euclidean"
    MIXED_EH = "mixed-eh"
    GOWER = "gower"


def euclidean(a: np.ndarray, b: np.ndarray) -> float:
    if len(a) != len(b):
        raise ValueError(f"vector lengths differ: {len(a)} vs {len(b)}")
    return float(np.linalg.norm(np.asarray(b, dtype=float) - np.asarray(a, dtype=float)))


def hamming(a: Sequence, b: Sequence) -> int:
    """Number of positions where the discrete vectors disagree."""
    if len(a) != len(b):
        raise ValueError(f"vector lengths differ: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def mixed_eh(space: SearchSpace, x: MixedSolution, y: MixedSolution) -> float:
    """Euclidean over the continuous part plus Hamming over the discrete
    part, averaged over the total dimension count."""
    _check(space, x, y)
    return (euclidean(x.cont, y.cont) + hamming(x.disc, y.disc)) / space.dim


def gower(space: SearchSpace, x: MixedSolution, y: MixedSolution) -> float:
    """Per-dimension normalized dissimilarity averaged over all dimensions.

    Continuous dimensions contribute |x - y| / range, discrete ones a 0/1
    mismatch indicator, so the result lies in [0, 1].
    """
    _check(space, x, y)
    total = float(np.sum(np.abs(x.cont - y.cont) / space.cont_range))
    total += hamming(x.disc, y.disc)
    return total / space.dim


def solution_distance(kind: DistanceKind, space: SearchSpace,
                      x: MixedSolution, y: MixedSolution) -> float:
    if kind is DistanceKind.MIXED_EH:
        return mixed_eh(space, x, y)
    if kind is DistanceKind.GOWER:
        return gower(space, x, y)
    raise ValueError(f"no mixed-solution form for {kind}")


def _check(space: SearchSpace, x: MixedSolution, y: MixedSolution) -> None:
    for sol in (x, y):
        if len(sol.cont) != space.n_c or len(sol.disc) != space.n_d:
            raise ValueError("solution does not conform to the search space")
