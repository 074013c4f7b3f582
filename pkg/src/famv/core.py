"""Search-space and solution primitives shared by every algorithm.

A solution over a mixed search space keeps its continuous components in a
numpy vector and its discrete components (integers or category symbols) in a
tuple.  Continuous components come first, discrete second; both follow the
order in which their dimensions appear in the search space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Protocol, Union

import numpy as np


@dataclass(frozen=True)
class Continuous:
    """A real-valued dimension with finite bounds, lo < hi."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"continuous bounds must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValueError(f"continuous dimension needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def range(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class IntegerRange:
    """A compact (consecutive) integer dimension, lo <= hi."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"integer dimension needs lo <= hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Categorical:
    """A finite ordered set of distinct symbols."""

    values: tuple[Hashable, ...]

    def __post_init__(self):
        if len(self.values) == 0:
            raise ValueError("categorical dimension needs at least one value")
        if len(set(self.values)) != len(self.values):
            raise ValueError(f"categorical values must be distinct, got {self.values}")


DimensionSpec = Union[Continuous, IntegerRange, Categorical]


class SearchSpace:
    """Ordered list of dimension specs defining the feasible domain.

    Dimension order is stable and defines the solution layout: the k-th
    continuous dimension maps to ``cont[k]``, the k-th discrete one to
    ``disc[k]``.
    """

    def __init__(self, dims: Iterable[DimensionSpec]):
        self.dims: tuple[DimensionSpec, ...] = tuple(dims)
        if not self.dims:
            raise ValueError("search space needs at least one dimension")
        self.continuous: tuple[Continuous, ...] = tuple(
            d for d in self.dims if isinstance(d, Continuous))
        self.discrete: tuple[Union[IntegerRange, Categorical], ...] = tuple(
            d for d in self.dims if not isinstance(d, Continuous))
        self.n_c = len(self.continuous)
        self.n_d = len(self.discrete)
        self.dim = self.n_c + self.n_d
        self.cont_lo = np.array([d.lo for d in self.continuous], dtype=float)
        self.cont_hi = np.array([d.hi for d in self.continuous], dtype=float)
        self.cont_range = self.cont_hi - self.cont_lo

    def __repr__(self):
        return f"SearchSpace(n_c={self.n_c}, n_d={self.n_d})"


@dataclass(frozen=True)
class MixedSolution:
    """A candidate point: continuous vector plus discrete value tuple."""

    cont: np.ndarray
    disc: tuple

    def __eq__(self, other):
        if not isinstance(other, MixedSolution):
            return NotImplemented
        return np.array_equal(self.cont, other.cont) and self.disc == other.disc

    def __hash__(self):
        return hash((self.cont.tobytes(), self.disc))

    def conforms(self, space: SearchSpace) -> bool:
        """True when every component lies inside its dimension's domain."""
        if len(self.cont) != space.n_c or len(self.disc) != space.n_d:
            return False
        if np.any(self.cont < space.cont_lo) or np.any(self.cont > space.cont_hi):
            return False
        for value, dim in zip(self.disc, space.discrete):
            if isinstance(dim, IntegerRange):
                if not (isinstance(value, (int, np.integer)) and dim.lo <= value <= dim.hi):
                    return False
            else:
                if value not in dim.values:
                    return False
        return True


@dataclass
class Firefly:
    """A population member: a solution with its cached objective value."""

    solution: MixedSolution
    fitness: float


class BudgetExhausted(Exception):
    """Signals that the function-evaluation budget is spent (not an error)."""


class EvaluationBudget:
    """Monotone counter of objective evaluations, capped at ``max_fe``."""

    def __init__(self, max_fe: int):
        if max_fe < 1:
            raise ValueError("max_fe must be positive")
        self.max_fe = int(max_fe)
        self.consumed = 0

    def consume(self, n: int = 1) -> bool:
        """Charge ``n`` evaluations; False means exhausted (nothing charged)."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if self.consumed + n > self.max_fe:
            return False
        self.consumed += n
        return True

    @property
    def exhausted(self) -> bool:
        return self.consumed >= self.max_fe

    @property
    def progress(self) -> float:
        return self.consumed / self.max_fe


class ObjectiveFunction(Protocol):
    """Minimization objective tied to a space and a reference optimum."""

    name: str
    space: SearchSpace
    reference_optimum: float

    def __call__(self, solution: MixedSolution) -> float: ...


def random_solution(space: SearchSpace, rng: np.random.Generator) -> MixedSolution:
    """Draw a uniform random solution from the space."""
    cont = space.cont_lo + rng.random(space.n_c) * space.cont_range
    disc = []
    for dim in space.discrete:
        if isinstance(dim, IntegerRange):
            disc.append(int(rng.integers(dim.lo, dim.hi + 1)))
        else:
            disc.append(dim.values[int(rng.integers(len(dim.values)))])
    return MixedSolution(cont, tuple(disc))


def clamp(space: SearchSpace, sol: MixedSolution) -> MixedSolution:
    """Project continuous/integer components onto their bounds.

    Categorical components pass through untouched.  Idempotent.
    """
    if len(sol.cont) != space.n_c or len(sol.disc) != space.n_d:
        raise ValueError(
            f"solution layout ({len(sol.cont)}, {len(sol.disc)}) does not match "
            f"space ({space.n_c}, {space.n_d})")
    cont = np.clip(sol.cont, space.cont_lo, space.cont_hi)
    disc = []
    for value, dim in zip(sol.disc, space.discrete):
        if isinstance(dim, IntegerRange):
            disc.append(min(max(int(value), dim.lo), dim.hi))
        else:
            disc.append(value)
    return MixedSolution(cont, tuple(disc))
