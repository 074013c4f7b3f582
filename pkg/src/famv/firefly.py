"""Firefly engines for mixed search spaces.

`run_mixed_firefly` moves fireflies with type-aware operators: the classical
attraction rule on the continuous part, and a two-phase discrete update (a
probabilistic copy of differing components from the brighter firefly, then a
random exploration step).  `run_classical_firefly` is the continuous baseline
applied through relaxation: every dimension becomes a real interval and
discrete values are decoded by rounding at evaluation time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (Categorical, Continuous, EvaluationBudget, Firefly,
                   IntegerRange, MixedSolution, ObjectiveFunction, SearchSpace,
                   clamp, random_solution)
from .distances import DistanceKind, euclidean, solution_distance


@dataclass(frozen=True)
class FireflyConfig:
    max_fe: int
    seed: int = 0
    pop_size: int = 25
    beta0: float = 1.5
    alpha: float = 1.5          # alpha_init when adapt_alpha is set
    gamma: float = 0.1          # gamma_init when adapt_gamma is set
    k: float = 1.0              # sigmoid steepness for the replacement probability
    distance: DistanceKind = DistanceKind.MIXED_EH
    adapt_alpha: bool = False
    adapt_gamma: bool = False
    alpha_floor: float = 0.01
    gamma_floor: float = 0.01

    def __post_init__(self):
        if self.pop_size < 2:
            raise ValueError("pop_size must be >= 2")
        if self.beta0 <= 0 or self.alpha <= 0 or self.gamma <= 0 or self.k <= 0:
            raise ValueError("beta0, alpha, gamma and k must be positive")


@dataclass
class RunTrace:
    """Best-so-far samples of one run: (evaluation count, best fitness)."""

    samples: list[tuple[int, float]]
    final: Firefly
    seed: int
    algorithm: str

    def __post_init__(self):
        fes = [fe for fe, _ in self.samples]
        assert fes == sorted(set(fes)), "trace fe values must be strictly increasing"


def attractiveness(beta0: float, gamma: float, r: float) -> float:
    """beta0 * exp(-gamma r^2): full attraction at r = 0, decaying with distance."""
    return beta0 * math.exp(-gamma * r * r)


def discrete_attraction_prob(gamma: float, r: float) -> float:
    """exp(-gamma r^2), used as the per-component copy probability."""
    return math.exp(-gamma * r * r)


def continuous_move(xi: np.ndarray, xj: np.ndarray, beta: float, alpha: float,
                    rng: np.random.Generator) -> np.ndarray:
    """Attraction toward the brighter position plus uniform noise in
    [-alpha/2, alpha/2], drawn fresh per component."""
    if len(xi) != len(xj):
        raise ValueError("continuous parts differ in length")
    return xi + beta * (xj - xi) + alpha * (rng.random(len(xi)) - 0.5)


def beta_step(space: SearchSpace, xi_disc: tuple, xj_disc: tuple, prob: float,
              rng: np.random.Generator) -> tuple:
    """Copy each differing discrete component from the brighter firefly with
    probability ``prob``; agreeing components never change."""
    if len(xi_disc) != space.n_d or len(xj_disc) != space.n_d:
        raise ValueError("discrete parts do not conform to the space")
    out = []
    for a, b in zip(xi_disc, xj_disc):
        if a != b and rng.random() < prob:
            out.append(b)
        else:
            out.append(a)
    return tuple(out)


def _round_half_away(v: float) -> int:
    return int(math.floor(v + 0.5)) if v >= 0 else int(math.ceil(v - 0.5))


def alpha_step_integer(dim: IntegerRange, x: int, alpha: float,
                       rng: np.random.Generator) -> int:
    """Bounded local perturbation: round(x + alpha * eps) with eps ~ U[-1, 1],
    rounding half away from zero, clamped into the range."""
    eps = rng.uniform(-1.0, 1.0)
    return min(max(_round_half_away(x + alpha * eps), dim.lo), dim.hi)


def alpha_step_categorical(dim: Categorical, x, p_alpha: float,
                           rng: np.random.Generator):
    """With probability ``p_alpha`` resample uniformly over the value set
    (the current value may be redrawn); otherwise keep ``x``."""
    if rng.random() < p_alpha:
        return dim.values[int(rng.integers(len(dim.values)))]
    return x


def replacement_prob(alpha: float, alpha_init: float, k: float, adaptive: bool) -> float:
    """Sigmoid mapping from the exploration parameter to a replacement
    probability; midpoint at alpha_init / 2 in the adaptive form."""
    if adaptive:
        return 1.0 / (1.0 + math.exp(-k * (alpha - alpha_init / 2.0)))
    return 1.0 / (1.0 + math.exp(-k * alpha / 2.0))


def adapt_parameters(alpha_init: float, gamma_init: float,
                     budget: EvaluationBudget,
                     alpha_floor: float = 0.01,
                     gamma_floor: float = 0.01) -> tuple[float, float]:
    """Linear decay with the consumed-budget ratio, floored to keep a minimum
    level of stochasticity."""
    remaining = 1.0 - budget.progress
    return (max(alpha_floor, alpha_init * remaining),
            max(gamma_floor, gamma_init * remaining))


class _Recorder:
    """Tracks the global best and collects improvement samples."""

    def __init__(self):
        self.best: Firefly | None = None
        self.samples: list[tuple[int, float]] = []

    def observe(self, fe: int, firefly: Firefly) -> None:
        if self.best is None or firefly.fitness < self.best.fitness:
            self.best = Firefly(firefly.solution, firefly.fitness)
            self.samples.append((fe, firefly.fitness))

    def build(self, seed: int, algorithm: str) -> RunTrace:
        assert self.best is not None, "run produced no evaluations"
        return RunTrace(self.samples, self.best, seed, algorithm)


def _alpha_step_all(space: SearchSpace, disc: tuple, alpha: float, p_alpha: float,
                    rng: np.random.Generator) -> tuple:
    out = []
    for value, dim in zip(disc, space.discrete):
        if isinstance(dim, IntegerRange):
            out.append(alpha_step_integer(dim, value, alpha, rng))
        else:
            out.append(alpha_step_categorical(dim, value, p_alpha, rng))
    return tuple(out)


def run_famv(problem: ObjectiveFunction, config: FireflyConfig) -> RunTrace:
    """Mixed-variable firefly run under a function-evaluation budget."""
    space = problem.space
    rng = np.random.default_rng(config.seed)
    budget = EvaluationBudget(config.max_fe)
    rec = _Recorder()

    pop: list[Firefly] = []
    for _ in range(config.pop_size):
        if not budget.consume():
            break
        sol = random_solution(space, rng)
        fly = Firefly(sol, problem(sol))
        pop.append(fly)
        rec.observe(budget.consumed, fly)
    if not pop:
        raise ValueError("budget too small to evaluate any firefly")

    alpha, gamma = config.alpha, config.gamma
    while not budget.exhausted:
        if config.adapt_alpha or config.adapt_gamma:
            a, g = adapt_parameters(config.alpha, config.gamma, budget,
                                    config.alpha_floor, config.gamma_floor)
            if config.adapt_alpha:
                alpha = a
            if config.adapt_gamma:
                gamma = g
        p_alpha = replacement_prob(alpha, config.alpha, config.k, config.adapt_alpha)

        for i, fi in enumerate(pop):
            updated = False
            for j, fj in enumerate(pop):
                if i == j or not fj.fitness < fi.fitness:
                    continue
                if not budget.consume():
                    return rec.build(config.seed, "famv")
                r = solution_distance(config.distance, space,
                                      fi.solution, fj.solution)
                beta = attractiveness(config.beta0, gamma, r)
                cont = continuous_move(fi.solution.cont, fj.solution.cont,
                                       beta, alpha, rng)
                disc = beta_step(space, fi.solution.disc, fj.solution.disc,
                                 discrete_attraction_prob(gamma, r), rng)
                disc = _alpha_step_all(space, disc, alpha, p_alpha, rng)
                fi.solution = clamp(space, MixedSolution(cont, disc))
                fi.fitness = problem(fi.solution)
                rec.observe(budget.consumed, fi)
                updated = True
            if not updated:
                if not budget.consume():
                    return rec.build(config.seed, "famv")
                cont = fi.solution.cont + alpha * (rng.random(space.n_c) - 0.5)
                disc = _alpha_step_all(space, fi.solution.disc, alpha, p_alpha, rng)
                fi.solution = clamp(space, MixedSolution(cont, disc))
                fi.fitness = problem(fi.solution)
                rec.observe(budget.consumed, fi)

    return rec.build(config.seed, "famv")


def relaxed_bounds(space: SearchSpace) -> tuple[np.ndarray, np.ndarray]:
    """Real-interval bounds for every dimension: integer ranges keep their
    endpoints, categorical sets become index intervals [0, size - 1]."""
    lo, hi = [], []
    for dim in space.dims:
        if isinstance(dim, Categorical):
            lo.append(0.0)
            hi.append(float(len(dim.values) - 1))
        else:
            lo.append(float(dim.lo))
            hi.append(float(dim.hi))
    return np.array(lo), np.array(hi)


def relaxed_decode(space: SearchSpace, position: np.ndarray) -> MixedSolution:
    """Map a relaxed real vector back to a feasible mixed solution: continuous
    components pass through, integers round to the nearest value, categoricals
    round to the nearest index."""
    if len(position) != space.dim:
        raise ValueError("relaxed vector length does not match the space")
    cont, disc = [], []
    for value, dim in zip(position, space.dims):
        if isinstance(dim, Continuous):
            cont.append(min(max(float(value), dim.lo), dim.hi))
        elif isinstance(dim, IntegerRange):
            disc.append(min(max(_round_half_away(float(value)), dim.lo), dim.hi))
        else:
            idx = min(max(_round_half_away(float(value)), 0), len(dim.values) - 1)
            disc.append(dim.values[idx])
    return MixedSolution(np.array(cont), tuple(disc))


def run_classical_fa(problem: ObjectiveFunction, config: FireflyConfig) -> RunTrace:
    """Continuous firefly baseline on the relaxed space.

    Positions stay continuous for the whole run; discrete dimensions are only
    decoded when the objective is evaluated.
    """
    space = problem.space
    rng = np.random.default_rng(config.seed)
    budget = EvaluationBudget(config.max_fe)
    rec = _Recorder()
    lo, hi = relaxed_bounds(space)

    positions = [lo + rng.random(space.dim) * (hi - lo) for _ in range(config.pop_size)]
    fitness = []
    for pos in positions:
        if not budget.consume():
            break
        sol = relaxed_decode(space, pos)
        f = problem(sol)
        fitness.append(f)
        rec.observe(budget.consumed, Firefly(sol, f))
    if not fitness:
        raise ValueError("budget too small to evaluate any firefly")
    positions = positions[:len(fitness)]

    while not budget.exhausted:
        moved = False
        for i in range(len(positions)):
            for j in range(len(positions)):
                if i == j or not fitness[j] < fitness[i]:
                    continue
                if not budget.consume():
                    return rec.build(config.seed, "fa")
                r = euclidean(positions[i], positions[j])
                beta = attractiveness(config.beta0, config.gamma, r)
                positions[i] = np.clip(
                    continuous_move(positions[i], positions[j], beta,
                                    config.alpha, rng), lo, hi)
                sol = relaxed_decode(space, positions[i])
                fitness[i] = problem(sol)
                rec.observe(budget.consumed, Firefly(sol, fitness[i]))
                moved = True
        if not moved:
            break  # all fitness values tied; no rule moves anyone

    return rec.build(config.seed, "fa")
