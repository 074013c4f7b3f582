"""Binary-encoded genetic algorithm baseline.

All variable types share one bit-string chromosome: continuous dimensions get
a fixed-width segment mapped linearly onto their interval, integer and
categorical dimensions get ceil(log2(size)) bits mapped with a modulo (which
keeps every bit pattern feasible at the price of a slight non-uniformity for
non-power-of-two sizes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (Categorical, Continuous, EvaluationBudget, Firefly,
                   IntegerRange, MixedSolution, ObjectiveFunction, SearchSpace)
from .firefly import RunTrace, _Recorder


@dataclass(frozen=True)
class GaConfig:
    max_fe: int
    seed: int = 0
    pop_size: int = 100
    p_crossover: float = 0.9
    p_mutation: float = 0.01
    tournament_size: int = 3
    elitism_count: int = 1
    bits_per_continuous: int = 16

    def __post_init__(self):
        if self.pop_size % 2 != 0:
            raise ValueError("pop_size must be even for pairing")
        if not (0 <= self.p_crossover <= 1 and 0 <= self.p_mutation <= 1):
            raise ValueError("probabilities must lie in [0, 1]")
        if self.elitism_count < 0 or self.elitism_count > self.pop_size:
            raise ValueError("elitism_count out of range")


class ChromosomeLayout:
    """Per-dimension bit segments derived solely from the search space."""

    def __init__(self, space: SearchSpace, bits_per_continuous: int = 16):
        self.space = space
        self.segments: list[tuple[object, int, int]] = []  # (dim, offset, nbits)
        offset = 0
        for dim in space.dims:
            if isinstance(dim, Continuous):
                nbits = bits_per_continuous
            elif isinstance(dim, IntegerRange):
                nbits = max(1, math.ceil(math.log2(dim.hi - dim.lo + 1)))
            else:
                nbits = max(1, math.ceil(math.log2(len(dim.values))))
            self.segments.append((dim, offset, nbits))
            offset += nbits
        self.length = offset


def _bits_to_int(bits: np.ndarray) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | int(b)
    return value


def decode(layout: ChromosomeLayout, bits: np.ndarray) -> MixedSolution:
    """Map a chromosome to a feasible mixed solution."""
    if len(bits) != layout.length:
        raise ValueError(f"chromosome length {len(bits)} != layout length {layout.length}")
    cont, disc = [], []
    for dim, offset, nbits in layout.segments:
        raw = _bits_to_int(bits[offset:offset + nbits])
        if isinstance(dim, Continuous):
            cont.append(dim.lo + raw / (2 ** nbits - 1) * (dim.hi - dim.lo))
        elif isinstance(dim, IntegerRange):
            disc.append(dim.lo + raw % (dim.hi - dim.lo + 1))
        else:
            disc.append(dim.values[raw % len(dim.values)])
    return MixedSolution(np.array(cont), tuple(disc))


def one_point_crossover(a: np.ndarray, b: np.ndarray,
                        rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Swap suffixes at a uniform cut point in {1 .. L-1}."""
    if len(a) != len(b):
        raise ValueError("chromosome lengths differ")
    if len(a) < 2:
        raise ValueError("chromosomes need at least two bits")
    cut = int(rng.integers(1, len(a)))
    child_a = np.concatenate([a[:cut], b[cut:]])
    child_b = np.concatenate([b[:cut], a[cut:]])
    return child_a, child_b


def tournament_select(pop: list[Firefly], rng: np.random.Generator,
                      size: int = 3) -> Firefly:
    """Best of ``size`` individuals sampled uniformly with replacement."""
    if not pop:
        raise ValueError("empty population")
    picks = rng.integers(len(pop), size=size)
    return min((pop[i] for i in picks), key=lambda ind: ind.fitness)


def _tournament_index(fitnesses: list[float], rng: np.random.Generator,
                      size: int) -> int:
    picks = rng.integers(len(fitnesses), size=size)
    return min(picks, key=lambda i: fitnesses[i])


def _mutate(bits: np.ndarray, p: float, rng: np.random.Generator) -> np.ndarray:
    if p <= 0:
        return bits
    flips = rng.random(len(bits)) < p
    return np.where(flips, 1 - bits, bits)


def run_ga(problem: ObjectiveFunction, config: GaConfig) -> RunTrace:
    """Generational GA with elitism under a function-evaluation budget."""
    space = problem.space
    layout = ChromosomeLayout(space, config.bits_per_continuous)
    rng = np.random.default_rng(config.seed)
    budget = EvaluationBudget(config.max_fe)
    rec = _Recorder()

    genomes: list[np.ndarray] = []
    pop: list[Firefly] = []
    for _ in range(config.pop_size):
        if not budget.consume():
            break
        bits = rng.integers(0, 2, size=layout.length, dtype=np.int8)
        sol = decode(layout, bits)
        fly = Firefly(sol, problem(sol))
        genomes.append(bits)
        pop.append(fly)
        rec.observe(budget.consumed, fly)
    if not pop:
        raise ValueError("budget too small to evaluate any individual")

    if config.elitism_count >= config.pop_size:
        return rec.build(config.seed, "ga")  # fully elitist: nothing evolves

    while not budget.exhausted:
        order = sorted(range(len(pop)), key=lambda i: pop[i].fitness)
        elite_idx = order[:config.elitism_count]
        next_genomes = [genomes[i].copy() for i in elite_idx]
        next_pop = [Firefly(pop[i].solution, pop[i].fitness) for i in elite_idx]

        fitnesses = [ind.fitness for ind in pop]
        while len(next_pop) < config.pop_size:
            pa = genomes[_tournament_index(fitnesses, rng, config.tournament_size)]
            pb = genomes[_tournament_index(fitnesses, rng, config.tournament_size)]
            if rng.random() < config.p_crossover:
                ca, cb = one_point_crossover(pa, pb, rng)
            else:
                ca, cb = pa.copy(), pb.copy()
            for child in (ca, cb):
                if len(next_pop) >= config.pop_size:
                    break
                child = _mutate(child, config.p_mutation, rng)
                if not budget.consume():
                    return rec.build(config.seed, "ga")
                sol = decode(layout, child)
                fly = Firefly(sol, problem(sol))
                next_genomes.append(child)
                next_pop.append(fly)
                rec.observe(budget.consumed, fly)

        genomes, pop = next_genomes, next_pop

    return rec.build(config.seed, "ga")
