"""Benchmark problems: three penalty-handled engineering designs and a family
of shifted synthetic functions with half the dimensions forced to integers.

Engineering reference optima are best-known literature values and can be
overridden per instance; they only feed absolute-error reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (Categorical, Continuous, IntegerRange, MixedSolution,
                   SearchSpace)

PENALTY_M = 1.0e6


class PenaltyMode(Enum):
    MAGNITUDE_ONLY = "magnitude"
    MAGNITUDE_PLUS_COUNT = "magnitude+count"


class Problem:
    """Minimization objective over a mixed space, penalty-wrapped when
    constrained."""

    name: str
    space: SearchSpace
    reference_optimum: float
    penalty_mode = PenaltyMode.MAGNITUDE_ONLY

    def raw(self, sol: MixedSolution) -> float:
        raise NotImplementedError

    def constraints(self, sol: MixedSolution) -> np.ndarray:
        """g values; feasible iff all g <= 0.  Empty for unconstrained."""
        return np.empty(0)

    def __call__(self, sol: MixedSolution) -> float:
        value = self.raw(sol)
        g = self.constraints(sol)
        if len(g) == 0:
            return value
        violation = np.maximum(0.0, g)
        value += PENALTY_M * float(np.sum(violation))
        if self.penalty_mode is PenaltyMode.MAGNITUDE_PLUS_COUNT:
            value += PENALTY_M * int(np.count_nonzero(violation))
        return value

    def absolute_error(self, achieved: float) -> float:
        return abs(achieved - self.reference_optimum)


def absolute_error(problem: Problem, achieved: float) -> float:
    """|achieved - reference optimum| of the problem."""
    return abs(achieved - problem.reference_optimum)


# --- pressure vessel -------------------------------------------------------

THICKNESS_STEP = 0.0625


def vessel_cost(d_s: float, d_h: float, r: float, length: float) -> float:
    """Fabrication cost of the cylindrical vessel."""
    return (0.6224 * r * d_s * length + 1.7781 * d_h * r * r
            + 3.1661 * d_s * d_s * length + 19.84 * d_s * d_s * r)


def vessel_constraints(d_s: float, d_h: float, r: float, length: float) -> np.ndarray:
    return np.array([
        -d_s + 0.0193 * r,
        -d_h + 0.00954 * r,
        -math.pi * r * r * length - (4.0 / 3.0) * math.pi * r ** 3 + 1296000.0,
        length - 240.0,
    ])


class VesselProblem(Problem):
    """Shell/head thicknesses are multiples of 0.0625, encoded as integer
    multiplier counts so the grid is feasible by construction."""

    name = "vessel"
    penalty_mode = PenaltyMode.MAGNITUDE_ONLY

    def __init__(self, reference_optimum: float = 6059.714335):
        self.space = SearchSpace([
            Continuous(10.0, 200.0),   # inner radius
            Continuous(10.0, 200.0),   # cylinder length
            IntegerRange(1, 99),       # shell thickness / 0.0625
            IntegerRange(1, 99),       # head thickness / 0.0625
        ])
        self.reference_optimum = reference_optimum

    @staticmethod
    def thicknesses(sol: MixedSolution) -> tuple[float, float]:
        return THICKNESS_STEP * sol.disc[0], THICKNESS_STEP * sol.disc[1]

    def raw(self, sol: MixedSolution) -> float:
        d_s, d_h = self.thicknesses(sol)
        return vessel_cost(d_s, d_h, sol.cont[0], sol.cont[1])

    def constraints(self, sol: MixedSolution) -> np.ndarray:
        d_s, d_h = self.thicknesses(sol)
        return vessel_constraints(d_s, d_h, sol.cont[0], sol.cont[1])


# --- welded beam -----------------------------------------------------------

BEAM_P = 6000.0
BEAM_ARM = 14.0
BEAM_E = 30.0e6
BEAM_G = 12.0e6
BEAM_TAU_MAX = 13600.0
BEAM_SIGMA_MAX = 30000.0
BEAM_DELTA_MAX = 0.25


def beam_cost(x1: float, x2: float, x3: float, x4: float) -> float:
    return 1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2)


def beam_constraints(x1: float, x2: float, x3: float, x4: float) -> np.ndarray:
    tau_p = BEAM_P / (math.sqrt(2.0) * x1 * x2)
    moment = BEAM_P * (BEAM_ARM + x2 / 2.0)
    radius = math.sqrt(x2 * x2 / 4.0 + ((x1 + x3) / 2.0) ** 2)
    polar = 2.0 * (math.sqrt(2.0) * x1 * x2
                   * (x2 * x2 / 12.0 + ((x1 + x3) / 2.0) ** 2))
    tau_pp = moment * radius / polar
    tau = math.sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * x2 / (2.0 * radius)
                    + tau_pp * tau_pp)
    sigma = 6.0 * BEAM_P * BEAM_ARM / (x4 * x3 * x3)
    delta = 4.0 * BEAM_P * BEAM_ARM ** 3 / (BEAM_E * x3 ** 3 * x4)
    p_c = (4.013 * BEAM_E * math.sqrt(x3 * x3 * x4 ** 6 / 36.0) / BEAM_ARM ** 2
           * (1.0 - x3 / (2.0 * BEAM_ARM) * math.sqrt(BEAM_E / (4.0 * BEAM_G))))
    return np.array([
        tau - BEAM_TAU_MAX,
        sigma - BEAM_SIGMA_MAX,
        x1 - x4,
        0.10471 * x1 * x1 + 0.04811 * x3 * x4 * (14.0 + x2) - 5.0,
        0.125 - x1,
        delta - BEAM_DELTA_MAX,
        BEAM_P - p_c,
    ])


class BeamProblem(Problem):
    name = "beam"
    penalty_mode = PenaltyMode.MAGNITUDE_PLUS_COUNT

    def __init__(self, reference_optimum: float = 1.724852):
        self.space = SearchSpace([
            Continuous(0.1, 2.0),    # weld thickness
            Continuous(0.1, 10.0),   # weld length
            Continuous(0.1, 10.0),   # beam height
            Continuous(0.1, 2.0),    # beam thickness
        ])
        self.reference_optimum = reference_optimum

    def raw(self, sol: MixedSolution) -> float:
        return beam_cost(*sol.cont)

    def constraints(self, sol: MixedSolution) -> np.ndarray:
        return beam_constraints(*sol.cont)


# --- coil spring -----------------------------------------------------------

CSD_P_MAX = 1000.0      # maximal working load
CSD_S = 189000.0        # allowable shear stress
CSD_L_FREE = 14.0       # maximal free length
CSD_D_MIN = 0.2         # minimal wire diameter
CSD_OUTER_MAX = 3.0     # maximal outer diameter
CSD_DELTA_PM = 6.0      # allowable deflection under load
CSD_P_LOAD = 300.0      # preload
CSD_DELTA_W = 1.25      # working deflection
CSD_G = 11.5e6          # shear modulus


def csd_weight(d: float, d_coil: float, n: int) -> float:
    return (n + 2) * d * d * d_coil


def csd_constraints(d: float, d_coil: float, n: int) -> np.ndarray:
    ratio = d_coil / d
    denom = 4.0 * ratio - 4.0
    if abs(denom) < 1e-12:
        c_f = math.inf
    else:
        c_f = (4.0 * ratio - 1.0) / denom + 0.615 / ratio
    spring_rate = CSD_G * d ** 4 / (8.0 * n * d_coil ** 3)
    delta_max = CSD_P_MAX / spring_rate
    delta_load = CSD_P_LOAD / spring_rate
    return np.array([
        8.0 * c_f * CSD_P_MAX * d_coil / (math.pi * d ** 3) - CSD_S,
        delta_max + 1.05 * (n + 2) * d - CSD_L_FREE,
        CSD_D_MIN - d,
        (d + d_coil) - CSD_OUTER_MAX,
        3.0 - ratio,
        delta_max - CSD_DELTA_PM,
        CSD_DELTA_W - delta_max + delta_load,
    ])


class CsdProblem(Problem):
    name = "csd"
    penalty_mode = PenaltyMode.MAGNITUDE_ONLY

    def __init__(self, reference_optimum: float = 2.658559):
        self.space = SearchSpace([
            Continuous(0.05, 2.0),   # wire diameter
            Continuous(0.25, 3.0),   # mean coil diameter
            IntegerRange(1, 70),     # number of active coils
        ])
        self.reference_optimum = reference_optimum

    def raw(self, sol: MixedSolution) -> float:
        return csd_weight(sol.cont[0], sol.cont[1], sol.disc[0])

    def constraints(self, sol: MixedSolution) -> np.ndarray:
        return csd_constraints(sol.cont[0], sol.cont[1], sol.disc[0])


# --- shifted synthetic family ----------------------------------------------

def _sphere(z: np.ndarray) -> float:
    return float(np.sum(z * z))


def _elliptic(z: np.ndarray) -> float:
    d = len(z)
    exponents = np.arange(d) / max(d - 1, 1)
    return float(np.sum(np.power(1e6, exponents) * z * z))


def _rosenbrock(z: np.ndarray) -> float:
    z = z + 1.0  # optimum moved to the origin
    return float(np.sum(100.0 * (z[1:] - z[:-1] ** 2) ** 2 + (z[:-1] - 1.0) ** 2))


def _rastrigin(z: np.ndarray) -> float:
    return float(np.sum(z * z - 10.0 * np.cos(2.0 * math.pi * z) + 10.0))


def _ackley(z: np.ndarray) -> float:
    d = len(z)
    return float(-20.0 * math.exp(-0.2 * math.sqrt(np.sum(z * z) / d))
                 - math.exp(np.sum(np.cos(2.0 * math.pi * z)) / d) + 20.0 + math.e)


def _griewank(z: np.ndarray) -> float:
    idx = np.sqrt(np.arange(1, len(z) + 1))
    return float(np.sum(z * z) / 4000.0 - np.prod(np.cos(z / idx)) + 1.0)


_SCHWEFEL_SHIFT = 420.968746


def _schwefel(z: np.ndarray) -> float:
    z = z + _SCHWEFEL_SHIFT
    return float(418.9829 * len(z) - np.sum(z * np.sin(np.sqrt(np.abs(z)))))


_SYNTHETIC = {
    # name -> (formula on z = x - shift, per-dimension bounds)
    "sphere": (_sphere, (-100.0, 100.0)),
    "elliptic": (_elliptic, (-100.0, 100.0)),
    "rosenbrock": (_rosenbrock, (-30.0, 30.0)),
    "rastrigin": (_rastrigin, (-5.12, 5.12)),
    "ackley": (_ackley, (-32.768, 32.768)),
    "griewank": (_griewank, (-600.0, 600.0)),
    "schwefel": (_schwefel, (-500.0, 500.0)),
}


class SyntheticProblem(Problem):
    """Canonical function evaluated on x - shift; the first half of the
    dimensions stays continuous, the second half is restricted to integers.

    The shift vector is drawn once from the inner 80% of the domain using a
    fixed seed, with its integer half pre-rounded so the optimum is feasible.
    """

    def __init__(self, name: str, dim: int = 50, shift_seed: int = 0):
        if name not in _SYNTHETIC:
            raise KeyError(f"unknown synthetic function {name!r}")
        if dim < 2 or dim % 2 != 0:
            raise ValueError("dim must be even and >= 2")
        self.name = name
        fn, (lo, hi) = _SYNTHETIC[name]
        self._fn = fn
        half = dim // 2
        int_lo, int_hi = math.ceil(lo), math.floor(hi)
        self.space = SearchSpace(
            [Continuous(lo, hi)] * half + [IntegerRange(int_lo, int_hi)] * half)
        rng = np.random.default_rng(shift_seed)
        shift = rng.uniform(0.8 * lo, 0.8 * hi, size=dim)
        shift[half:] = np.clip(np.round(shift[half:]), int_lo, int_hi)
        self.shift = shift
        self.reference_optimum = 0.0

    def optimum_solution(self) -> MixedSolution:
        half = self.space.n_c
        return MixedSolution(self.shift[:half].copy(),
                             tuple(int(v) for v in self.shift[half:]))

    def raw(self, sol: MixedSolution) -> float:
        x = np.concatenate([sol.cont, np.asarray(sol.disc, dtype=float)])
        return self._fn(x - self.shift)


ENGINEERING_NAMES = ("vessel", "beam", "csd")
SYNTHETIC_NAMES = tuple(_SYNTHETIC)


def synthetic(name: str, dim: int = 50, shift_seed: int = 0) -> SyntheticProblem:
    return SyntheticProblem(name, dim=dim, shift_seed=shift_seed)


def get_problem(name: str, dim: int = 50, shift_seed: int = 0) -> Problem:
    """Resolve a problem by registry name."""
    if name == "vessel":
        return VesselProblem()
    if name == "beam":
        return BeamProblem()
    if name == "csd":
        return CsdProblem()
    if name in _SYNTHETIC:
        return SyntheticProblem(name, dim=dim, shift_seed=shift_seed)
    raise KeyError(f"unknown problem {name!r}; known: "
                   f"{', '.join(ENGINEERING_NAMES + SYNTHETIC_NAMES)}")


def available_problems() -> tuple[str, ...]:
    return ENGINEERING_NAMES + SYNTHETIC_NAMES
