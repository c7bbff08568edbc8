"""Phase statistics of partial phase states in the Pegg-Barnett formalism.

A partial phase state is a finite Fock superposition with nonnegative real
moduli b_n and a uniform phase ramp exp(i n mu):

    |b, mu> = sum_n b_n exp(i n mu) |n>

Expectation values of the Hermitian phase operator are taken in a finite
(s+1)-dimensional window and then s is sent to infinity, which leaves the
closed forms implemented here:

    mean      = mu
    variance  = pi^2/3 + 4 sum_{n > n'} b_n b_n' (-1)^(n-n') / (n-n')^2
    P(theta)  = (1/2pi) (1 + 2 sum_{n > n'} b_n b_n' cos[(n-n')(theta-mu)])

P is a 2pi-periodic probability density; this module samples it on a fixed
uniform grid over [-pi, pi) that is treated as circular, so states with
mu != 0 simply appear translated on the wrapped grid.

The double sums run over all pairs and are grouped by the difference
d = n - n', which costs O(M^2) once for the pair correlations and O(M * G)
for a G-point distribution grid.  fockphase.oracle provides the
finite-window construction used to validate these closed forms.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .states import ConstraintViolated, FockAmplitudes, NumericalUnderflow, StateSpec
from . import states

__all__ = [
    "DEFAULT_GRID_POINTS",
    "DEFAULT_MIN_PROMINENCE",
    "GridTooCoarse",
    "PartialPhaseState",
    "PhaseStatistics",
    "PhaseDistribution",
    "SweepRow",
    "mean_phase",
    "phase_variance",
    "phase_statistics",
    "distribution_values",
    "phase_distribution",
    "count_peaks",
    "variance_sweep",
]

DEFAULT_GRID_POINTS = 4096
DEFAULT_MIN_PROMINENCE = 1e-4

_MIN_GRID_POINTS = 16


class GridTooCoarse(ValueError):
    """Requested distribution grid cannot resolve the density."""


@dataclass(frozen=True, eq=False)
class PartialPhaseState:
    """Fock moduli plus the mean-phase parameter mu in (-pi, pi]."""

    moduli: FockAmplitudes
    mu: float = 0.0

    def __post_init__(self):
        if not (-math.pi < self.mu <= math.pi):
            raise ValueError(f"mu must lie in (-pi, pi], got {self.mu!r}")


@dataclass(frozen=True)
class PhaseStatistics:
    mean: float
    variance: float


@dataclass(frozen=True, eq=False)
class PhaseDistribution:
    """Phase density sampled at angles `thetas` (uniform, circular)."""

    thetas: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        th = np.asarray(self.thetas, dtype=float)
        va = np.asarray(self.values, dtype=float)
        if th.shape != va.shape or th.ndim != 1:
            raise ValueError("thetas and values must be 1-D arrays of equal length")
        th = th.copy()
        va = va.copy()
        th.flags.writeable = False
        va.flags.writeable = False
        object.__setattr__(self, "thetas", th)
        object.__setattr__(self, "values", va)


@dataclass(frozen=True)
class SweepRow:
    """One row of a parameter sweep; `error` is set when the row failed."""

    value: float
    variance: float | None
    error: str | None = None


def _pair_correlations(b: np.ndarray) -> np.ndarray:
    """c_d = sum_n b_n b_(n-d) for difference d = 1..M."""
    M = b.size - 1
    return np.array([float(np.dot(b[d:], b[: b.size - d])) for d in range(1, M + 1)])


def mean_phase(state: PartialPhaseState) -> float:
    """Mean of the phase operator; equals mu exactly for real moduli."""
    return state.mu


def phase_variance(state: PartialPhaseState) -> float:
    """Phase variance pi^2/3 + 4 sum_{n>n'} b_n b_n' (-1)^(n-n')/(n-n')^2.

    The sum runs over every pair (no truncation); a single-term state gives
    exactly pi^2/3, the variance of a uniform phase on a 2pi window.
    """
    b = state.moduli.amplitudes
    c = _pair_correlations(b)
    if c.size == 0:
        return math.pi**2 / 3.0
    d = np.arange(1, c.size + 1, dtype=float)
    signs = np.where(np.arange(1, c.size + 1) % 2 == 0, 1.0, -1.0)
    return math.pi**2 / 3.0 + 4.0 * float(np.sum(c * signs / (d * d)))


def phase_statistics(state: PartialPhaseState) -> PhaseStatistics:
    return PhaseStatistics(mean_phase(state), phase_variance(state))


def distribution_values(state: PartialPhaseState, thetas: np.ndarray) -> np.ndarray:
    """Phase density P(theta) evaluated at arbitrary angles."""
    b = state.moduli.amplitudes
    c = _pair_correlations(b)
    th = np.asarray(thetas, dtype=float)
    vals = np.full(th.shape, 1.0)
    if c.size:
        d = np.arange(1, c.size + 1, dtype=float)
        vals = vals + 2.0 * (c @ np.cos(np.outer(d, th - state.mu)))
    # rounding can leave values like -1e-17 at the zeros of the density
    return np.maximum(vals, 0.0) / (2.0 * math.pi)


def phase_distribution(
    state: PartialPhaseState, grid_points: int = DEFAULT_GRID_POINTS
) -> PhaseDistribution:
    """Sample P(theta) on the uniform circular grid -pi + 2pi k/G, k = 0..G-1."""
    if grid_points < _MIN_GRID_POINTS:
        raise GridTooCoarse(
            f"grid_points must be >= {_MIN_GRID_POINTS}, got {grid_points}"
        )
    thetas = -math.pi + 2.0 * math.pi * np.arange(grid_points) / grid_points
    return PhaseDistribution(thetas, distribution_values(state, thetas))


def count_peaks(
    dist: PhaseDistribution, min_prominence: float = DEFAULT_MIN_PROMINENCE
) -> int:
    """Number of prominent strict local maxima on the circular grid.

    Adjacent equal values are merged into a single plateau first.  A
    plateau counts as a peak when it is strictly above both neighbors and
    exceeds the nearest local minimum on each side by at least
    min_prominence.  A constant density has no peaks.
    """
    v = np.asarray(dist.values, dtype=float)
    runs: list[float] = []
    for x in v:
        if not runs or x != runs[-1]:
            runs.append(float(x))
    # the grid is circular: merge a plateau that wraps around the end
    while len(runs) > 1 and runs[-1] == runs[0]:
        runs.pop()
    r = len(runs)
    if r < 2:
        return 0
    is_max = [runs[i] > runs[i - 1] and runs[i] > runs[(i + 1) % r] for i in range(r)]
    is_min = [runs[i] < runs[i - 1] and runs[i] < runs[(i + 1) % r] for i in range(r)]
    count = 0
    for i in range(r):
        if not is_max[i]:
            continue
        left = next(runs[j % r] for j in range(i - 1, i - 1 - r, -1) if is_min[j % r])
        right = next(runs[j % r] for j in range(i + 1, i + 1 + r) if is_min[j % r])
        if runs[i] - max(left, right) >= min_prominence:
            count += 1
    return count


def variance_sweep(
    template: StateSpec, param: str, values, mu: float = 0.0
) -> list[SweepRow]:
    """Phase variance across one swept parameter of a state spec.

    Each row substitutes one value into `template` and records the
    variance; rows whose spec fails validation (or underflows) are marked
    failed via SweepRow.error instead of aborting the sweep.
    """
    rows: list[SweepRow] = []
    for value in values:
        spec = dataclasses.replace(template, **{param: value})
        try:
            state = PartialPhaseState(states.amplitudes(spec), mu)
            rows.append(SweepRow(value, phase_variance(state)))
        except (ConstraintViolated, NumericalUnderflow) as exc:
            rows.append(SweepRow(value, None, str(exc)))
    return rows
