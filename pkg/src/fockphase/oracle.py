"""Finite-window reference construction for the phase statistics.

The Hermitian phase operator is defined on an (s_pb+1)-dimensional space
spanned by the orthonormal phase states

    |theta_m> = (s_pb+1)^(-1/2) sum_{n=0}^{s_pb} exp(i n theta_m) |n>,
    theta_m = theta0 + 2 pi m / (s_pb+1),  m = 0..s_pb,

with expectation values taken before any limit.  This module computes the
overlap probabilities |<theta_m|b, mu>|^2 and the resulting moments by
direct projection, no closed forms, so it serves as an independent oracle
for fockphase.phase: the finite moments converge to the closed-form values
as s_pb grows, while the finite density agrees with the closed-form
density at the window angles to rounding error for any s_pb >= cutoff.

With the symmetric window theta0 = mu - pi + pi/(s_pb+1) the discrete
angles are symmetric about mu, which makes the finite mean equal to mu
exactly (to rounding) for real-moduli states at every s_pb.

Moment sums run over up to 2^17 + 1 terms, so they are accumulated with
math.fsum, which is exactly rounded and therefore independent of term
ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .phase import PartialPhaseState, PhaseDistribution, PhaseStatistics

__all__ = [
    "FiniteWindow",
    "IndexOutOfWindow",
    "symmetric_window",
    "phase_state_overlap",
    "finite_moments",
    "finite_distribution",
]


class IndexOutOfWindow(IndexError):
    """Phase-state index or Fock cutoff exceeds the window dimension."""


@dataclass(frozen=True)
class FiniteWindow:
    """Window dimension s_pb + 1 and reference angle theta0."""

    s_pb: int
    theta0: float

    def __post_init__(self):
        if not isinstance(self.s_pb, (int, np.integer)) or self.s_pb < 1:
            raise ValueError(f"s_pb must be an integer >= 1, got {self.s_pb!r}")


def symmetric_window(s_pb: int, mu: float = 0.0) -> FiniteWindow:
    """Window whose discrete angles are symmetric about mu."""
    return FiniteWindow(s_pb, mu - math.pi + math.pi / (s_pb + 1))


def _angles(window: FiniteWindow) -> np.ndarray:
    dim = window.s_pb + 1
    return window.theta0 + 2.0 * math.pi * np.arange(dim) / dim


def _check_cutoff(window: FiniteWindow, state: PartialPhaseState) -> None:
    cutoff = state.moduli.cutoff
    if cutoff > window.s_pb:
        raise IndexOutOfWindow(
            f"state cutoff {cutoff} exceeds window dimension parameter s_pb={window.s_pb}"
        )


def _overlap_vector(window: FiniteWindow, state: PartialPhaseState) -> np.ndarray:
    """|<theta_m|b, mu>|^2 for all m at once."""
    _check_cutoff(window, state)
    b = state.moduli.amplitudes
    phi = state.mu - _angles(window)
    f = np.zeros(phi.size, dtype=complex)
    for n, bn in enumerate(b):
        if bn != 0.0:
            f += bn * np.exp(1j * n * phi)
    return (f.real * f.real + f.imag * f.imag) / (window.s_pb + 1)


def phase_state_overlap(
    window: FiniteWindow, m: int, state: PartialPhaseState
) -> float:
    """Overlap probability |<theta_m|b, mu>|^2 for a single index m."""
    if not 0 <= m <= window.s_pb:
        raise IndexOutOfWindow(f"m must lie in 0..{window.s_pb}, got {m}")
    _check_cutoff(window, state)
    dim = window.s_pb + 1
    theta_m = window.theta0 + 2.0 * math.pi * m / dim
    z = 0.0 + 0.0j
    for n, bn in enumerate(state.moduli.amplitudes):
        z += bn * complex(math.cos(n * (state.mu - theta_m)),
                          math.sin(n * (state.mu - theta_m)))
    return abs(z) ** 2 / dim


def finite_moments(window: FiniteWindow, state: PartialPhaseState) -> PhaseStatistics:
    """Mean and variance of the phase operator in the finite window.

    Converges to the closed forms in fockphase.phase as s_pb grows; the
    window should cover (mu - pi, mu + pi), e.g. via symmetric_window(s_pb, mu).
    """
    th = _angles(window)
    p = _overlap_vector(window, state)
    mean = math.fsum(th * p)
    second = math.fsum(th * th * p)
    return PhaseStatistics(mean, second - mean * mean)


def finite_distribution(
    window: FiniteWindow, state: PartialPhaseState
) -> PhaseDistribution:
    """Phase density at the window angles: overlap * (s_pb+1) / 2pi."""
    p = _overlap_vector(window, state)
    return PhaseDistribution(_angles(window), p * (window.s_pb + 1) / (2.0 * math.pi))
