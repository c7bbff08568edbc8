"""Parameter maps identifying three of the state families.

The Polya, Hahn-coefficient, and negative hypergeometric states are one
family in three parameterizations.  Rewriting each squared-coefficient law
in rising factorials puts them all in the form

    b_n^2 = C(M,n) (a)_n (b)_(M-n) / (a+b)_M

and matching the bases gives the linear relations

    a = eta/gamma = alpha + 1 = s_nhg + 1
    b = (1-eta)/gamma = beta_h + 1 = M*beta/(1-beta) - s_nhg

This module implements the resulting parameter maps, the rising-factorial
amplitude evaluators used to cross-check the defining product forms, and a
comparator for amplitude vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from .specfun import pochhammer
from .states import (
    ConstraintViolated,
    FockAmplitudes,
    NegHypergeometric,
    validate,
)

__all__ = [
    "PolyaParams",
    "DomainError",
    "polya_from_hahn",
    "hahn_from_polya",
    "polya_from_nhg",
    "hahn_from_nhg",
    "coefficients_agree",
    "polya_amplitudes_pochhammer",
    "nhg_amplitudes_pochhammer",
]


class DomainError(ValueError):
    """Map input violates the source family's parameter constraints."""


@dataclass(frozen=True)
class PolyaParams:
    """Polya-family image (eta, gamma) of another parameterization."""

    eta: float
    gamma: float
    M: int


def polya_from_hahn(alpha: float, beta_h: float, M: int) -> PolyaParams:
    """Polya parameters reproducing the Hahn-coefficient state (alpha, beta_h, M)."""
    if not alpha > -1.0:
        raise DomainError(f"alpha > -1 required, got {alpha!r}")
    if not beta_h > -1.0:
        raise DomainError(f"beta_h > -1 required, got {beta_h!r}")
    gamma = 1.0 / (alpha + beta_h + 2.0)
    return PolyaParams(eta=(alpha + 1.0) * gamma, gamma=gamma, M=M)


def hahn_from_polya(params: PolyaParams) -> tuple[float, float]:
    """Inverse map: (alpha, beta_h) reproducing a Polya state."""
    if not params.gamma > 0.0:
        raise DomainError(f"gamma > 0 required, got {params.gamma!r}")
    if not (0.0 < params.eta < 1.0):
        raise DomainError(f"0 < eta < 1 required, got {params.eta!r}")
    return params.eta / params.gamma - 1.0, (1.0 - params.eta) / params.gamma - 1.0


def _check_nhg(M: int, beta: float, s_nhg: int) -> None:
    try:
        validate(NegHypergeometric(M=M, beta=beta, s_nhg=s_nhg))
    except ConstraintViolated as exc:
        raise DomainError(str(exc)) from exc


def polya_from_nhg(M: int, beta: float, s_nhg: int) -> PolyaParams:
    """Polya parameters reproducing the negative hypergeometric state."""
    _check_nhg(M, beta, s_nhg)
    gamma = 1.0 / (M * beta / (1.0 - beta) + 1.0)
    return PolyaParams(eta=(s_nhg + 1) * gamma, gamma=gamma, M=M)


def hahn_from_nhg(M: int, beta: float, s_nhg: int) -> tuple[float, float]:
    """Hahn parameters (alpha, beta_h) reproducing the negative hypergeometric state."""
    _check_nhg(M, beta, s_nhg)
    return float(s_nhg), M * beta / (1.0 - beta) - s_nhg - 1.0


def _as_array(x) -> np.ndarray:
    if isinstance(x, FockAmplitudes):
        return x.amplitudes
    return np.asarray(x, dtype=float)


def coefficients_agree(a, b, tol: float) -> bool:
    """True when two amplitude vectors have equal length and max |diff| <= tol."""
    va, vb = _as_array(a), _as_array(b)
    if va.shape != vb.shape:
        return False
    return bool(np.max(np.abs(va - vb), initial=0.0) <= tol)


def polya_amplitudes_pochhammer(M: int, gamma: float, eta: float) -> np.ndarray:
    """Polya amplitudes from the rising-factorial form of the squared law.

    Evaluates C(M,n) (eta/gamma)_n ((1-eta)/gamma)_(M-n) / (1/gamma)_M in
    linear space; an alternate route to states.amplitudes used for
    consistency checks.
    """
    if not gamma > 0.0:
        raise DomainError(f"gamma > 0 required, got {gamma!r}")
    if not (0.0 < eta < 1.0):
        raise DomainError(f"0 < eta < 1 required, got {eta!r}")
    a = eta / gamma
    b = (1.0 - eta) / gamma
    norm = pochhammer(1.0 / gamma, M)
    return np.array(
        [
            sqrt(comb(M, n) * pochhammer(a, n) * pochhammer(b, M - n) / norm)
            for n in range(M + 1)
        ]
    )


def nhg_amplitudes_pochhammer(M: int, beta: float, s_nhg: int) -> np.ndarray:
    """Negative hypergeometric amplitudes from the rising-factorial form.

    Evaluates C(M,n) (s+1)_n (M*beta/(1-beta)-s)_(M-n) / (M*beta/(1-beta)+1)_M
    in linear space.
    """
    _check_nhg(M, beta, s_nhg)
    t = M * beta / (1.0 - beta)
    norm = pochhammer(t + 1.0, M)
    return np.array(
        [
            sqrt(
                comb(M, n)
                * pochhammer(s_nhg + 1.0, n)
                * pochhammer(t - s_nhg, M - n)
                / norm
            )
            for n in range(M + 1)
        ]
    )
