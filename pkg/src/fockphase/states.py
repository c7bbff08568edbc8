"""Fock-basis amplitude vectors for five photon-number state families.

Each family is a finite superposition of the number states |0>..|M> whose
coefficients b_n are real, nonnegative, and normalized, so the squared
coefficients form a discrete probability law on 0..M:

    binomial          b_n^2 = C(M,n) eta^n (1-eta)^(M-n)
    hypergeometric    b_n^2 = C(L*eta, n) C(L*(1-eta), M-n) / C(L, M)
    Polya             b_n^2 = C(M,n) prod_{k<n}(eta+k*gamma)
                              * prod_{k<M-n}((1-eta)+k*gamma)
                              / prod_{k<M}(1+k*gamma)
    Hahn              b_n^2 = C(M,n) (alpha+1)_n (beta_h+1)_(M-n)
                              / (alpha+beta_h+2)_M
    negative          b_n^2 = C(n+s, n) C(M/(1-beta)-n-s-1, M-n)
    hypergeometric            / C(M/(1-beta), M)

C(x, k) is the generalized binomial coefficient with real upper argument
and (x)_k the rising factorial.  The binomial state interpolates between a
coherent-like and a number-state character as eta runs over [0, 1]; the
other four interpolate further structure on top of it and collapse back to
a binomial state at M = 1.

Amplitudes are evaluated as exp(0.5 * sum(log num) - 0.5 * sum(log den))
because the raw products overflow double precision for moderate M and
large L.  A factor smaller than specfun.ZERO_THRESHOLD makes the whole
coefficient an exact 0 rather than an error; that is how boundary values
such as eta = 0 or eta = 1 produce vacuum and number states exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .specfun import ZERO_THRESHOLD, NonPositiveFactor, log_positive_product

__all__ = [
    "Binomial",
    "Hypergeometric",
    "Polya",
    "Hahn",
    "NegHypergeometric",
    "StateSpec",
    "FockAmplitudes",
    "ConstraintViolated",
    "NumericalUnderflow",
    "validate",
    "amplitudes",
    "amplitudes_direct",
    "squared_distribution",
]

NORMALIZATION_TOL = 1e-10


class ConstraintViolated(ValueError):
    """A state-family parameter constraint does not hold."""

    def __init__(self, constraint: str, value):
        super().__init__(f"constraint {constraint} violated (got {value!r})")
        self.constraint = constraint
        self.value = value


class NumericalUnderflow(ArithmeticError):
    """Parameters are outside the numeric envelope the evaluator supports."""


@dataclass(frozen=True)
class Binomial:
    """Binomial state: eta in [0, 1], cutoff M."""

    eta: float
    M: int


@dataclass(frozen=True)
class Hypergeometric:
    """Hypergeometric state: real L >= max(M/eta, M/(1-eta)), 0 < eta < 1."""

    L: float
    M: int
    eta: float


@dataclass(frozen=True)
class Polya:
    """Polya state: gamma > 0, 0 < eta < 1."""

    M: int
    gamma: float
    eta: float


@dataclass(frozen=True)
class Hahn:
    """Hahn-coefficient state: alpha > -1, beta_h > -1."""

    alpha: float
    beta_h: float
    M: int


@dataclass(frozen=True)
class NegHypergeometric:
    """Negative hypergeometric state: 0 < beta < 1, integer 0 <= s_nhg < M*beta/(1-beta)."""

    M: int
    beta: float
    s_nhg: int


StateSpec = Union[Binomial, Hypergeometric, Polya, Hahn, NegHypergeometric]


@dataclass(frozen=True, eq=False)
class FockAmplitudes:
    """Validated, read-only amplitude vector b_0..b_M plus its source spec."""

    amplitudes: np.ndarray
    source: StateSpec

    def __post_init__(self):
        arr = np.asarray(self.amplitudes, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("amplitudes must be a nonempty 1-D vector")
        if not np.all(arr >= 0.0):
            raise ValueError("amplitudes must be nonnegative")
        total = float(np.dot(arr, arr))
        if not abs(total - 1.0) <= NORMALIZATION_TOL:
            raise ValueError(f"squared amplitudes sum to {total!r}, not 1")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    def __len__(self) -> int:
        return int(self.amplitudes.size)

    @property
    def cutoff(self) -> int:
        return int(self.amplitudes.size - 1)


def _require_nonneg_int(name: str, value) -> None:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ConstraintViolated(f"{name} must be a nonnegative integer", value)
    if value < 0:
        raise ConstraintViolated(f"{name} >= 0", value)


def validate(spec: StateSpec) -> StateSpec:
    """Return the spec unchanged if every family constraint holds.

    Raises ConstraintViolated naming the violated inequality otherwise.
    """
    if isinstance(spec, Binomial):
        _require_nonneg_int("M", spec.M)
        if not (0.0 <= spec.eta <= 1.0):
            raise ConstraintViolated("0 <= eta <= 1", spec.eta)
    elif isinstance(spec, Hypergeometric):
        _require_nonneg_int("M", spec.M)
        if not (0.0 < spec.eta < 1.0):
            raise ConstraintViolated("0 < eta < 1", spec.eta)
        bound = max(spec.M / spec.eta, spec.M / (1.0 - spec.eta))
        if not spec.L >= bound:
            raise ConstraintViolated(
                f"L >= max(M/eta, M/(1-eta)) = {bound!r}", spec.L
            )
    elif isinstance(spec, Polya):
        _require_nonneg_int("M", spec.M)
        if not spec.gamma > 0.0:
            raise ConstraintViolated("gamma > 0", spec.gamma)
        if not (0.0 < spec.eta < 1.0):
            raise ConstraintViolated("0 < eta < 1", spec.eta)
    elif isinstance(spec, Hahn):
        _require_nonneg_int("M", spec.M)
        if not spec.alpha > -1.0:
            raise ConstraintViolated("alpha > -1", spec.alpha)
        if not spec.beta_h > -1.0:
            raise ConstraintViolated("beta_h > -1", spec.beta_h)
    elif isinstance(spec, NegHypergeometric):
        _require_nonneg_int("M", spec.M)
        _require_nonneg_int("s_nhg", spec.s_nhg)
        if not (0.0 < spec.beta < 1.0):
            raise ConstraintViolated("0 < beta < 1", spec.beta)
        top = spec.M * spec.beta / (1.0 - spec.beta)
        if not spec.s_nhg < top:
            raise ConstraintViolated(f"s_nhg < M*beta/(1-beta) = {top!r}", spec.s_nhg)
    else:
        raise TypeError(f"not a state spec: {spec!r}")
    return spec


def _int_choose_factors(M: int, n: int) -> tuple[list[float], list[float]]:
    # C(M, n) as (M-n+1)...M over 1...n
    return (
        [float(M - n + j) for j in range(1, n + 1)],
        [float(j) for j in range(1, n + 1)],
    )


def _real_choose_factors(x: float, k: int) -> tuple[list[float], list[float]]:
    # C(x, k) with real upper argument: x(x-1)...(x-k+1) over k!
    return [x - j for j in range(k)], [float(j) for j in range(1, k + 1)]


def _factor_lists(spec: StateSpec, n: int) -> tuple[list[float], list[float]]:
    """Numerator and denominator factors of the squared coefficient b_n^2."""
    M = spec.M
    if isinstance(spec, Binomial):
        cn, cd = _int_choose_factors(M, n)
        return cn + [spec.eta] * n + [1.0 - spec.eta] * (M - n), cd
    if isinstance(spec, Hypergeometric):
        an, ad = _real_choose_factors(spec.L * spec.eta, n)
        bn, bd = _real_choose_factors(spec.L * (1.0 - spec.eta), M - n)
        dn, dd = _real_choose_factors(spec.L, M)
        return an + bn + dd, ad + bd + dn
    if isinstance(spec, Polya):
        cn, cd = _int_choose_factors(M, n)
        num = cn + [spec.eta + k * spec.gamma for k in range(n)]
        num += [(1.0 - spec.eta) + k * spec.gamma for k in range(M - n)]
        return num, cd + [1.0 + k * spec.gamma for k in range(M)]
    if isinstance(spec, Hahn):
        cn, cd = _int_choose_factors(M, n)
        num = cn + [spec.alpha + 1.0 + k for k in range(n)]
        num += [spec.beta_h + 1.0 + k for k in range(M - n)]
        return num, cd + [spec.alpha + spec.beta_h + 2.0 + k for k in range(M)]
    if isinstance(spec, NegHypergeometric):
        w = M / (1.0 - spec.beta)
        an, ad = _real_choose_factors(float(n + spec.s_nhg), n)
        bn, bd = _real_choose_factors(w - n - spec.s_nhg - 1.0, M - n)
        dn, dd = _real_choose_factors(w, M)
        return an + bn + dd, ad + bd + dn
    raise TypeError(f"not a state spec: {spec!r}")


def _coefficient(num: list[float], den: list[float]) -> float:
    for i, f in enumerate(num):
        if f < ZERO_THRESHOLD:
            if f <= -ZERO_THRESHOLD:
                raise NonPositiveFactor(i, f)
            return 0.0
    # unit factors contribute log 0 but change how the summation pairs the
    # remaining terms; dropping them lets mirrored num/den lists (degenerate
    # parameter values) cancel exactly instead of to within an ulp
    half_log = 0.5 * (
        log_positive_product([f for f in num if f != 1.0]).log_magnitude
        - log_positive_product([f for f in den if f != 1.0]).log_magnitude
    )
    amp = math.exp(half_log)
    if amp == 0.0:
        raise NumericalUnderflow(
            f"coefficient underflows (log magnitude {half_log!r})"
        )
    return amp


def amplitudes(spec: StateSpec) -> FockAmplitudes:
    """Amplitude vector b_0..b_M of a validated state spec.

    Coefficients are evaluated in log space; results are nonnegative and
    sum-of-squares normalized to within NORMALIZATION_TOL, or
    NumericalUnderflow is raised.
    """
    validate(spec)
    amps = np.empty(spec.M + 1, dtype=float)
    for n in range(spec.M + 1):
        num, den = _factor_lists(spec, n)
        amps[n] = _coefficient(num, den)
    total = float(np.dot(amps, amps))
    if not abs(total - 1.0) <= NORMALIZATION_TOL:
        raise NumericalUnderflow(
            f"squared amplitudes sum to {total!r}; parameters are outside "
            "the supported numeric range"
        )
    return FockAmplitudes(amps, spec)


def amplitudes_direct(spec: StateSpec) -> np.ndarray:
    """Reference path: direct products of square-rooted factors.

    Linear-space evaluation, so it overflows where the log path does not.
    Kept as an independent cross-check of the transcription in
    _factor_lists; not used by the rest of the package.
    """
    validate(spec)
    out = np.empty(spec.M + 1, dtype=float)
    for n in range(spec.M + 1):
        num, den = _factor_lists(spec, n)
        acc = 1.0
        for f in num:
            acc *= math.sqrt(f) if f >= ZERO_THRESHOLD else 0.0
        for f in den:
            acc /= math.sqrt(f)
        out[n] = acc
    return out


def squared_distribution(spec: StateSpec) -> np.ndarray:
    """Photon-number probabilities b_n^2 of a state spec."""
    return np.square(amplitudes(spec).amplitudes)
