"""Combinatorial products with real arguments, evaluated stably.

The state families in :mod:`fockphase.states` are built from generalized
binomial coefficients x-choose-n (real upper argument), rising factorials,
and plain products of positive factors.  Linear-space evaluation of those
products overflows well inside the supported parameter range (intermediates
pass 1e40 already for moderate cutoffs), so amplitude construction goes
through sums of logarithms instead; this module provides both the direct
and the log-space primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

# Positive factors with magnitude below this are treated as an exact zero
# product: boundary parameter values (binomial eta of 0 or 1, for instance)
# legitimately zero a coefficient and must not be reported as errors.
ZERO_THRESHOLD = 1e-300


class NonPositiveFactor(ValueError):
    """A factor that must be strictly positive is zero or negative.

    This signals an invalid state specification upstream, not a numerical
    problem in the product evaluation itself.
    """

    def __init__(self, index: int, value: float):
        super().__init__(f"factor at position {index} is not strictly positive: {value!r}")
        self.index = index
        self.value = value


@dataclass(frozen=True)
class LogFactorProduct:
    """Natural logarithm of a product of strictly positive factors."""

    log_magnitude: float
    factor_count: int

    def value(self) -> float:
        """Exponentiate back to the plain product."""
        return float(np.exp(self.log_magnitude))


def gen_binomial(x: float, n: int) -> float:
    """Generalized binomial coefficient x(x-1)...(x-n+1)/n! for real x.

    The empty product (n == 0) is exactly 1.  For integer x with
    0 <= x < n the running product hits the factor (x - x) and the result
    is an exact 0.
    """
    if n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    acc = 1.0
    for j in range(n):
        acc *= (x - j) / (j + 1)
    return acc


def pochhammer(x: float, n: int) -> float:
    """Rising factorial x(x+1)...(x+n-1), with the empty product equal to 1."""
    if n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    acc = 1.0
    for j in range(n):
        acc *= x + j
    return acc


def log_positive_product(factors: Iterable[float]) -> LogFactorProduct:
    """Sum the natural logs of strictly positive factors.

    Raises NonPositiveFactor at the first factor <= 0 (or NaN).  Callers
    that want small factors collapsed to an exact zero product filter
    against ZERO_THRESHOLD before calling (see fockphase.states).
    """
    arr = np.asarray(tuple(factors), dtype=float)
    if arr.size == 0:
        return LogFactorProduct(0.0, 0)
    bad = np.flatnonzero(~(arr > 0.0))
    if bad.size:
        i = int(bad[0])
        raise NonPositiveFactor(i, float(arr[i]))
    return LogFactorProduct(float(np.log(arr).sum()), int(arr.size))
