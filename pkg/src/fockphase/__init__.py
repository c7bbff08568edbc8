"""Intermediate photon-number states and their Pegg-Barnett phase statistics.

The package builds five families of finite Fock-basis states (binomial,
hypergeometric, Polya, Hahn-coefficient, negative hypergeometric), exposes
the parameter maps identifying the last three, and computes the closed-form
phase mean, variance, and density of the resulting partial phase states,
together with a finite-window construction that validates the closed forms
by direct projection.
"""

from .specfun import (
    LogFactorProduct,
    NonPositiveFactor,
    gen_binomial,
    log_positive_product,
    pochhammer,
)
from .states import (
    Binomial,
    ConstraintViolated,
    FockAmplitudes,
    Hahn,
    Hypergeometric,
    NegHypergeometric,
    NumericalUnderflow,
    Polya,
    StateSpec,
    amplitudes,
    amplitudes_direct,
    squared_distribution,
    validate,
)
from .equivalence import (
    DomainError,
    PolyaParams,
    coefficients_agree,
    hahn_from_nhg,
    hahn_from_polya,
    nhg_amplitudes_pochhammer,
    polya_amplitudes_pochhammer,
    polya_from_hahn,
    polya_from_nhg,
)
from .phase import (
    DEFAULT_GRID_POINTS,
    DEFAULT_MIN_PROMINENCE,
    GridTooCoarse,
    PartialPhaseState,
    PhaseDistribution,
    PhaseStatistics,
    SweepRow,
    count_peaks,
    distribution_values,
    mean_phase,
    phase_distribution,
    phase_statistics,
    phase_variance,
    variance_sweep,
)
from .oracle import (
    FiniteWindow,
    IndexOutOfWindow,
    finite_distribution,
    finite_moments,
    phase_state_overlap,
    symmetric_window,
)

__version__ = "0.1.0"

__all__ = [
    "LogFactorProduct",
    "NonPositiveFactor",
    "gen_binomial",
    "log_positive_product",
    "pochhammer",
    "Binomial",
    "ConstraintViolated",
    "FockAmplitudes",
    "Hahn",
    "Hypergeometric",
    "NegHypergeometric",
    "NumericalUnderflow",
    "Polya",
    "StateSpec",
    "amplitudes",
    "amplitudes_direct",
    "squared_distribution",
    "validate",
    "DomainError",
    "PolyaParams",
    "coefficients_agree",
    "hahn_from_nhg",
    "hahn_from_polya",
    "nhg_amplitudes_pochhammer",
    "polya_amplitudes_pochhammer",
    "polya_from_hahn",
    "polya_from_nhg",
    "DEFAULT_GRID_POINTS",
    "DEFAULT_MIN_PROMINENCE",
    "GridTooCoarse",
    "PartialPhaseState",
    "PhaseDistribution",
    "PhaseStatistics",
    "SweepRow",
    "count_peaks",
    "distribution_values",
    "mean_phase",
    "phase_distribution",
    "phase_statistics",
    "phase_variance",
    "variance_sweep",
    "FiniteWindow",
    "IndexOutOfWindow",
    "finite_distribution",
    "finite_moments",
    "phase_state_overlap",
    "symmetric_window",
    "__version__",
]
