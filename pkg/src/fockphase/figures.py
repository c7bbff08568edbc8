"""Pinned parameter sets and data assembly for the four standard figures.

Figure 1: phase variance of hypergeometric states against the cutoff M,
          with a companion panel showing that the M = 1 variance does not
          depend on L.
Figure 2: phase densities of hypergeometric states for growing L against
          the binomial-state limit curve.
Figure 3: phase variance against eta for the Polya parameterization at
          several gamma (the negative hypergeometric family in its Polya
          image).
Figure 4: phase densities of negative hypergeometric states whose Polya
          image is balanced (eta = 0.5); the density develops one peak per
          photon of cutoff.

Every default below is data: it is recorded in the per-curve CSV metadata
and in the figure manifest so a reader can reproduce any curve exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import phase, states
from .phase import PartialPhaseState

FIGURE_IDS = (1, 2, 3, 4)

FIG1_ETA = 0.5
FIG1_L = 40.0
FIG1_M_VALUES = tuple(range(1, 9))
FIG1_L_VALUES = (3.0, 10.0, 40.0, 200.0, 1200.0)

FIG2_M = 5
FIG2_ETA = 0.5
FIG2_L_VALUES = (50.0, 200.0, 1200.0)
FIG2_GRID_POINTS = 4096

FIG3_M = 4
FIG3_GAMMAS = (0.1, 0.3, 0.5)
FIG3_ETA_GRID = tuple(k / 100.0 for k in range(5, 96))

FIG4_M_VALUES = (2, 3, 5)
FIG4_S = 0
FIG4_GRID_POINTS = 4096


@dataclass(frozen=True)
class Curve:
    """One CSV-worth of figure data."""

    name: str
    label: str
    columns: tuple[str, ...]
    rows: list[tuple]
    parameters: dict


@dataclass(frozen=True)
class Panel:
    xlabel: str
    ylabel: str
    curves: list[Curve] = field(default_factory=list)


@dataclass(frozen=True)
class FigureData:
    fig_id: int
    title: str
    panels: list[Panel]
    parameters: dict


def _variance_rows(template, param, values) -> list[tuple]:
    rows = []
    for row in phase.variance_sweep(template, param, list(values)):
        if row.error is not None:
            raise ValueError(f"figure sweep failed at {param}={row.value}: {row.error}")
        rows.append((row.value, row.variance))
    return rows


def _density_curve(spec, name, label, grid_points, extra_params) -> Curve:
    state = PartialPhaseState(states.amplitudes(spec))
    dist = phase.phase_distribution(state, grid_points)
    rows = list(zip(dist.thetas.tolist(), dist.values.tolist()))
    params = dict(extra_params)
    params["grid_points"] = grid_points
    params["mu"] = 0.0
    return Curve(name, label, ("theta", "density"), rows, params)


def _figure1() -> FigureData:
    sweep_m = _variance_rows(
        states.Hypergeometric(L=FIG1_L, M=1, eta=FIG1_ETA), "M", FIG1_M_VALUES
    )
    curve_m = Curve(
        "fig1_variance_vs_M",
        f"L={FIG1_L:g}",
        ("M", "variance"),
        sweep_m,
        {"family": "hgs", "eta": FIG1_ETA, "L": FIG1_L},
    )
    sweep_l = _variance_rows(
        states.Hypergeometric(L=FIG1_L, M=1, eta=FIG1_ETA), "L", FIG1_L_VALUES
    )
    curve_l = Curve(
        "fig1_m1_variance_vs_L",
        "M=1",
        ("L", "variance"),
        sweep_l,
        {"family": "hgs", "eta": FIG1_ETA, "M": 1},
    )
    return FigureData(
        1,
        "Phase variance of hypergeometric states",
        [
            Panel("M", "variance", [curve_m]),
            Panel("L", "variance", [curve_l]),
        ],
        {"eta": FIG1_ETA, "L": FIG1_L, "M_values": list(FIG1_M_VALUES),
         "L_values_at_M1": list(FIG1_L_VALUES)},
    )


def _figure2() -> FigureData:
    curves = []
    for L in FIG2_L_VALUES:
        curves.append(
            _density_curve(
                states.Hypergeometric(L=L, M=FIG2_M, eta=FIG2_ETA),
                f"fig2_hgs_L{L:g}",
                f"HGS L={L:g}",
                FIG2_GRID_POINTS,
                {"family": "hgs", "L": L, "M": FIG2_M, "eta": FIG2_ETA},
            )
        )
    curves.append(
        _density_curve(
            states.Binomial(eta=FIG2_ETA, M=FIG2_M),
            "fig2_bs",
            "BS",
            FIG2_GRID_POINTS,
            {"family": "binomial", "M": FIG2_M, "eta": FIG2_ETA},
        )
    )
    return FigureData(
        2,
        "Phase density: hypergeometric states approaching the binomial state",
        [Panel("theta", "density", curves)],
        {"M": FIG2_M, "eta": FIG2_ETA, "L_values": list(FIG2_L_VALUES),
         "grid_points": FIG2_GRID_POINTS},
    )


def _figure3() -> FigureData:
    curves = []
    for gamma in FIG3_GAMMAS:
        rows = _variance_rows(
            states.Polya(M=FIG3_M, gamma=gamma, eta=0.5), "eta", FIG3_ETA_GRID
        )
        name = f"fig3_gamma_{gamma:g}".replace(".", "p")
        curves.append(
            Curve(
                name,
                f"gamma={gamma:g}",
                ("eta", "variance"),
                rows,
                {"family": "polya", "M": FIG3_M, "gamma": gamma},
            )
        )
    return FigureData(
        3,
        "Phase variance across eta for the Polya parameterization",
        [Panel("eta", "variance", curves)],
        {"M": FIG3_M, "gammas": list(FIG3_GAMMAS),
         "eta_grid": [FIG3_ETA_GRID[0], FIG3_ETA_GRID[-1], 0.01]},
    )


def _figure4() -> FigureData:
    curves = []
    for M in FIG4_M_VALUES:
        # beta = 1/(M+1) with s = 0 lands the Polya image on eta = gamma = 0.5
        beta = 1.0 / (M + 1)
        curves.append(
            _density_curve(
                states.NegHypergeometric(M=M, beta=beta, s_nhg=FIG4_S),
                f"fig4_M{M}",
                f"M={M}",
                FIG4_GRID_POINTS,
                {"family": "nhgs", "M": M, "beta": beta, "s_nhg": FIG4_S},
            )
        )
    return FigureData(
        4,
        "Phase density of balanced negative hypergeometric states",
        [Panel("theta", "density", curves)],
        {"M_values": list(FIG4_M_VALUES), "s_nhg": FIG4_S,
         "beta_rule": "1/(M+1)", "grid_points": FIG4_GRID_POINTS},
    )


_BUILDERS = {1: _figure1, 2: _figure2, 3: _figure3, 4: _figure4}


def build_figure(fig_id: int) -> FigureData:
    if fig_id not in _BUILDERS:
        raise ValueError(f"figure id must be one of {FIGURE_IDS}, got {fig_id}")
    return _BUILDERS[fig_id]()
