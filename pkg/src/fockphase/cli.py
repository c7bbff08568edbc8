"""Command-line interface.

Subcommands
-----------
amplitudes          Fock amplitudes of one state spec
phase-stats         closed-form phase mean/variance (optionally cross-checked
                    against the finite-window construction via --oracle)
phase-dist          phase density sampled on the circular grid
figure              render one of the four standard figures: CSV per curve,
                    a JSON manifest, and a rendered PNG
equivalence-check   three-way amplitude comparison of the negative
                    hypergeometric state against its Polya and Hahn images

Exit codes: 0 success, 1 usage/parse error, 2 domain/validation error,
3 check failed (equivalence mismatch beyond tolerance).

Output is CSV by default (JSON via --format json): '#'-prefixed metadata
lines carrying the full parameter manifest, a header row, then data rows.
Floats are printed with shortest round-trip precision, so parsing the
output and recomputing derived columns reproduces the printed values
exactly; repeated runs produce identical bytes.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import equivalence, figures, oracle, phase, states
from .equivalence import DomainError
from .oracle import IndexOutOfWindow
from .phase import GridTooCoarse, PartialPhaseState
from .specfun import NonPositiveFactor
from .states import ConstraintViolated, NumericalUnderflow

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CHECK_FAILED = 3

SCHEMA_VERSION = "1"


class UsageError(Exception):
    """Command-line arguments are structurally wrong for the subcommand."""


@dataclass(frozen=True)
class OutputRecord:
    """One serializable result table."""

    command: str
    parameters: dict
    columns: tuple[str, ...]
    rows: list[tuple]
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row width {len(row)} != column count {len(self.columns)}"
                )


def _scalar(v):
    """Normalize numpy scalars so json/repr round-trip cleanly."""
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    return v


def _fmt(v) -> str:
    v = _scalar(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def record_to_csv(record: OutputRecord) -> str:
    lines = [
        f"# schema_version={record.schema_version}",
        f"# command={record.command}",
    ]
    lines += [f"# {k}={_fmt(v)}" for k, v in record.parameters.items()]
    lines.append(",".join(record.columns))
    lines += [",".join(_fmt(v) for v in row) for row in record.rows]
    return "\n".join(lines) + "\n"


def record_to_json(record: OutputRecord) -> str:
    obj = {
        "schema_version": record.schema_version,
        "command": record.command,
        "parameters": {k: _scalar(v) for k, v in record.parameters.items()},
        "columns": list(record.columns),
        "rows": [[_scalar(v) for v in row] for row in record.rows],
    }
    return json.dumps(obj, indent=2) + "\n"


def _emit(record: OutputRecord, args) -> None:
    text = record_to_json(record) if args.format == "json" else record_to_csv(record)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on parse errors by default; 2 is reserved for domain
    # errors here, so usage failures are remapped to exit 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_FAMILY_CLASSES = {
    "binomial": states.Binomial,
    "hgs": states.Hypergeometric,
    "polya": states.Polya,
    "hahn": states.Hahn,
    "nhgs": states.NegHypergeometric,
}
_FAMILY_NAMES = {cls: name for name, cls in _FAMILY_CLASSES.items()}
_FAMILY_FIELDS = {
    "binomial": ("eta", "M"),
    "hgs": ("L", "M", "eta"),
    "polya": ("M", "gamma", "eta"),
    "hahn": ("alpha", "beta_h", "M"),
    "nhgs": ("M", "beta", "s_nhg"),
}
_FLAG_NAMES = {
    "eta": "--eta",
    "M": "--M",
    "L": "--L",
    "gamma": "--gamma",
    "alpha": "--alpha",
    "beta_h": "--beta-h",
    "beta": "--beta",
    "s_nhg": "--s",
}


def _add_state_arguments(sp) -> None:
    g = sp.add_argument_group("state family")
    g.add_argument("--family", required=True, choices=sorted(_FAMILY_CLASSES),
                   help="state family")
    g.add_argument("--eta", type=float, help="success probability parameter")
    g.add_argument("--M", type=int, help="Fock cutoff")
    g.add_argument("--L", type=float, help="hypergeometric depth parameter (real)")
    g.add_argument("--gamma", type=float, help="Polya spread parameter")
    g.add_argument("--alpha", type=float, help="Hahn parameter alpha")
    g.add_argument("--beta-h", dest="beta_h", type=float, help="Hahn parameter beta_h")
    g.add_argument("--beta", type=float, help="negative hypergeometric beta")
    g.add_argument("--s", dest="s_nhg", type=int,
                   help="negative hypergeometric shift (integer)")


def _build_spec(args) -> states.StateSpec:
    wanted = _FAMILY_FIELDS[args.family]
    kwargs = {}
    for name in wanted:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"family '{args.family}' requires {_FLAG_NAMES[name]}")
        kwargs[name] = value
    for name, flag in _FLAG_NAMES.items():
        if name not in wanted and getattr(args, name) is not None:
            raise UsageError(f"{flag} does not apply to family '{args.family}'")
    return _FAMILY_CLASSES[args.family](**kwargs)


def _spec_parameters(spec: states.StateSpec) -> dict:
    params = {"family": _FAMILY_NAMES[type(spec)]}
    for f in dataclasses.fields(spec):
        params[f.name] = getattr(spec, f.name)
    return params


def _cmd_amplitudes(args) -> int:
    spec = _build_spec(args)
    amps = states.amplitudes(spec).amplitudes
    rows = [(n, float(b), float(b * b)) for n, b in enumerate(amps)]
    record = OutputRecord(
        "amplitudes", _spec_parameters(spec), ("n", "amplitude", "probability"), rows
    )
    _emit(record, args)
    return EXIT_OK


def _cmd_phase_stats(args) -> int:
    spec = _build_spec(args)
    state = PartialPhaseState(states.amplitudes(spec), args.mu)
    stats = phase.phase_statistics(state)
    params = _spec_parameters(spec)
    params["mu"] = args.mu
    columns = ["mean", "variance"]
    row = [stats.mean, stats.variance]
    if args.oracle is not None:
        window = oracle.symmetric_window(args.oracle, args.mu)
        finite = oracle.finite_moments(window, state)
        params["oracle_s_pb"] = args.oracle
        columns += ["oracle_mean", "oracle_variance"]
        row += [finite.mean, finite.variance]
    record = OutputRecord("phase-stats", params, tuple(columns), [tuple(row)])
    _emit(record, args)
    return EXIT_OK


def _cmd_phase_dist(args) -> int:
    spec = _build_spec(args)
    state = PartialPhaseState(states.amplitudes(spec), args.mu)
    dist = phase.phase_distribution(state, args.grid_points)
    params = _spec_parameters(spec)
    params["mu"] = args.mu
    params["grid_points"] = args.grid_points
    rows = list(zip(dist.thetas.tolist(), dist.values.tolist()))
    record = OutputRecord("phase-dist", params, ("theta", "density"), rows)
    _emit(record, args)
    return EXIT_OK


def _cmd_equivalence_check(args) -> int:
    M, beta, s_nhg = args.M, args.beta, args.s_nhg
    nhg = states.amplitudes(
        states.NegHypergeometric(M=M, beta=beta, s_nhg=s_nhg)
    ).amplitudes
    image = equivalence.polya_from_nhg(M, beta, s_nhg)
    pol = states.amplitudes(
        states.Polya(M=M, gamma=image.gamma, eta=image.eta)
    ).amplitudes
    alpha, beta_h = equivalence.hahn_from_nhg(M, beta, s_nhg)
    hah = states.amplitudes(states.Hahn(alpha=alpha, beta_h=beta_h, M=M)).amplitudes
    rows = []
    worst = 0.0
    for n in range(M + 1):
        trio = (float(nhg[n]), float(pol[n]), float(hah[n]))
        diff = max(trio) - min(trio)
        worst = max(worst, diff)
        rows.append((n, *trio, diff))
    params = {
        "M": M,
        "beta": beta,
        "s_nhg": s_nhg,
        "tol": args.tol,
        "polya_eta": image.eta,
        "polya_gamma": image.gamma,
        "hahn_alpha": alpha,
        "hahn_beta_h": beta_h,
    }
    record = OutputRecord(
        "equivalence-check",
        params,
        ("n", "nhgs", "polya", "hahn", "max_pairwise_diff"),
        rows,
    )
    _emit(record, args)
    if worst <= args.tol:
        return EXIT_OK
    print(
        f"equivalence check failed: max pairwise difference {worst!r} "
        f"exceeds tolerance {args.tol!r}",
        file=sys.stderr,
    )
    return EXIT_CHECK_FAILED


def _cmd_figure(args) -> int:
    fig = figures.build_figure(args.id)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for panel in fig.panels:
        for curve in panel.curves:
            params = {"figure": fig.fig_id, **curve.parameters}
            record = OutputRecord("figure", params, curve.columns, curve.rows)
            path = outdir / f"{curve.name}.csv"
            with open(path, "w", newline="\n") as fh:
                fh.write(record_to_csv(record))
            written.append(path)
    png_name = None
    if not args.no_plot:
        from . import plotting  # deferred: matplotlib is slow to import

        png_path = outdir / f"fig{fig.fig_id}.png"
        plotting.render_figure(fig, png_path)
        written.append(png_path)
        png_name = png_path.name
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "figure": fig.fig_id,
        "title": fig.title,
        "parameters": fig.parameters,
        "files": [p.name for p in written],
        "png": png_name,
    }
    manifest_path = outdir / f"fig{fig.fig_id}_manifest.json"
    with open(manifest_path, "w", newline="\n") as fh:
        fh.write(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    written.append(manifest_path)
    for p in written:
        print(p)
    return EXIT_OK


def _add_format_arguments(sp) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="output format (default csv)")
    sp.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="fockphase", allow_abbrev=False,
                             description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_ArgumentParser)

    sp = sub.add_parser("amplitudes", help="Fock amplitudes of a state spec",
                        allow_abbrev=False)
    _add_state_arguments(sp)
    _add_format_arguments(sp)
    sp.set_defaults(func=_cmd_amplitudes)

    sp = sub.add_parser("phase-stats", help="closed-form phase mean and variance",
                        allow_abbrev=False)
    _add_state_arguments(sp)
    sp.add_argument("--mu", type=float, default=0.0,
                    help="mean phase in (-pi, pi] (default 0)")
    sp.add_argument("--oracle", type=int, metavar="S_PB",
                    help="also report finite-window moments at this dimension parameter")
    _add_format_arguments(sp)
    sp.set_defaults(func=_cmd_phase_stats)

    sp = sub.add_parser("phase-dist", help="phase density on the circular grid",
                        allow_abbrev=False)
    _add_state_arguments(sp)
    sp.add_argument("--mu", type=float, default=0.0,
                    help="mean phase in (-pi, pi] (default 0)")
    sp.add_argument("--grid-points", dest="grid_points", type=int,
                    default=phase.DEFAULT_GRID_POINTS,
                    help=f"grid size (default {phase.DEFAULT_GRID_POINTS})")
    _add_format_arguments(sp)
    sp.set_defaults(func=_cmd_phase_dist)

    sp = sub.add_parser("figure", help="render one standard figure",
                        allow_abbrev=False)
    sp.add_argument("--id", type=int, required=True, choices=figures.FIGURE_IDS,
                    help="figure number")
    sp.add_argument("--out-dir", dest="out_dir", default="figures",
                    help="directory for the CSV/PNG/manifest set (default ./figures)")
    sp.add_argument("--no-plot", dest="no_plot", action="store_true",
                    help="skip PNG rendering, write only CSVs and the manifest")
    sp.set_defaults(func=_cmd_figure)

    sp = sub.add_parser("equivalence-check",
                        help="three-way family equivalence at one parameter point",
                        allow_abbrev=False)
    sp.add_argument("--M", type=int, required=True, help="Fock cutoff")
    sp.add_argument("--beta", type=float, required=True,
                    help="negative hypergeometric beta")
    sp.add_argument("--s", dest="s_nhg", type=int, required=True,
                    help="negative hypergeometric shift")
    sp.add_argument("--tol", type=float, default=1e-12,
                    help="max allowed pairwise amplitude difference (default 1e-12)")
    _add_format_arguments(sp)
    sp.set_defaults(func=_cmd_equivalence_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        ConstraintViolated,
        NumericalUnderflow,
        GridTooCoarse,
        DomainError,
        NonPositiveFactor,
        IndexOutOfWindow,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
