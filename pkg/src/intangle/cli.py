"""Command-line front end emitting the library's datasets as CSV or JSON.

One subcommand per dataset family: single-lambda reports, lambda scans,
wavefunction profiles, angular-momentum distributions (with the Lorentzian
model alongside), approximation comparisons, finite-dimensional uncertainty
data, and the contour-sum identity table.  Output is deterministic: the
same invocation produces byte-identical bytes.

Exit codes: 0 success, 1 I/O failure, 2 invalid arguments, 3 numerical
failure (equality residual above the ``AUT_TOL`` tolerance, quadrature
non-convergence, or a failed ``sums --check``).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__, approx, continuum, finite_dim
from .quad import QuadratureError
from .specfun import CancellationError

PI = math.pi

DEFAULT_RESIDUAL_TOL = 1e-9

_SCAN_COLUMNS = ["lambda", "delta_phi", "delta_m", "product", "bound",
                 "residual", "p_pi"]
_WAVEFUNCTION_COLUMNS = ["phi", "psi", "density"]
_DISTRIBUTION_COLUMNS = ["m", "c_exact", "p_exact", "c_lorentzian",
                         "p_lorentzian"]
_COMPARE_COLUMNS = ["lambda", "quantity", "exact", "perturbative",
                    "wavefunction_approx", "lorentzian"]
_FINITE_COLUMNS = ["lambda", "L", "dphi", "dlz", "product", "rs_bound",
                   "approx_bound", "commutator_defect"]
_SUMS_COLUMNS = ["identity", "closed_form", "brute_force", "abs_difference"]


@dataclass
class RunConfig:
    """Validated invocation parameters for one CLI run."""

    command: str
    fmt: str = "csv"
    output: Optional[str] = None
    lam: Optional[float] = None
    lambda_min: Optional[float] = None
    lambda_max: Optional[float] = None
    steps: Optional[int] = None
    m_max: Optional[int] = None
    L: Optional[int] = None
    epsilon: float = 1e-6
    points: int = 361
    approx_model: str = "lorentzian"
    check: bool = False


def _residual_tolerance() -> float:
    raw = os.environ.get("AUT_TOL", "")
    if not raw:
        return DEFAULT_RESIDUAL_TOL
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"AUT_TOL is not a number: {raw!r}") from None


def _format_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return format(float(x), ".17g")


def emit(rows: list[dict], columns: list[str], fmt: str, sink,
         single_object: bool = False) -> None:
    """Write the dataset to an open text sink.

    CSV emits the header plus one line per row, LF-terminated, fields
    formatted with 17 significant digits (round-trip exact).  JSON emits a
    list of row objects (or a bare object when ``single_object`` is set),
    with nulls for missing values.
    """
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_format_cell(row.get(c)) for c in columns))
        sink.write("\n".join(lines) + "\n")
        return
    def clean(row):
        return {c: (None if row.get(c) is None else row[c]) for c in columns}
    payload = clean(rows[0]) if single_object else [clean(r) for r in rows]
    json.dump(payload, sink, indent=2)
    sink.write("\n")


def _report_row(rep: continuum.UncertaintyReport) -> dict:
    return {
        "lambda": rep.lam,
        "delta_phi": rep.delta_phi,
        "delta_m": rep.delta_m,
        "product": rep.product,
        "bound": rep.bound,
        "residual": rep.residual,
        "p_pi": rep.p_pi,
    }


def _check_residuals(rows: list[dict], tol: float) -> Optional[str]:
    for row in rows:
        if abs(row["residual"]) > tol * max(1.0, row["product"]):
            return (f"equality residual {row['residual']:.3e} at "
                    f"lambda={row['lambda']} exceeds tolerance {tol:.1e}")
    return None


def _cmd_report(cfg: RunConfig):
    rows = [_report_row(continuum.report(cfg.lam))]
    return rows, _SCAN_COLUMNS, _check_residuals(rows, _residual_tolerance())


def _cmd_scan(cfg: RunConfig):
    grid = np.linspace(cfg.lambda_min, cfg.lambda_max, cfg.steps)
    rows = [_report_row(continuum.report(float(lam))) for lam in grid]
    return rows, _SCAN_COLUMNS, _check_residuals(rows, _residual_tolerance())


def _cmd_wavefunction(cfg: RunConfig):
    state = continuum.make_state(cfg.lam)
    phis = np.linspace(-PI, PI, cfg.points)
    rows = []
    for phi in phis:
        # the window is [-pi, pi); the right edge is the periodic image
        psi = continuum.wavefunction(state, float(phi) if phi < PI else -PI)
        rows.append({"phi": float(phi), "psi": psi, "density": psi * psi})
    return rows, _WAVEFUNCTION_COLUMNS, None


def _cmd_distribution(cfg: RunConfig):
    state = continuum.make_state(cfg.lam)
    if cfg.m_max is not None:
        m_max = cfg.m_max
        amps = continuum.oam_amplitudes(state, np.arange(-m_max, m_max + 1))
    else:
        dist = continuum.oam_distribution(cfg.lam, cfg.epsilon)
        m_max, amps = dist.m_max, dist.amplitudes
    lor = None
    if cfg.approx_model == "lorentzian" and cfg.lam < 0.0:
        lor = approx.lorentzian_report(cfg.lam, m_max).amplitudes.amplitudes
    rows = []
    for i, m in enumerate(range(-m_max, m_max + 1)):
        c = float(amps[i])
        row = {"m": m, "c_exact": c, "p_exact": c * c,
               "c_lorentzian": None, "p_lorentzian": None}
        if lor is not None:
            cl = float(lor[i])
            row["c_lorentzian"] = cl
            row["p_lorentzian"] = cl * cl
        rows.append(row)
    return rows, _DISTRIBUTION_COLUMNS, None


def _compare_rows(lam: float) -> list[dict]:
    exact = continuum.report(lam)
    pert = approx.perturbative_report(lam)
    wvf = approx.wavefunction_report(lam) if lam < 0.0 else None
    lor = (approx.lorentzian_report(lam, m_max=1).report
           if lam < 0.0 else None)
    exact_values = {
        "delta_phi": exact.delta_phi,
        "delta_m": exact.delta_m,
        "product": exact.product,
        "bound": exact.bound,
    }
    rows = []
    for quantity, value in exact_values.items():
        rows.append({
            "lambda": lam,
            "quantity": quantity,
            "exact": value,
            "perturbative": getattr(pert, quantity),
            "wavefunction_approx": getattr(wvf, quantity) if wvf else None,
            "lorentzian": lor.delta_m if lor and quantity == "delta_m" else None,
        })
    return rows


def _cmd_compare(cfg: RunConfig):
    grid = np.linspace(cfg.lambda_min, cfg.lambda_max, cfg.steps)
    rows = []
    for lam in grid:
        rows.extend(_compare_rows(float(lam)))
    return rows, _COMPARE_COLUMNS, None


def _cmd_finite(cfg: RunConfig):
    space = finite_dim.FiniteSpace(L=cfg.L)
    state = finite_dim.embed_intelligent(cfg.lam, space)
    rep = finite_dim.rs_report(state)
    defect = float(np.max(np.abs(
        finite_dim.commutator(space, "direct")
        - finite_dim.commutator(space, "closed_form")
    )))
    rows = [{
        "lambda": cfg.lam,
        "L": cfg.L,
        "dphi": rep.dphi,
        "dlz": rep.dlz,
        "product": rep.product,
        "rs_bound": rep.rs_bound,
        "approx_bound": rep.approx_bound,
        "commutator_defect": defect,
    }]
    return rows, _FINITE_COLUMNS, None


def _brute_inv_m4(terms: int) -> float:
    m = np.arange(1, terms + 1, dtype=float)
    return 2.0 * float(np.sum(1.0 / m**4))


def _brute_alternating(phi: float, terms: int) -> float:
    m = np.arange(1, terms + 1, dtype=float)
    signs = np.where(np.arange(1, terms + 1) & 1, -1.0, 1.0)
    return 2.0 * float(np.sum(signs * np.cos(m * phi) / (m * m)))


def _brute_lorentzian_sum(a: float, terms: int) -> float:
    m = np.arange(1, terms + 1, dtype=float)
    return 1.0 / a**4 + 2.0 * float(np.sum(1.0 / (a * a + m * m) ** 2))


def _brute_lorentzian_m2_sum(a: float, terms: int) -> float:
    # The summand decays like 1/m**2, so a bare partial sum truncates at
    # ~2/terms; the remainder integrates in closed form and the midpoint
    # rule leaves an error far below 1e-12.
    m = np.arange(1, terms + 1, dtype=float)
    partial = 2.0 * float(np.sum(m * m / (a * a + m * m) ** 2))
    edge = terms + 0.5
    tail = (PI / (2.0 * a) - math.atan(edge / a) / a
            + edge / (a * a + edge * edge))
    return partial + tail


def _cmd_sums(cfg: RunConfig):
    terms = 10**6
    ident = approx.closed_sums()
    a = PI
    entries = [
        ("inv_m4", ident.inv_m4, _brute_inv_m4(terms)),
        ("alternating_fourier_at_0", ident.alternating_fourier(0.0),
         _brute_alternating(0.0, terms)),
        ("lorentzian_sum_at_pi", ident.lorentzian_sum(a),
         _brute_lorentzian_sum(a, terms)),
        ("lorentzian_m2_sum_at_pi", ident.lorentzian_m2_sum(a),
         _brute_lorentzian_m2_sum(a, terms)),
    ]
    rows = [{"identity": name, "closed_form": closed, "brute_force": brute,
             "abs_difference": abs(closed - brute)}
            for name, closed, brute in entries]
    failure = None
    if cfg.check:
        bad = [r for r in rows if r["abs_difference"] > 1e-10]
        if bad:
            failure = "identity check failed: " + ", ".join(
                f"{r['identity']} (diff {r['abs_difference']:.2e})" for r in bad
            )
    return rows, _SUMS_COLUMNS, failure


_COMMANDS = {
    "report": _cmd_report,
    "scan": _cmd_scan,
    "wavefunction": _cmd_wavefunction,
    "distribution": _cmd_distribution,
    "compare": _cmd_compare,
    "finite": _cmd_finite,
    "sums": _cmd_sums,
}


def run(config: RunConfig) -> int:
    """Execute one validated configuration; returns the process exit code."""
    rows, columns, failure = _COMMANDS[config.command](config)
    single = config.command == "report" and config.fmt == "json"
    if config.output is None:
        emit(rows, columns, config.fmt, sys.stdout, single_object=single)
    else:
        with open(config.output, "w", encoding="utf-8", newline="") as sink:
            emit(rows, columns, config.fmt, sink, single_object=single)
    if failure is not None:
        print(f"numerical failure: {failure}", file=sys.stderr)
        return 3
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", default=None,
                     help="output path (default: standard output)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     dest="fmt", help="output format (default csv)")


def _add_grid(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--lambda-min", type=float, required=True,
                     dest="lambda_min")
    sub.add_argument("--lambda-max", type=float, required=True,
                     dest="lambda_max")
    sub.add_argument("--steps", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intangle",
        description="Angle/angular-momentum uncertainty-equality datasets",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("report", help="uncertainty report for one lambda")
    p.add_argument("--lambda", type=float, required=True, dest="lam")
    _add_common(p)

    p = commands.add_parser("scan", help="uncertainty report over a lambda grid")
    _add_grid(p)
    _add_common(p)

    p = commands.add_parser("wavefunction", help="wavefunction profile on the window")
    p.add_argument("--lambda", type=float, required=True, dest="lam")
    p.add_argument("--points", type=int, default=361,
                   help="grid size across [-pi, pi] (default 361)")
    _add_common(p)

    p = commands.add_parser("distribution",
                            help="angular-momentum distribution (lambda <= 0)")
    p.add_argument("--lambda", type=float, required=True, dest="lam")
    p.add_argument("--epsilon", type=float, default=1e-6,
                   help="probability tail budget (default 1e-6)")
    p.add_argument("--m-max", type=int, default=None, dest="m_max",
                   help="override the automatic truncation")
    p.add_argument("--approx", choices=("lorentzian", "none"),
                   default="lorentzian", dest="approx_model",
                   help="companion model columns (default lorentzian)")
    _add_common(p)

    p = commands.add_parser("compare",
                            help="exact values vs every approximation")
    _add_grid(p)
    _add_common(p)

    p = commands.add_parser("finite",
                            help="finite-dimensional uncertainty data")
    p.add_argument("--lambda", type=float, required=True, dest="lam")
    p.add_argument("--L", type=int, required=True)
    _add_common(p)

    p = commands.add_parser("sums", help="contour-sum identity table")
    p.add_argument("--check", action="store_true",
                   help="exit 3 unless every identity matches to 1e-10")
    _add_common(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, fmt=args.fmt, output=args.output)
    for name in ("lam", "lambda_min", "lambda_max", "steps", "m_max", "L",
                 "epsilon", "points", "approx_model", "check"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if cfg.command in ("scan", "compare"):
        if not cfg.lambda_min < cfg.lambda_max:
            raise ValueError("--lambda-min must be below --lambda-max")
        if cfg.steps < 2:
            raise ValueError("--steps must be at least 2")
    if cfg.command == "wavefunction" and cfg.points < 2:
        raise ValueError("--points must be at least 2")
    if cfg.command == "distribution":
        if not 0.0 < cfg.epsilon < 1.0:
            raise ValueError("--epsilon must lie in (0, 1)")
        if cfg.m_max is not None and cfg.m_max < 1:
            raise ValueError("--m-max must be positive")
    if cfg.command == "finite" and cfg.L < 1:
        raise ValueError("--L must be a positive integer")
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (QuadratureError, CancellationError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
