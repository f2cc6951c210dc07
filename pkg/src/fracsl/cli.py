"""Command-line front end.

Subcommands:

* ``solve``             solve one eigenvalue problem and write spectrum,
                        eigenfunction samples, and residual diagnostics
* ``oscillator-suite``  check the cross-order eigenvalue inequalities
* ``validate-ops``      run the fractional-operator identity checks
* ``rayleigh-check``    verify Rayleigh-quotient minimality numerically

Exit status is 0 on success, 2 when inputs fail validation (unreadable
or inadmissible problem files, inconsistent sizes), and 1 on internal
errors.  Output files are deterministic: rerunning a command with the
same inputs reproduces them byte for byte.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import _serialize, analysis, fraccalc
from .grids import Grid
from .problem import load_problem
from .ritz import ProblemValidationError, converge_spectrum, eigenfunction_samples

__all__ = ["RunConfig", "main"]

_FORMATS = ("json", "csv", "both")


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs of a solver run."""

    spec_path: Path
    grid_n: int
    m_max: int
    n_eigs: int
    out_dir: Path
    fmt: str = "both"

    def __post_init__(self):
        if self.n_eigs < 1:
            raise ValueError(f"need at least 1 eigenvalue, got {self.n_eigs}")
        if self.m_max < self.n_eigs:
            raise ValueError(
                f"m_max={self.m_max} cannot resolve {self.n_eigs} eigenvalues"
            )
        if self.grid_n < 8 * self.m_max:
            raise ValueError(
                f"grid_n={self.grid_n} is below 8*m_max={8 * self.m_max}; "
                "the largest basis function would be under-resolved"
            )
        if self.fmt not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}")

    @property
    def m_min(self) -> int:
        return max(4, self.n_eigs)


def _add_solve_args(sub):
    sub.add_argument("--spec", required=True, type=Path,
                     help="problem file (INI format)")
    sub.add_argument("--grid-n", type=int, default=2048,
                     help="number of grid cells (default 2048)")
    sub.add_argument("--m-max", type=int, default=24,
                     help="largest Ritz basis size (default 24)")
    sub.add_argument("--eigs", type=int, default=5,
                     help="number of eigenvalues to report (default 5)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracsl",
        description="Fractional Sturm-Liouville eigenvalue solver",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    solve = subs.add_parser("solve", help="solve one eigenvalue problem")
    _add_solve_args(solve)
    solve.add_argument("--out", required=True, type=Path,
                       help="output directory")
    solve.add_argument("--format", choices=_FORMATS, default="both",
                       help="which output files to write (default both)")

    osc = subs.add_parser("oscillator-suite",
                          help="cross-order eigenvalue inequality checks")
    osc.add_argument("--interval", default="0,1",
                     help="endpoints as 'a,b' (default 0,1)")
    osc.add_argument("--p", type=float, default=1.0,
                     help="constant coefficient p (default 1)")
    osc.add_argument("--orders", default="0.6,0.75,0.9,1.0",
                     help="comma-separated orders; all increasing pairs "
                          "are checked (default 0.6,0.75,0.9,1.0)")
    osc.add_argument("--jmax", type=int, default=5,
                     help="check eigenvalues 1..jmax (default 5)")
    osc.add_argument("--grid-n", type=int, default=2048)
    osc.add_argument("--m-max", type=int, default=24)
    osc.add_argument("--out", type=Path, default=Path("."),
                     help="directory for bounds.csv (default .)")

    ops = subs.add_parser("validate-ops",
                          help="fractional-operator identity checks")
    ops.add_argument("--grid-n", type=int, default=2048)

    ray = subs.add_parser("rayleigh-check",
                          help="Rayleigh-quotient minimality checks")
    _add_solve_args(ray)
    ray.add_argument("--trials", type=int, default=50,
                     help="random perturbations to test (default 50)")
    return parser


def _cmd_solve(args) -> int:
    cfg = RunConfig(args.spec, args.grid_n, args.m_max, args.eigs,
                    args.out, args.format)
    spec = _load_spec(cfg.spec_path)
    grid = Grid(spec.a, spec.b, cfg.grid_n)
    result = converge_spectrum(spec, grid, cfg.n_eigs, cfg.m_min, cfg.m_max)
    views = [eigenfunction_samples(result, result.basis, n)
             for n in range(1, cfg.n_eigs + 1)]
    reports = [analysis.fsle_residual(spec, view, float(lam))
               for view, lam in zip(views, result.eigenvalues)]

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    if cfg.fmt in ("json", "both"):
        _serialize.dump_json(_serialize.spectrum_dict(spec.alpha, result),
                             cfg.out_dir / "spectrum.json")
    if cfg.fmt in ("csv", "both"):
        eig_dir = cfg.out_dir / "eigenfunctions"
        eig_dir.mkdir(exist_ok=True)
        x = grid.nodes()
        for n, view in enumerate(views, start=1):
            _serialize.samples_csv(
                eig_dir / f"eig_{n}.csv", x,
                {"y": view.y.values, "caputo_y": view.caputo.values})
        _serialize.residual_rows_csv(
            cfg.out_dir / "residuals.csv",
            [(n, float(lam), rep.l2_norm, rep.boundary_flux)
             for n, (lam, rep) in enumerate(
                 zip(result.eigenvalues, reports), start=1)])

    print(f"solved: alpha={spec.alpha:g} grid_n={cfg.grid_n} "
          f"m={result.m} stagnation={result.stagnation:.3e}")
    for n, (lam, rep) in enumerate(zip(result.eigenvalues, reports), start=1):
        print(f"eig {n}: lambda={lam:.12e} residual_l2={rep.l2_norm:.6e} "
              f"boundary_flux={rep.boundary_flux:.6e}")
    return 0


def _cmd_oscillator_suite(args) -> int:
    try:
        a, b = (float(v) for v in args.interval.split(","))
        orders = sorted(float(v) for v in args.orders.split(","))
    except ValueError as exc:
        raise ValueError(f"could not parse interval/orders: {exc}") from exc
    if len(orders) < 2:
        raise ValueError("need at least two orders to form a pair")
    pairs = [(orders[i], orders[j])
             for i in range(len(orders)) for j in range(i + 1, len(orders))]
    report = analysis.oscillator_bound_suite(
        args.p, (a, b), pairs, args.jmax,
        grid_n=args.grid_n, m_max=args.m_max)
    args.out.mkdir(parents=True, exist_ok=True)
    _serialize.bounds_rows_csv(args.out / "bounds.csv", report.rows)
    for a1, a2 in pairs:
        rows = [r for r in report.rows if (r.alpha1, r.alpha2) == (a1, a2)]
        worst = min(r.margin for r in rows)
        status = "ok" if all(r.passed for r in rows) else "VIOLATED"
        print(f"pair alpha1={a1:g} alpha2={a2:g} K={rows[0].K:.6f} "
              f"min_margin={worst:.6e} {status}")
    n_pass = sum(r.passed for r in report.rows)
    print(f"bound suite: {n_pass}/{len(report.rows)} inequalities hold")
    return 0


def _cmd_validate_ops(args) -> int:
    if args.grid_n < 64:
        raise ValueError(f"grid_n={args.grid_n} is too coarse; need >= 64")
    checks = fraccalc.run_identity_suite(grid_n=args.grid_n)
    bad = 0
    for check in checks:
        line = f"{check.label}: error={check.error:.3e}"
        if check.ratio is not None:
            line += f" refined={check.refined_error:.3e} ratio={check.ratio:.2f}"
        print(line)
        if not (check.error == check.error and check.error < float("inf")):
            bad += 1
    print(f"identity suite: {len(checks)} checks, {bad} non-finite")
    return 1 if bad else 0


def _cmd_rayleigh_check(args) -> int:
    cfg = RunConfig(args.spec, args.grid_n, args.m_max, max(2, args.eigs),
                    Path("."))
    spec = _load_spec(cfg.spec_path)
    grid = Grid(spec.a, spec.b, cfg.grid_n)
    result = converge_spectrum(spec, grid, cfg.n_eigs, cfg.m_min, cfg.m_max)
    report = analysis.rayleigh_minimum_check(spec, result, result.basis,
                                             n_trials=args.trials)
    worst_gap = float(max(abs(report.r_values - report.lambda_values)
                          / (1.0 + abs(report.lambda_values))))
    print(f"rayleigh check: alpha={spec.alpha:g} eigs={len(report.r_values)}")
    print(f"max |R(y_n) - lambda_n| (relative): {worst_gap:.3e}")
    print(f"min R(trial) - R(y_1) over {report.n_trials} trials: "
          f"{report.trial_min_gap:.3e}")
    print(f"max |zeta'(0)| finite difference: {report.zeta_prime_max:.3e}")
    print(f"first eigenpair minimizes R: {report.first_is_min}")
    return 0


def _load_spec(path: Path):
    try:
        return load_problem(path)
    except (OSError, ValueError, KeyError) as exc:
        raise ValueError(f"cannot read problem file {path}: {exc}") from exc


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "oscillator-suite": _cmd_oscillator_suite,
        "validate-ops": _cmd_validate_ops,
        "rayleigh-check": _cmd_rayleigh_check,
    }
    try:
        return handlers[args.command](args)
    except (ProblemValidationError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
