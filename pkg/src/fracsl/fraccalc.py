"""Fractional-calculus operators on uniform grids.

Left and right Riemann-Liouville integrals, Riemann-Liouville and Caputo
derivatives, the L^2 operator-norm constant, and the operator identities
exposed as checkable relations (the ``check_*`` functions, which the CLI
``validate-ops`` subcommand and the test suite both run).

Conventions.  Orders are plain floats: integrals need ``alpha > 0``,
derivatives ``0 < alpha <= 1``, where ``alpha == 1`` short-circuits to
classical differentiation.  The quadrature is the product-trapezoid
rule: the integrand's smooth factor is replaced by its piecewise-linear
interpolant and the kernel ``(x-t)**(alpha-1)`` is integrated exactly
over each cell, so the rule is exact for piecewise-linear inputs.
Derivative outputs next to a kernel singularity (the 2 nodes nearest the
starting endpoint) are reported but not trustworthy; identity checks
measure either on that 2-node-excluded interior or, for references that
are themselves singular at an endpoint, on a 10% guard band per side.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .grids import Grid, SampledFunction, guard_band_slice

__all__ = [
    "IdentityCheck",
    "caputo_left",
    "caputo_right",
    "check_boundedness",
    "check_caputo_inverse",
    "check_derivative_composition",
    "check_fundamental_identity",
    "check_integration_by_parts",
    "check_left_inverse",
    "check_linearity",
    "check_power_laws",
    "check_semigroup",
    "gamma",
    "operator_norm_bound",
    "rl_derivative_left",
    "rl_derivative_right",
    "rl_integral_left",
    "rl_integral_right",
    "run_identity_suite",
]


def gamma(z: float) -> float:
    """Euler gamma function for positive arguments."""
    if not z > 0:
        raise ValueError(f"gamma requires z > 0, got {z}")
    return math.gamma(z)


def operator_norm_bound(alpha: float, a: float, b: float) -> float:
    """L^2 operator norm bound (b-a)**alpha / gamma(alpha+1) of I^alpha."""
    if not alpha > 0:
        raise ValueError(f"order must be positive, got {alpha}")
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    return (b - a) ** alpha / gamma(alpha + 1.0)


def _check_integral_order(alpha: float) -> None:
    if not alpha > 0:
        raise ValueError(f"integral order must be positive, got {alpha}")


def _check_derivative_order(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"derivative order must be in (0, 1], got {alpha}")


def rl_integral_left(f: SampledFunction, alpha: float) -> SampledFunction:
    """Left Riemann-Liouville integral (I^alpha_{a+} f); zero at x_0."""
    _check_integral_order(alpha)
    return f.with_values(_kernels.fracint_left(f.values, alpha, f.grid.h))


def rl_integral_right(f: SampledFunction, alpha: float) -> SampledFunction:
    """Right Riemann-Liouville integral (I^alpha_{b-} f); zero at x_n."""
    _check_integral_order(alpha)
    return f.with_values(_kernels.fracint_right(f.values, alpha, f.grid.h))


def _gradient(values: np.ndarray, h: float) -> np.ndarray:
    return np.gradient(values, h, edge_order=2)


def caputo_left(f: SampledFunction, f_prime: SampledFunction | None,
                alpha: float) -> SampledFunction:
    """Left Caputo derivative I^{1-alpha}_{a+} f'.

    With ``f_prime`` supplied, applies the product-trapezoid integral to
    it.  Without it, integrates the exact derivative of the
    piecewise-linear interpolant of ``f`` (whose cell slopes are the
    only derivative information the samples determine).
    """
    _check_derivative_order(alpha)
    h = f.grid.h
    if alpha == 1.0:
        if f_prime is not None:
            return f.with_values(f_prime.values.copy())
        return f.with_values(_gradient(f.values, h))
    if f_prime is not None:
        return f.with_values(_kernels.fracint_left(f_prime.values, 1.0 - alpha, h))
    return f.with_values(_kernels.caputo_left_l1(f.values, alpha, h))


def caputo_right(f: SampledFunction, f_prime: SampledFunction | None,
                 alpha: float) -> SampledFunction:
    """Right Caputo derivative -I^{1-alpha}_{b-} f'; mirror of caputo_left."""
    _check_derivative_order(alpha)
    h = f.grid.h
    if alpha == 1.0:
        if f_prime is not None:
            return f.with_values(-f_prime.values)
        return f.with_values(-_gradient(f.values, h))
    if f_prime is not None:
        return f.with_values(-_kernels.fracint_right(f_prime.values, 1.0 - alpha, h))
    return f.with_values(_kernels.caputo_right_l1(f.values, alpha, h))


def rl_derivative_left(f: SampledFunction, alpha: float) -> SampledFunction:
    """Left Riemann-Liouville derivative D(I^{1-alpha}_{a+} f).

    Central differences inside, one-sided (second order) at the
    endpoints.  The 2 nodes nearest ``a`` sit on the kernel singularity
    and are not trustworthy.
    """
    _check_derivative_order(alpha)
    if alpha == 1.0:
        return f.with_values(_gradient(f.values, f.grid.h))
    inner = _kernels.fracint_left(f.values, 1.0 - alpha, f.grid.h)
    return f.with_values(_gradient(inner, f.grid.h))


def rl_derivative_right(f: SampledFunction, alpha: float) -> SampledFunction:
    """Right Riemann-Liouville derivative -D(I^{1-alpha}_{b-} f)."""
    _check_derivative_order(alpha)
    if alpha == 1.0:
        return f.with_values(-_gradient(f.values, f.grid.h))
    inner = _kernels.fracint_right(f.values, 1.0 - alpha, f.grid.h)
    return f.with_values(-_gradient(inner, f.grid.h))


# --- checkable relations -------------------------------------------------

@dataclass
class IdentityCheck:
    """One measured identity: a label, the observed discrepancy, and the
    same discrepancy on a once-refined grid with their ratio (None where
    refinement is not part of the check)."""

    label: str
    error: float
    refined_error: float | None = None
    ratio: float | None = None


def _window_sup(values: np.ndarray, fraction: float = 0.1) -> float:
    n = len(values) - 1
    return float(np.max(np.abs(values[guard_band_slice(n, fraction)])))


def _ratio(coarse: float, fine: float) -> float:
    return coarse / fine if fine > 0 else math.inf


def _random_polynomial(rng: np.random.Generator, degree: int = 3) -> np.ndarray:
    """Coefficients (highest power first) with entries in [-1, 1]."""
    return rng.uniform(-1.0, 1.0, degree + 1)


def check_power_laws(grid_n: int = 2048,
                     alphas: tuple = (0.3, 0.5, 0.7),
                     betas: tuple = (1.2, 1.5, 2.0),
                     interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """Power-law identities for all four operators.

    I^a_{a+}(t-a)^(b-1) = G(b)/G(b+a) (x-a)^(b+a-1) and its right-sided
    mirror; D^a_{a+}(t-a)^(b-1) = G(b)/G(b-a) (x-a)^(b-a-1) and mirror.
    Errors are sup relative to the reference's sup, on the 10% guard
    window where references may be endpoint-singular.
    """
    a0, b0 = interval
    checks = []
    for alpha in alphas:
        for beta in betas:
            row = {}
            for n in (grid_n, 2 * grid_n):
                grid = Grid(a0, b0, n)
                x = grid.nodes()
                win = guard_band_slice(n)
                xw = x[win]
                f_left = SampledFunction(grid, (x - a0) ** (beta - 1.0))
                f_right = SampledFunction(grid, (b0 - x) ** (beta - 1.0))
                il = rl_integral_left(f_left, alpha).values[win]
                ir = rl_integral_right(f_right, alpha).values[win]
                dl = rl_derivative_left(f_left, alpha).values[win]
                dr = rl_derivative_right(f_right, alpha).values[win]
                ref_i = gamma(beta) / gamma(beta + alpha) * (xw - a0) ** (beta + alpha - 1.0)
                ref_ir = gamma(beta) / gamma(beta + alpha) * (b0 - xw) ** (beta + alpha - 1.0)
                ref_d = gamma(beta) / gamma(beta - alpha) * (xw - a0) ** (beta - alpha - 1.0)
                ref_dr = gamma(beta) / gamma(beta - alpha) * (b0 - xw) ** (beta - alpha - 1.0)
                for key, num, ref in (("I left", il, ref_i),
                                      ("I right", ir, ref_ir),
                                      ("D left", dl, ref_d),
                                      ("D right", dr, ref_dr)):
                    err = float(np.max(np.abs(num - ref)) / np.max(np.abs(ref)))
                    row.setdefault(key, []).append(err)
            for key, (coarse, fine) in row.items():
                checks.append(IdentityCheck(
                    f"power law {key} alpha={alpha} beta={beta}",
                    coarse, fine, _ratio(coarse, fine)))
    return checks


def check_semigroup(grid_n: int = 2048, seed: int = 20260814,
                    pairs: tuple = ((0.3, 0.4), (0.3, 0.6), (0.4, 0.6)),
                    interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """I^a(I^b f) = I^(a+b) f on random cubic polynomials."""
    a0, b0 = interval
    checks = []
    for alpha, beta in pairs:
        rng = np.random.default_rng(seed + int(100 * alpha + 10 * beta))
        coeffs = _random_polynomial(rng)
        errs = []
        for n in (grid_n, 2 * grid_n):
            grid = Grid(a0, b0, n)
            f = SampledFunction(grid, np.polyval(coeffs, grid.nodes()))
            lhs = rl_integral_left(rl_integral_left(f, beta), alpha)
            rhs = rl_integral_left(f, alpha + beta)
            errs.append(_window_sup(lhs.values - rhs.values))
        checks.append(IdentityCheck(
            f"semigroup alpha={alpha} beta={beta}",
            errs[0], errs[1], _ratio(errs[0], errs[1])))
    return checks


def check_left_inverse(grid_n: int = 2048, seed: int = 20260814,
                       alphas: tuple = (0.3, 0.5, 0.7),
                       interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """D^a(I^a f) = f on random cubic polynomials."""
    a0, b0 = interval
    checks = []
    for alpha in alphas:
        rng = np.random.default_rng(seed + int(1000 * alpha))
        coeffs = _random_polynomial(rng)
        errs = []
        for n in (grid_n, 2 * grid_n):
            grid = Grid(a0, b0, n)
            f = SampledFunction(grid, np.polyval(coeffs, grid.nodes()))
            lhs = rl_derivative_left(rl_integral_left(f, alpha), alpha)
            errs.append(_window_sup(lhs.values - f.values))
        checks.append(IdentityCheck(
            f"left inverse alpha={alpha}", errs[0], errs[1], _ratio(errs[0], errs[1])))
    return checks


def check_caputo_inverse(grid_n: int = 2048, seed: int = 20260814,
                         alphas: tuple = (0.3, 0.5, 0.7),
                         interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """^cD^a(I^a f) = f for continuous f, derivative-free Caputo path."""
    a0, b0 = interval
    checks = []
    for alpha in alphas:
        rng = np.random.default_rng(seed + int(1000 * alpha) + 1)
        coeffs = _random_polynomial(rng)
        errs = []
        for n in (grid_n, 2 * grid_n):
            grid = Grid(a0, b0, n)
            f = SampledFunction(grid, np.polyval(coeffs, grid.nodes()))
            lhs = caputo_left(rl_integral_left(f, alpha), None, alpha)
            errs.append(_window_sup(lhs.values - f.values))
        checks.append(IdentityCheck(
            f"caputo inverse alpha={alpha}", errs[0], errs[1], _ratio(errs[0], errs[1])))
    return checks


def check_fundamental_identity(grid_n: int = 2048, seed: int = 20260814,
                               alphas: tuple = (0.3, 0.5, 0.7),
                               interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """I^a(^cD^a f) = f - f(a) with the analytic derivative supplied."""
    a0, b0 = interval
    checks = []
    for alpha in alphas:
        rng = np.random.default_rng(seed + int(1000 * alpha) + 2)
        coeffs = _random_polynomial(rng)
        errs = []
        for n in (grid_n, 2 * grid_n):
            grid = Grid(a0, b0, n)
            x = grid.nodes()
            f = SampledFunction(grid, np.polyval(coeffs, x))
            fp = SampledFunction(grid, np.polyval(np.polyder(coeffs), x))
            lhs = rl_integral_left(caputo_left(f, fp, alpha), alpha)
            errs.append(_window_sup(lhs.values - (f.values - f.values[0])))
        checks.append(IdentityCheck(
            f"fundamental identity alpha={alpha}",
            errs[0], errs[1], _ratio(errs[0], errs[1])))
    return checks


def check_derivative_composition(grid_n: int = 2048, seed: int = 20260814,
                                 pairs: tuple = ((0.7, 0.3), (0.6, 0.4), (0.9, 0.5)),
                                 interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """D^b(I^a f) = I^(a-b) f for b < a on random cubic polynomials."""
    a0, b0 = interval
    checks = []
    for alpha, beta in pairs:
        rng = np.random.default_rng(seed + int(100 * alpha + 10 * beta))
        coeffs = _random_polynomial(rng)
        errs = []
        for n in (grid_n, 2 * grid_n):
            grid = Grid(a0, b0, n)
            f = SampledFunction(grid, np.polyval(coeffs, grid.nodes()))
            lhs = rl_derivative_left(rl_integral_left(f, alpha), beta)
            rhs = rl_integral_left(f, alpha - beta)
            errs.append(_window_sup(lhs.values - rhs.values))
        checks.append(IdentityCheck(
            f"derivative composition alpha={alpha} beta={beta}",
            errs[0], errs[1], _ratio(errs[0], errs[1])))
    return checks


def _nonvanishing_polynomial(rng: np.random.Generator, x: np.ndarray) -> np.ndarray:
    """Random cubic rejected until it stays well away from zero."""
    while True:
        coeffs = _random_polynomial(rng)
        values = np.polyval(coeffs, x)
        if np.min(np.abs(values)) > 0.2 * np.max(np.abs(values)):
            return coeffs


def check_integration_by_parts(grid_n: int = 2048, seed: int = 20260814,
                               n_pairs: int = 20,
                               alphas: tuple = (0.3, 0.4, 0.5),
                               interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """int f D^a_{a+}g = int g ^cD^a_{b-}f + [f I^(1-a)_{a+}g] at b.

    The boundary term at a vanishes since I^(1-a)g(a) = 0.  Reports the
    worst defect over ``n_pairs`` random (f, g) polynomial pairs per
    order; f is kept away from zero, both derivatives are analytic.
    """
    a0, b0 = interval
    checks = []
    for alpha in alphas:
        rng = np.random.default_rng(seed + int(1000 * alpha) + 3)
        defects = []
        refined = []
        for _ in range(n_pairs):
            f_coeffs = _nonvanishing_polynomial(rng, np.linspace(a0, b0, 257))
            g_coeffs = _random_polynomial(rng)
            for n, sink in ((grid_n, defects), (2 * grid_n, refined)):
                grid = Grid(a0, b0, n)
                x = grid.nodes()
                h = grid.h
                f = SampledFunction(grid, np.polyval(f_coeffs, x))
                fp = SampledFunction(grid, np.polyval(np.polyder(f_coeffs), x))
                g = SampledFunction(grid, np.polyval(g_coeffs, x))
                dg = rl_derivative_left(g, alpha)
                cf = caputo_right(f, fp, alpha)
                ig = rl_integral_left(g, 1.0 - alpha)
                lhs = np.trapezoid(f.values * dg.values, dx=h)
                rhs = np.trapezoid(g.values * cf.values, dx=h)
                boundary = f.values[-1] * ig.values[-1]
                sink.append(abs(lhs - rhs - boundary))
        worst = max(defects)
        worst_fine = max(refined)
        checks.append(IdentityCheck(
            f"integration by parts alpha={alpha} ({n_pairs} pairs)",
            worst, worst_fine, _ratio(worst, worst_fine)))
    return checks


def check_boundedness(grid_n: int = 1024, seed: int = 20260814,
                      betas: tuple = (0.25, 0.5, 0.75),
                      intervals: tuple = ((0.0, 1.0), (0.0, math.pi)),
                      trials: int = 100) -> list[IdentityCheck]:
    """||I^b f||_L2 <= K_b ||f||_L2 on random piecewise-linear inputs.

    Reports the worst ratio ||I^b f|| / (K_b ||f||); values must not
    exceed 1 + 1e-6.
    """
    checks = []
    for a0, b0 in intervals:
        for beta in betas:
            rng = np.random.default_rng(seed + int(100 * beta))
            grid = Grid(a0, b0, grid_n)
            h = grid.h
            bound = operator_norm_bound(beta, a0, b0)
            worst = 0.0
            for _ in range(trials):
                f = SampledFunction(grid, rng.uniform(-1.0, 1.0, grid_n + 1))
                out = rl_integral_left(f, beta)
                norm_in = math.sqrt(np.trapezoid(f.values ** 2, dx=h))
                norm_out = math.sqrt(np.trapezoid(out.values ** 2, dx=h))
                worst = max(worst, norm_out / (bound * norm_in))
            checks.append(IdentityCheck(
                f"boundedness beta={beta} interval=({a0:g},{b0:g})", worst))
    return checks


def check_linearity(grid_n: int = 512, seed: int = 20260814,
                    alpha: float = 0.6,
                    interval: tuple = (0.0, 1.0)) -> list[IdentityCheck]:
    """Each operator is linear in f to near machine precision."""
    a0, b0 = interval
    rng = np.random.default_rng(seed)
    grid = Grid(a0, b0, grid_n)
    f = SampledFunction(grid, rng.standard_normal(grid_n + 1))
    g = SampledFunction(grid, rng.standard_normal(grid_n + 1))
    c1, c2 = 0.7, -1.3
    combo = SampledFunction(grid, c1 * f.values + c2 * g.values)
    ops = (("rl_integral_left", lambda s: rl_integral_left(s, alpha)),
           ("rl_integral_right", lambda s: rl_integral_right(s, alpha)),
           ("caputo_left", lambda s: caputo_left(s, None, alpha)),
           ("caputo_right", lambda s: caputo_right(s, None, alpha)),
           ("rl_derivative_left", lambda s: rl_derivative_left(s, alpha)),
           ("rl_derivative_right", lambda s: rl_derivative_right(s, alpha)))
    checks = []
    for name, op in ops:
        lhs = op(combo).values
        rhs = c1 * op(f).values + c2 * op(g).values
        scale = max(float(np.max(np.abs(rhs))), 1.0)
        checks.append(IdentityCheck(
            f"linearity {name} alpha={alpha}",
            float(np.max(np.abs(lhs - rhs))) / scale))
    return checks


def run_identity_suite(grid_n: int = 2048) -> list[IdentityCheck]:
    """Every checkable relation at its default configuration."""
    checks = []
    checks += check_power_laws(grid_n=grid_n)
    checks += check_semigroup(grid_n=grid_n)
    checks += check_left_inverse(grid_n=grid_n)
    checks += check_caputo_inverse(grid_n=grid_n)
    checks += check_fundamental_identity(grid_n=grid_n)
    checks += check_derivative_composition(grid_n=grid_n)
    checks += check_integration_by_parts(grid_n=grid_n)
    checks += check_boundedness()
    checks += check_linearity()
    return checks
