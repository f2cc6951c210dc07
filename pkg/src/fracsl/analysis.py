"""Variational functionals, residual checks, and the oscillator suite.

Everything here evaluates solved eigenpairs: the energy J and
normalization I with their Rayleigh quotient R = J/I, minimality checks
for R, strong-form residuals of the eigenvalue equation in both its
right-Caputo and right-Riemann-Liouville forms, and the eigenvalue
inequalities between fractional oscillators of different orders.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import fraccalc
from .grids import Grid, SampledFunction, interior_slice
from .problem import CoefficientField, ProblemSpec
from .ritz import (EigenfunctionView, RitzBasis, SpectrumResult,
                   converge_spectrum, eigenfunction_samples)

__all__ = [
    "BoundRow",
    "BoundSuiteReport",
    "DegenerateCandidateError",
    "FunctionalValues",
    "RayleighReport",
    "ResidualReport",
    "classical_eigenvalue",
    "euler_lagrange_residual",
    "evaluate_functionals",
    "fsle_residual",
    "oscillator_bound_suite",
    "oscillator_spec",
    "rayleigh_minimum_check",
]


class DegenerateCandidateError(ValueError):
    """The candidate function has nonpositive normalization I(y)."""


@dataclass(frozen=True)
class FunctionalValues:
    """Energy J, normalization I, Rayleigh quotient R = J/I."""

    J: float
    I: float
    R: float


def evaluate_functionals(spec: ProblemSpec, y: SampledFunction,
                         y_caputo: SampledFunction) -> FunctionalValues:
    """Composite-trapezoid values of J, I and their quotient.

    J(y) = int p (^cD^alpha y)^2 + q y^2 dx,  I(y) = int w y^2 dx.
    """
    grid = y.grid
    h = grid.h
    p = spec.p.sample(grid)
    q = spec.q.sample(grid)
    w = spec.w.sample(grid)
    j_val = float(np.trapezoid(p * y_caputo.values ** 2 + q * y.values ** 2, dx=h))
    i_val = float(np.trapezoid(w * y.values ** 2, dx=h))
    if i_val <= 0:
        raise DegenerateCandidateError(
            f"normalization I(y) = {i_val} is not positive"
        )
    return FunctionalValues(j_val, i_val, j_val / i_val)


@dataclass
class ResidualReport:
    """Strong-form residual r(x) of the eigenvalue equation.

    ``l2_norm`` integrates r^2 over the interior nodes only (2 nodes
    dropped after each endpoint, where the kernel quadrature is
    untrustworthy); ``boundary_flux`` is p * (^cD^alpha_{a+} y) at x=b.
    For the Euler-Lagrange variant, ``difference_samples`` and
    ``difference_l2`` hold the gap to the Caputo-form residual, which is
    exactly the endpoint term flux(b) (b-x)^(-alpha)/Gamma(1-alpha) and
    so shrinks with the boundary flux.
    """

    residual_samples: SampledFunction
    l2_norm: float
    boundary_flux: float
    difference_samples: SampledFunction | None = None
    difference_l2: float | None = None


def _interior_l2(values: np.ndarray, grid: Grid) -> float:
    window = interior_slice(grid.n)
    return float(math.sqrt(np.trapezoid(values[window] ** 2, dx=grid.h)))


def _flux(spec: ProblemSpec, view: EigenfunctionView) -> SampledFunction:
    p = spec.p.sample(view.y.grid)
    return SampledFunction(view.y.grid, p * view.caputo.values)


def _source_term(spec: ProblemSpec, view: EigenfunctionView,
                 lam: float) -> np.ndarray:
    grid = view.y.grid
    q = spec.q.sample(grid)
    w = spec.w.sample(grid)
    return q * view.y.values - lam * w * view.y.values


def fsle_residual(spec: ProblemSpec, view: EigenfunctionView,
                  lam: float) -> ResidualReport:
    """Residual of ^cD^alpha_{b-}[p ^cD^alpha_{a+} y] + q y - lambda w y."""
    flux = _flux(spec, view)
    outer = fraccalc.caputo_right(flux, None, spec.alpha)
    r = outer.values + _source_term(spec, view, lam)
    samples = SampledFunction(view.y.grid, r)
    return ResidualReport(samples, _interior_l2(r, view.y.grid),
                          float(flux.values[-1]))


def euler_lagrange_residual(spec: ProblemSpec, view: EigenfunctionView,
                            lam: float) -> ResidualReport:
    """Same residual with the right Riemann-Liouville derivative.

    The two right derivatives of the flux differ exactly by
    flux(b) (b-x)^(-alpha)/Gamma(1-alpha), so the reported difference
    vanishes with the boundary flux (and identically when alpha = 1).
    """
    flux = _flux(spec, view)
    source = _source_term(spec, view, lam)
    grid = view.y.grid
    outer_rl = fraccalc.rl_derivative_right(flux, spec.alpha)
    outer_caputo = fraccalc.caputo_right(flux, None, spec.alpha)
    r = outer_rl.values + source
    diff = outer_rl.values - outer_caputo.values
    return ResidualReport(
        SampledFunction(grid, r),
        _interior_l2(r, grid),
        float(flux.values[-1]),
        difference_samples=SampledFunction(grid, diff),
        difference_l2=_interior_l2(diff, grid),
    )


@dataclass
class RayleighReport:
    """Minimality diagnostics for the Rayleigh quotient.

    ``r_values[i]`` is R(y^(i+1)) and must match ``lambda_values[i]``;
    ``trial_min_gap`` is min over random admissible perturbations of
    R(trial) - R(y^(1)) and must not be meaningfully negative;
    ``zeta_prime_max`` is the largest finite-difference directional
    derivative of R at y^(1), which vanishes at a minimum.
    """

    lambda_values: np.ndarray
    r_values: np.ndarray
    trial_min_gap: float
    zeta_prime_max: float
    n_trials: int

    @property
    def first_is_min(self) -> bool:
        return bool(np.argmin(self.r_values) == 0)


def rayleigh_minimum_check(spec: ProblemSpec, result: SpectrumResult,
                           basis: RitzBasis, n_trials: int = 50,
                           seed: int = 20260814) -> RayleighReport:
    """Verify R(y^(n)) = lambda^(n) and that y^(1) minimizes R.

    Trial functions are y^(1) + h eta with eta a random combination of
    the sine basis (admissible: vanishes at both endpoints) and
    |h| <= 0.1; their Caputo derivatives combine the precomputed basis
    derivatives, so no extra quadrature error enters.
    """
    if len(result.eigenvalues) < 2:
        raise ValueError("need at least 2 computed eigenpairs")
    views = [eigenfunction_samples(result, basis, n)
             for n in range(1, len(result.eigenvalues) + 1)]
    r_values = np.array([
        evaluate_functionals(spec, v.y, v.caputo).R for v in views
    ])
    first = views[0]
    r_first = r_values[0]
    rng = np.random.default_rng(seed)
    n_dirs = min(basis.m, 8)
    w = spec.w.sample(basis.grid)

    def random_direction():
        c = rng.standard_normal(n_dirs)
        eta = c @ basis.basis_samples[:n_dirs]
        eta_cap = c @ basis.basis_caputo[:n_dirs]
        scale = math.sqrt(np.trapezoid(w * eta ** 2, dx=basis.grid.h))
        return eta / scale, eta_cap / scale

    def rayleigh_at(offset, eta, eta_cap):
        y = SampledFunction(basis.grid, first.y.values + offset * eta)
        cap = SampledFunction(basis.grid, first.caputo.values + offset * eta_cap)
        return evaluate_functionals(spec, y, cap).R

    min_gap = math.inf
    for _ in range(n_trials):
        eta, eta_cap = random_direction()
        offset = rng.uniform(-0.1, 0.1)
        min_gap = min(min_gap, rayleigh_at(offset, eta, eta_cap) - r_first)
    zeta_prime = 0.0
    for _ in range(3):
        eta, eta_cap = random_direction()
        for step in (1e-3, 1e-4):
            fd = (rayleigh_at(step, eta, eta_cap)
                  - rayleigh_at(-step, eta, eta_cap)) / (2.0 * step)
            zeta_prime = max(zeta_prime, abs(fd))
    return RayleighReport(
        lambda_values=result.eigenvalues.copy(),
        r_values=r_values,
        trial_min_gap=min_gap,
        zeta_prime_max=zeta_prime,
        n_trials=n_trials,
    )


def oscillator_spec(p0: float, interval: tuple[float, float],
                    alpha: float) -> ProblemSpec:
    """The oscillator instance: p constant, q = 0, w = 1."""
    a, b = interval
    return ProblemSpec(a, b, alpha,
                       p=CoefficientField.const(p0),
                       q=CoefficientField.const(0.0),
                       w=CoefficientField.const(1.0))


def classical_eigenvalue(p0: float, interval: tuple[float, float],
                         j: int) -> float:
    """lambda^(j) = p0 (j pi / (b-a))^2 for alpha = 1."""
    a, b = interval
    return p0 * (j * math.pi / (b - a)) ** 2


@dataclass(frozen=True)
class BoundRow:
    """One checked inequality lambda^(j)(alpha1) <= bound(alpha2)."""

    alpha1: float
    alpha2: float
    j: int
    K: float
    lhs: float
    rhs: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.margin >= 0.0


@dataclass
class BoundSuiteReport:
    rows: list[BoundRow]

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.rows)


def oscillator_bound_suite(p0: float, interval: tuple[float, float],
                           order_pairs, j_max: int, grid_n: int = 2048,
                           m_max: int = 24) -> BoundSuiteReport:
    """Eigenvalue inequalities between oscillator orders.

    For each pair alpha1 < alpha2 and j <= j_max the applicable bound is
    lambda^(j)(alpha1) <= lambda^(j)(alpha2) when K = K_{alpha2-alpha1}
    is at most 1, and <= K^2 lambda^(j)(alpha2) otherwise.  alpha2 = 1
    uses the closed-form classical eigenvalues rather than a degenerate
    fractional solve.
    """
    if not p0 > 0:
        raise ValueError(f"need p0 > 0, got {p0}")
    pairs = [(float(a1), float(a2)) for a1, a2 in order_pairs]
    for a1, a2 in pairs:
        if not (0.5 < a1 < a2 <= 1.0):
            raise ValueError(
                f"orders must satisfy 1/2 < alpha1 < alpha2 <= 1, got {(a1, a2)}"
            )
    a, b = interval
    grid = Grid(a, b, grid_n)
    fractional = sorted({al for pair in pairs for al in pair if al < 1.0})
    spectra = {}
    for al in fractional:
        result = converge_spectrum(oscillator_spec(p0, interval, al), grid,
                                   n_eigs=j_max, m_min=max(4, j_max),
                                   m_max=m_max)
        spectra[al] = result.eigenvalues
    rows = []
    for a1, a2 in pairs:
        k_bound = fraccalc.operator_norm_bound(a2 - a1, a, b)
        for j in range(1, j_max + 1):
            lhs = float(spectra[a1][j - 1])
            lam2 = (classical_eigenvalue(p0, interval, j) if a2 == 1.0
                    else float(spectra[a2][j - 1]))
            rhs = lam2 if k_bound <= 1.0 else k_bound ** 2 * lam2
            rows.append(BoundRow(a1, a2, j, k_bound, lhs, rhs))
    return BoundSuiteReport(rows)
