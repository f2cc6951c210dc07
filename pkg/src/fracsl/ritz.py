"""Ritz discretization of the fractional Sturm-Liouville problem.

The trial space is spanned by weighted sines

    phi_k(x) = sin(k * s(x)) / sqrt(w(x)),   s(x) = pi (x - a) / (b - a),

which vanish at both endpoints for every k.  Minimizing the energy
J(y) = int p (^cD^alpha_{a+} y)^2 + q y^2 over the span with the
normalization int w y^2 = 1 is, in coefficient space, a symmetric
eigenproblem: the constraint is the Euclidean sphere
``constraint_scale * ||beta||^2 = 1`` with ``constraint_scale =
(b-a)/2`` (pi/2 when [a, b] = [0, pi]), and successive
minima on orthogonal complements are exactly the ordered eigenpairs of
the assembled form matrix.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, fraccalc
from .grids import Grid, SampledFunction
from .problem import ProblemSpec, validate

__all__ = [
    "EigenfunctionView",
    "ProblemValidationError",
    "RitzBasis",
    "RitzSystem",
    "SpectrumResult",
    "assemble",
    "build_basis",
    "converge_spectrum",
    "eigenfunction_samples",
    "solve_spectrum",
]


class ProblemValidationError(ValueError):
    """Raised when a spec fails admissibility checks at build time."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass
class RitzBasis:
    """Sampled basis functions and their Caputo derivatives.

    ``basis_samples[k-1]`` holds phi_k at the nodes, ``basis_caputo[k-1]``
    holds (^cD^alpha_{a+} phi_k); both are (m, n+1) arrays.
    """

    m: int
    grid: Grid
    alpha: float
    basis_samples: np.ndarray = field(repr=False)
    basis_caputo: np.ndarray = field(repr=False)


@dataclass
class RitzSystem:
    """Assembled quadratic form and the sphere-constraint scale."""

    matrix: np.ndarray = field(repr=False)
    constraint_scale: float


@dataclass
class SpectrumResult:
    """Ordered eigenvalues, their coefficient vectors, and m-traces.

    ``coefficient_vectors[i]`` is beta^(i+1), normalized so that
    ``constraint_scale * ||beta||^2 = 1`` with the first nonzero entry
    positive.  ``traces[n]`` (1-based n) tracks lambda^(n) over
    ``m_values``; ``stagnation`` is the largest relative change of any
    reported eigenvalue over the last basis increment (NaN when only
    one basis size was solved).
    """

    eigenvalues: np.ndarray
    coefficient_vectors: np.ndarray = field(repr=False)
    m: int
    alpha: float | None = None
    traces: dict[int, np.ndarray] | None = None
    m_values: np.ndarray | None = None
    stagnation: float | None = None
    basis: RitzBasis | None = field(default=None, repr=False)


def build_basis(spec: ProblemSpec, grid: Grid, m: int) -> RitzBasis:
    """Sample the weighted sine basis and its Caputo derivatives.

    When w carries an analytic derivative the chain rule gives phi_k'
    exactly and the Caputo derivative integrates it; otherwise the
    derivative-free Caputo path is used.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    report = validate(spec, grid)
    if not report.is_admissible:
        raise ProblemValidationError(report.violations)
    x = grid.nodes()
    stretch = math.pi / (spec.b - spec.a)
    s = stretch * (x - spec.a)
    w = spec.w.sample(grid)
    sqrt_w = np.sqrt(w)
    dw = spec.w.sample_derivative(grid)
    phi = np.empty((m, grid.n + 1))
    cap = np.empty((m, grid.n + 1))
    for k in range(1, m + 1):
        sin_k = np.sin(k * s)
        phi_k = sin_k / sqrt_w
        phi_k[0] = phi_k[-1] = 0.0
        phi[k - 1] = phi_k
        sampled = SampledFunction(grid, phi_k)
        if dw is not None:
            dphi = (k * stretch * np.cos(k * s) / sqrt_w
                    - sin_k * dw / (2.0 * w * sqrt_w))
            prime = SampledFunction(grid, dphi)
            cap[k - 1] = fraccalc.caputo_left(sampled, prime, spec.alpha).values
        else:
            cap[k - 1] = fraccalc.caputo_left(sampled, None, spec.alpha).values
    return RitzBasis(m, grid, spec.alpha, phi, cap)


def assemble(spec: ProblemSpec, basis: RitzBasis) -> RitzSystem:
    """Composite-trapezoid assembly of the energy form matrix.

    A[k, j] = int_a^b p (^cD phi_k)(^cD phi_j) + q phi_k phi_j dx,
    symmetrized as (A + A^T)/2.
    """
    grid = basis.grid
    p = spec.p.sample(grid)
    q = spec.q.sample(grid)
    weights = np.full(grid.n + 1, grid.h)
    weights[0] = weights[-1] = grid.h / 2.0
    cap = basis.basis_caputo
    phi = basis.basis_samples
    matrix = (cap * (p * weights)) @ cap.T + (phi * (q * weights)) @ phi.T
    matrix = (matrix + matrix.T) / 2.0
    if not np.all(np.isfinite(matrix)):
        raise ArithmeticError(
            "assembled form has non-finite entries (quadrature blowup)"
        )
    return RitzSystem(matrix, (spec.b - spec.a) / 2.0)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """First nonzero coefficient of each column made positive."""
    out = vectors.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        nonzero = np.nonzero(np.abs(col) > 1e-12 * np.max(np.abs(col)))[0]
        if len(nonzero) and col[nonzero[0]] < 0:
            out[:, j] = -col
    return out


def solve_spectrum(system: RitzSystem, n_eigs: int) -> SpectrumResult:
    """Full symmetric eigendecomposition, smallest n_eigs pairs returned.

    lambda^(n) = (n-th eigenvalue of A) / constraint_scale and beta^(n)
    is the matching eigenvector scaled onto the constraint sphere.
    """
    m = system.matrix.shape[0]
    if not 1 <= n_eigs <= m:
        raise ValueError(f"need 1 <= n_eigs <= {m}, got {n_eigs}")
    eigvals, eigvecs = _kernels.eigh_symmetric(system.matrix)
    order = np.argsort(eigvals, kind="stable")
    scale = system.constraint_scale
    lam = eigvals[order][:n_eigs] / scale
    beta = _fix_signs(eigvecs[:, order][:, :n_eigs] / math.sqrt(scale))
    return SpectrumResult(eigenvalues=lam, coefficient_vectors=beta.T, m=m)


def converge_spectrum(spec: ProblemSpec, grid: Grid, n_eigs: int,
                      m_min: int, m_max: int) -> SpectrumResult:
    """Solve for every basis size m_min..m_max and record the traces.

    Assembly happens once at m_max; the m-dimensional system is its
    leading principal submatrix (identical quadrature, entry for entry).
    The trace monotonicity lambda_{m+1} <= lambda_m is the nesting of
    the trial spaces made visible.
    """
    if not 1 <= n_eigs <= m_min <= m_max:
        raise ValueError(
            f"need 1 <= n_eigs <= m_min <= m_max, got {n_eigs}, {m_min}, {m_max}"
        )
    if 8 * m_max > grid.n:
        raise ValueError(
            f"basis underresolved: need grid.n >= 8*m_max, got n={grid.n}, m_max={m_max}"
        )
    basis = build_basis(spec, grid, m_max)
    system = assemble(spec, basis)
    m_values = np.arange(m_min, m_max + 1)
    trace_rows = np.empty((len(m_values), n_eigs))
    final = None
    for i, m in enumerate(m_values):
        sub = RitzSystem(system.matrix[:m, :m], system.constraint_scale)
        result = solve_spectrum(sub, n_eigs)
        trace_rows[i] = result.eigenvalues
        if m == m_max:
            final = result
    if len(m_values) > 1:
        last, prev = trace_rows[-1], trace_rows[-2]
        stagnation = float(np.max(np.abs(last - prev) / (1.0 + np.abs(last))))
    else:
        stagnation = math.nan
    return SpectrumResult(
        eigenvalues=final.eigenvalues,
        coefficient_vectors=final.coefficient_vectors,
        m=m_max,
        alpha=spec.alpha,
        traces={n + 1: trace_rows[:, n].copy() for n in range(n_eigs)},
        m_values=m_values,
        stagnation=stagnation,
        basis=basis,
    )


@dataclass
class EigenfunctionView:
    """Nodal samples of one eigenfunction and its Caputo derivative."""

    index: int
    y: SampledFunction
    caputo: SampledFunction
    boundary_values: tuple[float, float]


def eigenfunction_samples(result: SpectrumResult, basis: RitzBasis,
                          n: int) -> EigenfunctionView:
    """Materialize y^(n) = sum_k beta_k phi_k on the grid (n is 1-based)."""
    if not 1 <= n <= len(result.eigenvalues):
        raise IndexError(
            f"eigenfunction index {n} out of range 1..{len(result.eigenvalues)}"
        )
    beta = result.coefficient_vectors[n - 1]
    if len(beta) != basis.m:
        raise ValueError("basis dimension does not match coefficient vectors")
    y = beta @ basis.basis_samples
    cap = beta @ basis.basis_caputo
    return EigenfunctionView(
        index=n,
        y=SampledFunction(basis.grid, y),
        caputo=SampledFunction(basis.grid, cap),
        boundary_values=(float(y[0]), float(y[-1])),
    )
