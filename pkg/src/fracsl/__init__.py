"""Numerical solver for regular fractional Sturm-Liouville problems.

The eigenvalue problem couples a left Caputo derivative inside the flux
with a right Caputo derivative outside it, under homogeneous Dirichlet
conditions.  Eigenpairs are computed with a Ritz scheme over a stretched
sine basis; the supporting fractional calculus, problem validation,
residual diagnostics, and eigenvalue inequality checks are exported
here.
"""

from ._kernels import BACKEND
from .analysis import (BoundRow, BoundSuiteReport, DegenerateCandidateError,
                       FunctionalValues, RayleighReport, ResidualReport,
                       classical_eigenvalue, euler_lagrange_residual,
                       evaluate_functionals, fsle_residual,
                       oscillator_bound_suite, oscillator_spec,
                       rayleigh_minimum_check)
from .fraccalc import (IdentityCheck, caputo_left, caputo_right, gamma,
                       operator_norm_bound, rl_derivative_left,
                       rl_derivative_right, rl_integral_left,
                       rl_integral_right, run_identity_suite)
from .grids import Grid, SampledFunction
from .problem import (CoefficientField, HolderAdvisory, LowerBound,
                      ProblemSpec, ValidationReport, functional_lower_bound,
                      load_problem, save_problem, validate)
from .ritz import (EigenfunctionView, ProblemValidationError, RitzBasis,
                   RitzSystem, SpectrumResult, assemble, build_basis,
                   converge_spectrum, eigenfunction_samples, solve_spectrum)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundRow",
    "BoundSuiteReport",
    "CoefficientField",
    "DegenerateCandidateError",
    "EigenfunctionView",
    "FunctionalValues",
    "Grid",
    "HolderAdvisory",
    "IdentityCheck",
    "LowerBound",
    "ProblemSpec",
    "ProblemValidationError",
    "RayleighReport",
    "ResidualReport",
    "RitzBasis",
    "RitzSystem",
    "SampledFunction",
    "SpectrumResult",
    "ValidationReport",
    "assemble",
    "build_basis",
    "caputo_left",
    "caputo_right",
    "classical_eigenvalue",
    "converge_spectrum",
    "eigenfunction_samples",
    "euler_lagrange_residual",
    "evaluate_functionals",
    "fsle_residual",
    "functional_lower_bound",
    "gamma",
    "load_problem",
    "operator_norm_bound",
    "oscillator_bound_suite",
    "oscillator_spec",
    "rayleigh_minimum_check",
    "rl_derivative_left",
    "rl_derivative_right",
    "rl_integral_left",
    "rl_integral_right",
    "run_identity_suite",
    "save_problem",
    "solve_spectrum",
    "validate",
]
