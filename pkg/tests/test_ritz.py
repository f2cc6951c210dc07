"""Ritz assembly, spectra, and eigenfunction reconstruction."""

import math

import numpy as np
import pytest

from fracsl import (CoefficientField, Grid, ProblemSpec,
                    ProblemValidationError, assemble, build_basis,
                    converge_spectrum, eigenfunction_samples, oscillator_spec,
                    solve_spectrum)

# Internal consistency anchors: spectra first computed by this scheme at
# grid_n=2048, m=24, frozen to guard against regressions.  They are not
# external truths; criteria-level tests cover correctness.
FRACTIONAL_ANCHORS = {
    (0.0, math.pi, 0.6): [0.647588, 1.942004, 3.350337],
    (0.0, math.pi, 0.75): [0.758535, 2.512500, 4.805068],
    (0.0, math.pi, 0.9): [0.899038, 3.314330, 6.989377],
    (0.0, 0.5, 0.6): [5.876442, 17.622436, 30.402154],
    (0.0, 0.5, 0.75): [11.946630, 39.570889, 75.677945],
    (0.0, 0.5, 0.9): [24.575463, 90.598192, 191.056673],
}


def test_classical_assembly_is_diagonal():
    spec = oscillator_spec(1.0, (0.0, math.pi), 1.0)
    grid = Grid(0.0, math.pi, 512)
    system = assemble(spec, build_basis(spec, grid, 8))
    off = system.matrix - np.diag(np.diagonal(system.matrix))
    assert np.max(np.abs(off)) <= 1e-10 * np.max(np.abs(system.matrix))


def test_classical_eigenvalues_are_squares():
    spec = oscillator_spec(1.0, (0.0, math.pi), 1.0)
    grid = Grid(0.0, math.pi, 512)
    result = solve_spectrum(assemble(spec, build_basis(spec, grid, 8)), 5)
    assert np.allclose(result.eigenvalues, [1, 4, 9, 16, 25], rtol=1e-6)


def test_classical_interval_scaling():
    # lambda_j = (j pi / L)^2: quartering the interval multiplies by 16
    for length, scale in ((math.pi / 2, 4.0), (math.pi / 4, 16.0)):
        spec = oscillator_spec(1.0, (0.0, length), 1.0)
        grid = Grid(0.0, length, 512)
        result = solve_spectrum(assemble(spec, build_basis(spec, grid, 6)), 3)
        assert np.allclose(result.eigenvalues, scale * np.array([1, 4, 9]),
                           rtol=1e-6)


@pytest.mark.parametrize("key", sorted(FRACTIONAL_ANCHORS))
def test_fractional_spectra_anchors(key, oscillator_solution):
    a, b, alpha = key
    _, _, result = oscillator_solution(a, b, alpha)
    assert np.allclose(result.eigenvalues, FRACTIONAL_ANCHORS[key],
                       rtol=1e-5, atol=5e-7)


def test_coefficient_vectors_are_orthonormal(oscillator_solution):
    _, _, result = oscillator_solution(0.0, math.pi, 0.75)
    scale = (math.pi - 0.0) / 2.0
    gram = scale * result.coefficient_vectors @ result.coefficient_vectors.T
    assert np.max(np.abs(gram - np.eye(len(gram)))) <= 1e-10


def test_traces_nonincreasing_in_basis_size(oscillator_solution):
    _, _, result = oscillator_solution(0.0, math.pi, 0.6)
    for n, trace in result.traces.items():
        drops = np.diff(trace)
        assert np.all(drops <= 1e-10), f"trace {n} increased: {trace}"


def test_stagnation_is_small_at_default_resolution(oscillator_solution):
    _, _, result = oscillator_solution(0.0, math.pi, 0.75)
    assert 0.0 <= result.stagnation <= 1e-3


def test_eigenfunction_views(oscillator_solution):
    spec, grid, result = oscillator_solution(0.0, math.pi, 0.75)
    view = eigenfunction_samples(result, result.basis, 1)
    assert view.y.values[0] == 0.0 and view.y.values[-1] == 0.0
    assert view.boundary_values == (0.0, 0.0)
    norm = np.trapezoid(view.y.values ** 2, dx=grid.h)
    assert norm == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(IndexError):
        eigenfunction_samples(result, result.basis, 0)
    with pytest.raises(IndexError):
        eigenfunction_samples(result, result.basis, 99)


def test_first_eigenfunction_has_no_interior_zero(oscillator_solution):
    _, _, result = oscillator_solution(0.0, math.pi, 0.75)
    view = eigenfunction_samples(result, result.basis, 1)
    interior = view.y.values[1:-1]
    assert np.all(interior > 0.0)


def test_second_eigenfunction_changes_sign(oscillator_solution):
    _, _, result = oscillator_solution(0.0, math.pi, 0.75)
    view = eigenfunction_samples(result, result.basis, 2)
    interior = view.y.values[1:-1]
    assert interior.min() < 0.0 < interior.max()


def test_converge_spectrum_argument_validation():
    spec = oscillator_spec(1.0, (0.0, math.pi), 0.75)
    grid = Grid(0.0, math.pi, 256)
    with pytest.raises(ValueError):
        converge_spectrum(spec, grid, n_eigs=5, m_min=4, m_max=8)
    with pytest.raises(ValueError):
        converge_spectrum(spec, grid, n_eigs=2, m_min=4, m_max=64)


def test_inadmissible_problem_raises():
    spec = oscillator_spec(1.0, (0.0, 1.0), 0.4)
    grid = Grid(0.0, 1.0, 256)
    with pytest.raises(ProblemValidationError) as excinfo:
        build_basis(spec, grid, 8)
    assert excinfo.value.violations


def test_weighted_basis_uses_w():
    grid = Grid(0.0, math.pi, 512)
    spec = ProblemSpec(0.0, math.pi, 1.0,
                       p=CoefficientField.const(1.0),
                       q=CoefficientField.const(0.0),
                       w=CoefficientField.const(4.0))
    basis = build_basis(spec, grid, 4)
    # phi_k = sin(k s)/sqrt(w): halved amplitude for w = 4
    x = grid.nodes()
    assert np.allclose(basis.basis_samples[0][1:-1],
                       0.5 * np.sin(x[1:-1]), atol=1e-12)
    result = solve_spectrum(assemble(spec, basis), 2)
    # -y'' = lambda w y on [0, pi] gives lambda_j = j^2 / 4
    assert np.allclose(result.eigenvalues, [0.25, 1.0], rtol=1e-6)
