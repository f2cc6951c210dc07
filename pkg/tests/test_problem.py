"""Problem definition, admissibility validation, and INI round-trips."""

import math

import numpy as np
import pytest

from fracsl import (CoefficientField, Grid, ProblemSpec,
                    functional_lower_bound, load_problem, save_problem,
                    validate)
from fracsl.grids import SampledFunction


def _oscillator(alpha=0.75, a=0.0, b=math.pi):
    return ProblemSpec(a, b, alpha,
                       p=CoefficientField.const(1.0),
                       q=CoefficientField.const(0.0),
                       w=CoefficientField.const(1.0))


def test_coefficient_field_constructors():
    c = CoefficientField.const(2.5)
    assert c.kind == "constant" and c.has_analytic_derivative
    p = CoefficientField.polynomial([1.0, 0.0, 3.0])
    assert p.coeffs == (1.0, 0.0, 3.0)
    grid = Grid(0.0, 1.0, 4)
    t = CoefficientField.from_table(grid.sample(np.exp))
    assert not t.has_analytic_derivative


def test_coefficient_field_rejects_bad_kind_or_payload():
    with pytest.raises(ValueError):
        CoefficientField("spline")
    with pytest.raises(ValueError):
        CoefficientField("constant")
    with pytest.raises(ValueError):
        CoefficientField("polynomial")


def test_polynomial_sampling_is_lowest_power_first():
    grid = Grid(0.0, 2.0, 4)
    field = CoefficientField.polynomial([1.0, 0.0, 1.0])  # 1 + x^2
    assert np.allclose(field.sample(grid), 1.0 + grid.nodes() ** 2)
    der = field.sample_derivative(grid)
    assert np.allclose(der, 2.0 * grid.nodes())


def test_table_field_requires_matching_grid():
    grid = Grid(0.0, 1.0, 8)
    field = CoefficientField.from_table(grid.sample(np.cos))
    assert np.allclose(field.sample(grid), np.cos(grid.nodes()))
    assert field.sample_derivative(grid) is None
    with pytest.raises(ValueError):
        field.sample(Grid(0.0, 1.0, 16))


def test_problem_spec_domain_checks():
    with pytest.raises(ValueError):
        _oscillator(alpha=0.0)
    with pytest.raises(ValueError):
        _oscillator(alpha=1.2)
    with pytest.raises(ValueError):
        _oscillator(a=1.0, b=0.0)
    assert _oscillator(alpha=1.0).is_classical
    assert not _oscillator(alpha=0.75).is_classical


def test_validate_accepts_oscillator():
    spec = _oscillator()
    report = validate(spec, Grid(spec.a, spec.b, 256))
    assert report.is_admissible
    assert report.violations == []
    assert report.holder is not None


def test_validate_flags_order_outside_half_one():
    spec = _oscillator(alpha=0.4)
    report = validate(spec, Grid(spec.a, spec.b, 256))
    assert not report.is_admissible
    assert any("order" in v for v in report.violations)


def test_validate_flags_nonpositive_coefficients():
    spec = ProblemSpec(0.0, 1.0, 0.75,
                       p=CoefficientField.polynomial([0.0, 1.0]),  # p(0) = 0
                       q=CoefficientField.const(0.0),
                       w=CoefficientField.const(1.0))
    report = validate(spec, Grid(0.0, 1.0, 128))
    assert not report.is_admissible
    assert any("p" in v for v in report.violations)


def test_validate_requires_covering_grid():
    spec = _oscillator()
    with pytest.raises(ValueError):
        validate(spec, Grid(0.0, 1.0, 64))


def test_classical_order_is_admissible():
    report = validate(_oscillator(alpha=1.0), Grid(0.0, math.pi, 128))
    assert report.is_admissible


def test_functional_lower_bound_is_min_q_over_w():
    grid = Grid(0.0, math.pi, 256)
    q = CoefficientField.from_table(grid.sample(np.cos))
    spec = ProblemSpec(0.0, math.pi, 0.75,
                       p=CoefficientField.const(1.0), q=q,
                       w=CoefficientField.const(1.0))
    bound = functional_lower_bound(spec, grid)
    assert bound.value == pytest.approx(-1.0, abs=1e-10)
    assert functional_lower_bound(_oscillator(), grid).value == 0.0


def test_ini_round_trip_constant_and_polynomial(tmp_path):
    spec = ProblemSpec(0.0, math.pi, 0.75,
                       p=CoefficientField.polynomial([1.0, 0.25, 0.125]),
                       q=CoefficientField.const(-0.375),
                       w=CoefficientField.const(2.0))
    path = tmp_path / "problem.ini"
    save_problem(spec, path)
    loaded = load_problem(path)
    assert loaded.a == spec.a and loaded.b == spec.b
    assert loaded.alpha == spec.alpha
    assert loaded.p.coeffs == spec.p.coeffs
    assert loaded.q.constant == spec.q.constant
    assert loaded.w.constant == spec.w.constant


def test_ini_round_trip_is_bit_exact_on_awkward_floats(tmp_path):
    rng = np.random.default_rng(20260814)
    for trial in range(10):
        a = float(rng.uniform(-2.0, 0.0))
        b = a + float(rng.uniform(0.5, 3.0))
        alpha = float(rng.uniform(0.51, 1.0))
        spec = ProblemSpec(a, b, alpha,
                           p=CoefficientField.const(float(rng.uniform(0.1, 5.0))),
                           q=CoefficientField.const(float(rng.standard_normal())),
                           w=CoefficientField.const(float(rng.uniform(0.1, 5.0))))
        path = tmp_path / f"spec_{trial}.ini"
        save_problem(spec, path)
        loaded = load_problem(path)
        assert loaded.a == a and loaded.b == b and loaded.alpha == alpha
        assert loaded.p.constant == spec.p.constant
        assert loaded.q.constant == spec.q.constant


def test_ini_round_trip_table(tmp_path):
    grid = Grid(0.0, math.pi, 64)
    spec = ProblemSpec(0.0, math.pi, 0.8,
                       p=CoefficientField.const(1.0),
                       q=CoefficientField.from_table(grid.sample(np.cos)),
                       w=CoefficientField.const(1.0))
    path = tmp_path / "table_problem.ini"
    save_problem(spec, path)
    loaded = load_problem(path)
    assert loaded.q.kind == "table"
    assert np.array_equal(loaded.q.table.values, spec.q.table.values)
    assert loaded.q.table.grid.n == 64


def test_load_problem_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_problem(tmp_path / "absent.ini")


def test_load_problem_malformed_file(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("no section header here\n")
    with pytest.raises(ValueError):
        load_problem(bad)
