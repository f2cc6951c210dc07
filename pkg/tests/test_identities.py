"""Operator identity suites at their contract tolerances.

Each suite returns measured discrepancies together with the same
measurement on a once-refined grid.  Convergence is asserted as a
doubling ratio of at least 1.6 (first order near the kernel
singularity; smooth cases converge faster) unless the fine-grid error
already sits at the machine floor, where ratios are meaningless.
"""

import pytest

from fracsl import fraccalc

_FLOOR = 1e-12


def _assert_converging(checks, budget):
    for check in checks:
        assert check.error <= budget, f"{check.label}: {check.error}"
        if check.refined_error is not None and check.refined_error > _FLOOR:
            assert check.ratio >= 1.6, f"{check.label}: ratio {check.ratio}"


def test_power_law_identities():
    _assert_converging(fraccalc.check_power_laws(grid_n=2048), 1e-3)


def test_semigroup_of_integrals():
    _assert_converging(fraccalc.check_semigroup(grid_n=2048), 5e-3)


def test_derivative_inverts_integral():
    _assert_converging(fraccalc.check_left_inverse(grid_n=2048), 5e-3)


def test_integral_of_caputo_is_fundamental_difference():
    _assert_converging(fraccalc.check_caputo_inverse(grid_n=2048), 5e-3)


def test_fundamental_identity_with_analytic_derivative():
    _assert_converging(fraccalc.check_fundamental_identity(grid_n=2048), 5e-3)


def test_derivative_composes_with_integral():
    _assert_converging(fraccalc.check_derivative_composition(grid_n=2048), 5e-3)


def test_integration_by_parts_defect():
    # the defect mixes quadrature and operator error, so only the budget
    # and non-increase under refinement are contracted, not a clean rate
    for check in fraccalc.check_integration_by_parts(grid_n=2048):
        assert check.error <= 5e-3, f"{check.label}: {check.error}"
        assert check.refined_error <= check.error, check.label


def test_integral_operator_norm_bound_respected():
    checks = fraccalc.check_boundedness()
    for check in checks:
        assert check.error <= 1.0 + 1e-6, f"{check.label}: {check.error}"


def test_operators_are_linear():
    checks = fraccalc.check_linearity()
    for check in checks:
        assert check.error <= 1e-12, f"{check.label}: {check.error}"


def test_suite_runner_covers_all_families():
    checks = fraccalc.run_identity_suite(grid_n=256)
    labels = " ".join(c.label for c in checks)
    for family in ("power law", "semigroup", "left inverse",
                   "caputo inverse", "fundamental", "composition",
                   "integration by parts", "boundedness", "linearity"):
        assert family in labels
    assert all(c.error == c.error for c in checks)  # no NaNs


@pytest.mark.parametrize("alpha,beta", [(0.3, 0.4), (0.25, 0.5)])
def test_semigroup_custom_orders(alpha, beta):
    checks = fraccalc.check_semigroup(grid_n=1024, pairs=((alpha, beta),))
    _assert_converging(checks, 5e-3)
