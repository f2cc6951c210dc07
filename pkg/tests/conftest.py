"""Shared fixtures.

Eigenvalue solves at the default resolution are cached for the whole
session so separate test modules can assert against the same spectra
without re-solving.
"""

from functools import lru_cache

import pytest

from fracsl import Grid, converge_spectrum, oscillator_spec


@lru_cache(maxsize=None)
def _solve(a, b, alpha, grid_n, n_eigs, m_min, m_max):
    spec = oscillator_spec(1.0, (a, b), alpha)
    grid = Grid(a, b, grid_n)
    result = converge_spectrum(spec, grid, n_eigs, m_min, m_max)
    return spec, grid, result


@pytest.fixture(scope="session")
def oscillator_solution():
    """get(a, b, alpha, ...) -> (spec, grid, result), cached per argument set."""

    def get(a, b, alpha, grid_n=2048, n_eigs=3, m_min=4, m_max=24):
        return _solve(a, b, alpha, grid_n, n_eigs, m_min, m_max)

    return get
