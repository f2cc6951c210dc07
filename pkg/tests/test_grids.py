"""Grid, sampled-function, and window helpers."""

import math

import numpy as np
import pytest

from fracsl.grids import (Grid, SampledFunction, guard_band_slice,
                          interior_slice, read_samples_csv, write_samples_csv)


def test_grid_basic_properties():
    grid = Grid(0.0, math.pi, 8)
    assert grid.h == pytest.approx(math.pi / 8)
    x = grid.nodes()
    assert len(x) == 9
    assert x[0] == 0.0 and x[-1] == math.pi


def test_grid_rejects_bad_arguments():
    with pytest.raises(ValueError):
        Grid(1.0, 1.0, 8)
    with pytest.raises(ValueError):
        Grid(2.0, 1.0, 8)
    with pytest.raises(ValueError):
        Grid(0.0, 1.0, 1)


def test_grid_sample():
    grid = Grid(0.0, 1.0, 4)
    f = grid.sample(lambda x: x ** 2)
    assert isinstance(f, SampledFunction)
    assert np.allclose(f.values, grid.nodes() ** 2)


def test_sampled_function_validation():
    grid = Grid(0.0, 1.0, 4)
    with pytest.raises(ValueError):
        SampledFunction(grid, np.zeros(4))
    with pytest.raises(ValueError):
        SampledFunction(grid, np.array([0.0, 1.0, np.nan, 1.0, 0.0]))


def test_with_values_keeps_grid():
    grid = Grid(0.0, 1.0, 4)
    f = grid.sample(np.cos)
    g = f.with_values(np.zeros(5))
    assert g.grid is grid
    assert np.all(g.values == 0.0)


def test_interior_slice_excludes_two_nodes_each_end():
    # drops each endpoint plus the 2 nodes adjacent to it
    sl = interior_slice(100)
    idx = np.arange(101)[sl]
    assert idx[0] == 3 and idx[-1] == 97


def test_interior_slice_rejects_tiny_grids():
    with pytest.raises(ValueError):
        interior_slice(4)


def test_guard_band_slice_fraction():
    sl = guard_band_slice(100, 0.1)
    idx = np.arange(101)[sl]
    assert idx[0] == 10 and idx[-1] == 90
    # always strips at least one node per side
    sl_small = guard_band_slice(5, 0.01)
    idx_small = np.arange(6)[sl_small]
    assert idx_small[0] == 1 and idx_small[-1] == 4


def test_samples_csv_round_trip(tmp_path):
    grid = Grid(0.25, 1.75, 6)
    f = grid.sample(lambda x: np.sin(3 * x))
    path = tmp_path / "f.csv"
    write_samples_csv(f, path)
    g = read_samples_csv(path)
    assert g.grid.a == f.grid.a and g.grid.b == f.grid.b and g.grid.n == f.grid.n
    assert np.array_equal(g.values, f.values)


def test_read_samples_csv_rejects_nonuniform(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("x,value\n0.0,1.0\n0.1,1.0\n0.3,1.0\n")
    with pytest.raises(ValueError):
        read_samples_csv(path)
