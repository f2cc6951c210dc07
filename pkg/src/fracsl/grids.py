"""Uniform grids and sampled functions, the substrate of all quadrature.

A :class:`Grid` is the closed interval ``[a, b]`` cut into ``n`` equal
cells with nodes ``x_i = a + i*h``.  A :class:`SampledFunction` pairs a
grid with one value per node.  Operators in :mod:`fracsl.fraccalc` map
sampled functions to sampled functions on the same grid; nothing in the
package interpolates between grids.
"""

import csv
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Grid",
    "SampledFunction",
    "guard_band_slice",
    "interior_slice",
    "read_samples_csv",
    "write_samples_csv",
]


@dataclass(frozen=True)
class Grid:
    """Uniform discretization of [a, b] with n subintervals (n+1 nodes)."""

    a: float
    b: float
    n: int

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ValueError(f"need a < b, got [{self.a}, {self.b}]")
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.n

    def nodes(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.n + 1)

    def sample(self, fn) -> "SampledFunction":
        """Sample a callable at every node."""
        return SampledFunction(self, np.asarray(fn(self.nodes()), dtype=float))


@dataclass
class SampledFunction:
    """Function values at the nodes of a grid."""

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.n + 1,):
            raise ValueError(
                f"expected {self.grid.n + 1} values, got shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("sampled values must be finite")

    def with_values(self, values: np.ndarray) -> "SampledFunction":
        """Same grid, new values."""
        return SampledFunction(self.grid, values)


def interior_slice(n: int, exclude: int = 2) -> slice:
    """Nodes with ``exclude`` nodes dropped after each endpoint.

    The default drops the endpoint plus two adjacent nodes on each side,
    where singular-kernel quadrature cannot be trusted.
    """
    if n <= 2 * (exclude + 1):
        raise ValueError(f"grid with n={n} has no interior at exclude={exclude}")
    return slice(exclude + 1, n - exclude)


def guard_band_slice(n: int, fraction: float = 0.1) -> slice:
    """Nodes at least ``fraction`` of the interval away from each endpoint.

    Identity checks against references that are singular at an endpoint
    measure on this window; see the operator-identity tests.
    """
    k = max(1, int(np.ceil(fraction * n)))
    if n + 1 - k <= k:
        raise ValueError(f"guard band fraction={fraction} leaves no nodes at n={n}")
    return slice(k, n + 1 - k)


def write_samples_csv(sf: SampledFunction, path) -> None:
    """Two-column CSV (x, value) with full float round-trip precision."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["x", "value"])
        for x, v in zip(sf.grid.nodes(), sf.values):
            writer.writerow([format(x, ".17g"), format(v, ".17g")])


def read_samples_csv(path) -> SampledFunction:
    """Inverse of :func:`write_samples_csv`; the grid must be uniform."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if [c.strip().lower() for c in header[:2]] != ["x", "value"]:
            raise ValueError(f"expected header x,value in {path}")
        xs, vs = [], []
        for row in reader:
            if not row:
                continue
            xs.append(float(row[0]))
            vs.append(float(row[1]))
    x = np.asarray(xs)
    if len(x) < 3:
        raise ValueError(f"need at least 3 samples in {path}")
    steps = np.diff(x)
    h = (x[-1] - x[0]) / (len(x) - 1)
    if not np.allclose(steps, h, rtol=1e-9, atol=1e-12 * max(1.0, abs(h))):
        raise ValueError(f"nodes in {path} are not uniformly spaced")
    grid = Grid(float(x[0]), float(x[-1]), len(x) - 1)
    return SampledFunction(grid, np.asarray(vs))
