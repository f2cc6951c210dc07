"""Problem instances: interval, order, coefficients p, q, w.

A :class:`ProblemSpec` is one eigenvalue problem

    ^cD^alpha_{b-}[ p(x) ^cD^alpha_{a+} y(x) ] + q(x) y(x) = lambda w(x) y(x),
    y(a) = y(b) = 0,

with ``1/2 < alpha < 1`` (``alpha = 1`` is additionally admitted as the
classical regression mode).  Coefficients come from a small registry --
constants, polynomials, or tabulated samples -- so that analytic
derivatives are available exactly where the representation has them.

A spec serializes to a flat INI file (section ``[problem]``, dotted
keys); polynomial coefficients round-trip bit-exactly as decimal
strings.
"""

import configparser
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .grids import Grid, SampledFunction, read_samples_csv, write_samples_csv

__all__ = [
    "CoefficientField",
    "HolderAdvisory",
    "LowerBound",
    "ProblemSpec",
    "ValidationReport",
    "functional_lower_bound",
    "load_problem",
    "save_problem",
    "validate",
]


@dataclass(frozen=True)
class CoefficientField:
    """One coefficient function: constant, polynomial, or table.

    Polynomial coefficients are stored lowest power first.  Constants
    and polynomials carry exact analytic derivatives; tables do not, and
    consumers fall back to finite differences.
    """

    kind: str
    constant: float | None = None
    coeffs: tuple[float, ...] | None = None
    table: SampledFunction | None = None

    _KINDS = ("constant", "polynomial", "table")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        payload = {"constant": self.constant, "polynomial": self.coeffs,
                   "table": self.table}[self.kind]
        if payload is None:
            raise ValueError(f"coefficient kind {self.kind!r} missing its payload")

    @classmethod
    def const(cls, c: float) -> "CoefficientField":
        return cls("constant", constant=float(c))

    @classmethod
    def polynomial(cls, coeffs) -> "CoefficientField":
        return cls("polynomial", coeffs=tuple(float(c) for c in coeffs))

    @classmethod
    def from_table(cls, table: SampledFunction) -> "CoefficientField":
        return cls("table", table=table)

    @property
    def has_analytic_derivative(self) -> bool:
        return self.kind != "table"

    def sample(self, grid: Grid) -> np.ndarray:
        if self.kind == "constant":
            return np.full(grid.n + 1, self.constant)
        if self.kind == "polynomial":
            return np.polynomial.polynomial.polyval(grid.nodes(), self.coeffs)
        if (self.table.grid.a, self.table.grid.b, self.table.grid.n) != (
                grid.a, grid.b, grid.n):
            raise ValueError(
                "table coefficient sampled on a different grid than its data"
            )
        return self.table.values.copy()

    def sample_derivative(self, grid: Grid) -> np.ndarray | None:
        """Analytic derivative samples, or None for tables."""
        if self.kind == "constant":
            return np.zeros(grid.n + 1)
        if self.kind == "polynomial":
            der = np.polynomial.polynomial.polyder(self.coeffs)
            return np.polynomial.polynomial.polyval(grid.nodes(), der)
        return None


@dataclass(frozen=True)
class ProblemSpec:
    """One fractional Sturm-Liouville instance on [a, b]."""

    a: float
    b: float
    alpha: float
    p: CoefficientField
    q: CoefficientField
    w: CoefficientField

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise ValueError(f"need a < b, got [{self.a}, {self.b}]")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"order must lie in (0, 1], got {self.alpha}")

    @property
    def is_classical(self) -> bool:
        return self.alpha == 1.0


@dataclass(frozen=True)
class LowerBound:
    """min over nodes of q/w; no eigenvalue can sit below it."""

    value: float


@dataclass(frozen=True)
class HolderAdvisory:
    """Empirical Hoelder quotient of (sqrt(w))' at exponent alpha - 1/2.

    Finitely many samples cannot certify Hoelder continuity, so this is
    reported for inspection and never enforced.
    """

    exponent: float
    quotient: float


@dataclass
class ValidationReport:
    """Admissibility violations plus the advisory diagnostic."""

    violations: list[str]
    holder: HolderAdvisory

    @property
    def is_admissible(self) -> bool:
        return not self.violations


def _holder_advisory(spec: ProblemSpec, grid: Grid) -> HolderAdvisory:
    w = spec.w.sample(grid)
    exponent = max(spec.alpha - 0.5, 1e-3)
    if np.any(w <= 0):
        return HolderAdvisory(exponent, float("nan"))
    sqrt_w = np.sqrt(w)
    dw = spec.w.sample_derivative(grid)
    if dw is not None:
        d = dw / (2.0 * sqrt_w)
    else:
        d = np.gradient(sqrt_w, grid.h, edge_order=2)
    x = grid.nodes()
    quotient = 0.0
    for stride in (1, max(1, grid.n // 16), max(1, grid.n // 4)):
        num = np.abs(d[stride:] - d[:-stride])
        den = (x[stride:] - x[:-stride]) ** exponent
        quotient = max(quotient, float(np.max(num / den)))
    return HolderAdvisory(exponent, quotient)


def validate(spec: ProblemSpec, grid: Grid) -> ValidationReport:
    """Check the standing hypotheses at the grid nodes.

    Violations: order outside (1/2, 1) (except the classical mode
    alpha = 1), p or w not strictly positive, and p lacking a derivative
    representation when one is required (table-valued p is accepted with
    finite differences, so only non-finiteness is flagged there).
    An empirical Hoelder quotient of (sqrt(w))' rides along as an
    advisory; it is never a violation.
    """
    if not (grid.a <= spec.a and spec.b <= grid.b):
        raise ValueError("grid does not cover the problem interval")
    violations = []
    if not (0.5 < spec.alpha < 1.0 or spec.alpha == 1.0):
        violations.append(
            f"order outside (1/2,1): alpha={spec.alpha!r} "
            "(alpha=1 is allowed only as the classical mode)"
        )
    p = spec.p.sample(grid)
    w = spec.w.sample(grid)
    if not np.all(p > 0):
        violations.append("p not strictly positive on the grid")
    if not np.all(w > 0):
        violations.append("w not strictly positive on the grid")
    for name, values in (("p", p), ("q", spec.q.sample(grid)), ("w", w)):
        if not np.all(np.isfinite(values)):
            violations.append(f"{name} has non-finite samples")
    return ValidationReport(violations, _holder_advisory(spec, grid))


def functional_lower_bound(spec: ProblemSpec, grid: Grid) -> LowerBound:
    """Coercivity constant M0 = min_i q(x_i)/w(x_i)."""
    w = spec.w.sample(grid)
    if not np.all(w > 0):
        raise ValueError("w must be strictly positive for the lower bound")
    q = spec.q.sample(grid)
    return LowerBound(float(np.min(q / w)))


# --- INI serialization ---------------------------------------------------

_SECTION = "problem"


def _field_to_keys(prefix: str, field: CoefficientField, base: Path) -> dict:
    keys = {f"{prefix}.kind": field.kind}
    if field.kind == "constant":
        keys[f"{prefix}.c"] = repr(field.constant)
    elif field.kind == "polynomial":
        keys[f"{prefix}.coeffs"] = ", ".join(repr(c) for c in field.coeffs)
    else:
        rel = f"{prefix}_table.csv"
        write_samples_csv(field.table, base / rel)
        keys[f"{prefix}.table"] = rel
    return keys


def _field_from_keys(prefix: str, section, base: Path) -> CoefficientField:
    kind = section.get(f"{prefix}.kind")
    if kind is None:
        raise ValueError(f"spec file missing key {prefix}.kind")
    if kind == "constant":
        return CoefficientField.const(float(section[f"{prefix}.c"]))
    if kind == "polynomial":
        coeffs = [float(tok) for tok in section[f"{prefix}.coeffs"].split(",")]
        return CoefficientField.polynomial(coeffs)
    if kind == "table":
        return CoefficientField.from_table(
            read_samples_csv(base / section[f"{prefix}.table"]))
    raise ValueError(f"unknown coefficient kind {kind!r} for {prefix}")


def save_problem(spec: ProblemSpec, path) -> None:
    """Write the INI representation; tables go to sibling CSV files."""
    path = Path(path)
    parser = configparser.ConfigParser()
    parser.optionxform = str
    keys = {"interval.a": repr(spec.a), "interval.b": repr(spec.b),
            "alpha": repr(spec.alpha)}
    for prefix, field in (("p", spec.p), ("q", spec.q), ("w", spec.w)):
        keys.update(_field_to_keys(prefix, field, path.parent))
    parser[_SECTION] = keys
    with open(path, "w") as handle:
        parser.write(handle)


def load_problem(path) -> ProblemSpec:
    """Read a spec written by :func:`save_problem` (or by hand)."""
    path = Path(path)
    parser = configparser.ConfigParser()
    parser.optionxform = str
    try:
        if not parser.read(path):
            raise FileNotFoundError(f"cannot read problem spec {path}")
    except configparser.Error as exc:
        raise ValueError(f"malformed problem spec {path}: {exc}") from exc
    if _SECTION not in parser:
        raise ValueError(f"spec file {path} has no [{_SECTION}] section")
    section = parser[_SECTION]
    return ProblemSpec(
        a=float(section["interval.a"]),
        b=float(section["interval.b"]),
        alpha=float(section["alpha"]),
        p=_field_from_keys("p", section, path.parent),
        q=_field_from_keys("q", section, path.parent),
        w=_field_from_keys("w", section, path.parent),
    )
