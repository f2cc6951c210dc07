"""Deterministic JSON and CSV writers for solver outputs.

Identical inputs must produce byte-identical files, so floats are
rendered with repr (17 significant digits, shortest round-trip form),
dictionary keys keep insertion order, and line endings are fixed to \\n.
"""

import json
from pathlib import Path

import numpy as np

__all__ = [
    "bounds_rows_csv",
    "dump_json",
    "format_float",
    "residual_rows_csv",
    "samples_csv",
    "spectrum_dict",
]


def format_float(value: float) -> str:
    """Round-trip decimal form of a float (17 significant digits)."""
    return repr(float(value))


class _FloatText(float):
    """Float whose json rendering is the exact repr form."""

    def __repr__(self) -> str:
        return format_float(self)


def _normalize(obj):
    if isinstance(obj, (bool, str, int, type(None))):
        return obj
    if isinstance(obj, (float, np.floating)):
        return _FloatText(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_normalize(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(obj, path: Path) -> None:
    text = json.dumps(_normalize(obj), indent=2, sort_keys=False)
    Path(path).write_text(text + "\n", encoding="ascii", newline="\n")


def spectrum_dict(alpha: float, result) -> dict:
    """JSON payload for a solved spectrum."""
    payload = {
        "alpha": float(alpha),
        "m": int(result.m),
        "eigenvalues": [float(v) for v in result.eigenvalues],
        "stagnation": float(result.stagnation)
        if result.stagnation is not None else None,
    }
    if result.traces is not None:
        payload["traces"] = {
            str(n): [float(v) for v in column]
            for n, column in sorted(result.traces.items())
        }
    payload["coefficients"] = [
        [float(v) for v in row] for row in result.coefficient_vectors
    ]
    return payload


def _write_rows(path: Path, header: str, rows) -> None:
    lines = [header]
    lines.extend(",".join(format_float(v) for v in row) for row in rows)
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii",
                          newline="\n")


def samples_csv(path: Path, x: np.ndarray, columns: dict) -> None:
    """Columnar CSV with an x column followed by named value columns."""
    header = ",".join(["x", *columns.keys()])
    rows = zip(x, *columns.values())
    _write_rows(path, header, rows)


def residual_rows_csv(path: Path, rows) -> None:
    """Rows of (n, lambda, residual_l2, boundary_flux)."""
    lines = ["n,eigenvalue,residual_l2,boundary_flux"]
    for n, lam, l2, flux in rows:
        lines.append(",".join([str(int(n)), format_float(lam),
                               format_float(l2), format_float(flux)]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii",
                          newline="\n")


def bounds_rows_csv(path: Path, rows) -> None:
    """Rows from the oscillator bound suite."""
    lines = ["alpha1,alpha2,j,K,lhs,rhs,margin,pass"]
    for row in rows:
        lines.append(",".join([
            format_float(row.alpha1),
            format_float(row.alpha2),
            str(row.j),
            format_float(row.K),
            format_float(row.lhs),
            format_float(row.rhs),
            format_float(row.margin),
            "true" if row.passed else "false",
        ]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii",
                          newline="\n")
