"""Kernel backend selection.

Two interchangeable implementations of the numerical hot spots live
here: ``numpy_backend`` (always available) and ``_core`` (Cython, built
when a compiler is present).  The environment variable
``FRACSL_BACKEND`` forces a choice:

* ``"numpy"``    -- pure NumPy kernels;
* ``"compiled"`` -- Cython kernels, ``ImportError`` if not built;
* unset/``"auto"`` -- compiled when importable, NumPy otherwise.

The selected backend name is exported as ``BACKEND``.  Both expose the
same five operations with identical semantics; ``tests/test_kernels.py``
asserts their numerical agreement and ``benchmarks/bench_kernels.py``
compares their speed.
"""

import math
import os

import numpy as np

from . import numpy_backend

__all__ = [
    "BACKEND",
    "caputo_left_l1",
    "caputo_right_l1",
    "eigh_symmetric",
    "fracint_left",
    "fracint_right",
]


def _load_compiled():
    from . import _core

    def _apply(kernel, values, alpha, h):
        f = np.ascontiguousarray(values, dtype=float)
        out = np.empty(len(f))
        kernel(f, float(alpha), float(h), out)
        return out

    def fracint_left(values, alpha, h):
        return _apply(_core.product_trapezoid_left, values, alpha, h)

    def fracint_right(values, alpha, h):
        return _apply(_core.product_trapezoid_right, values, alpha, h)

    def caputo_left_l1(values, alpha, h):
        return _apply(_core.l1_caputo_left, values, alpha, h)

    def caputo_right_l1(values, alpha, h):
        return _apply(_core.l1_caputo_right, values, alpha, h)

    def eigh_symmetric(matrix, tol_factor=1e-12, max_sweeps=60):
        a = np.array(matrix, dtype=float, copy=True, order="C")
        m = a.shape[0]
        if a.shape != (m, m):
            raise ValueError("matrix must be square")
        v = np.eye(m)
        tol = tol_factor * max(math.sqrt(float(np.sum(a * a))),
                               np.finfo(float).tiny)
        sweeps = _core.jacobi_eigh(a, v, tol, int(max_sweeps))
        if sweeps < 0:
            raise RuntimeError(
                f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
            )
        return np.diagonal(a).copy(), v

    return {
        "fracint_left": fracint_left,
        "fracint_right": fracint_right,
        "caputo_left_l1": caputo_left_l1,
        "caputo_right_l1": caputo_right_l1,
        "eigh_symmetric": eigh_symmetric,
    }


def _load_numpy():
    return {
        "fracint_left": numpy_backend.product_trapezoid_left,
        "fracint_right": numpy_backend.product_trapezoid_right,
        "caputo_left_l1": numpy_backend.l1_caputo_left,
        "caputo_right_l1": numpy_backend.l1_caputo_right,
        "eigh_symmetric": numpy_backend.jacobi_eigh,
    }


def _select():
    choice = os.environ.get("FRACSL_BACKEND", "auto").strip().lower() or "auto"
    if choice == "numpy":
        return "numpy", _load_numpy()
    if choice == "compiled":
        return "compiled", _load_compiled()
    if choice != "auto":
        raise ValueError(
            f"FRACSL_BACKEND must be 'numpy', 'compiled' or 'auto', got {choice!r}"
        )
    try:
        return "compiled", _load_compiled()
    except ImportError:
        return "numpy", _load_numpy()


BACKEND, _impl = _select()

fracint_left = _impl["fracint_left"]
fracint_right = _impl["fracint_right"]
caputo_left_l1 = _impl["caputo_left_l1"]
caputo_right_l1 = _impl["caputo_right_l1"]
eigh_symmetric = _impl["eigh_symmetric"]
