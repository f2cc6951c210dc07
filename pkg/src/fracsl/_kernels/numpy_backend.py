"""NumPy implementations of the hot numerical kernels.

Four singular-kernel quadratures plus a dense symmetric eigensolver.
All quadratures act on uniformly sampled values and share one structure:
a discrete convolution of the samples (or their cell slopes) against
weights that integrate the kernel (x-t)^(alpha-1) exactly over each
cell, with the smooth factor replaced by its piecewise-linear
interpolant.  Direct convolution is used up to a size threshold, FFT
beyond it.

Every function here has a compiled twin in ``_core.pyx`` with identical
semantics; ``fracsl._kernels`` picks one set at import time.
"""

import math

import numpy as np

_FFT_THRESHOLD = 1 << 20  # product of operand lengths


def _linear_convolve(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if len(x) * len(y) <= _FFT_THRESHOLD:
        return np.convolve(x, y)
    m = len(x) + len(y) - 1
    size = 1 << (m - 1).bit_length()
    return np.fft.irfft(np.fft.rfft(x, size) * np.fft.rfft(y, size), size)[:m]


def _interior_weights(n: int, alpha: float) -> np.ndarray:
    """Convolution weights A[k] = (k+1)^(a+1) - 2k^(a+1) + (k-1)^(a+1)."""
    k = np.arange(0, n + 1, dtype=float)
    kp = k ** (alpha + 1.0)
    a = np.empty(n + 1)
    a[0] = 0.0
    a[1:] = kp[:-1] - 2.0 * kp[1:]
    if n >= 2:
        a[1:-1] += kp[2:]
    a[-1] += (n + 1.0) ** (alpha + 1.0)
    return a


def _origin_weights(n: int, alpha: float) -> np.ndarray:
    """Left-endpoint weights W0[i] = (i-1)^(a+1) - i^(a+1) + (a+1) i^a."""
    k = np.arange(0, n + 1, dtype=float)
    kp = k ** (alpha + 1.0)
    w0 = np.zeros(n + 1)
    w0[1:] = kp[:-1] - kp[1:] + (alpha + 1.0) * k[1:] ** alpha
    return w0


def product_trapezoid_left(values: np.ndarray, alpha: float, h: float) -> np.ndarray:
    """Left fractional integral of order alpha on a uniform grid.

    out[i] = h^a / Gamma(a+2) * (W0[i] f[0] + sum_{j=1}^{i-1} A[i-j] f[j] + f[i])
    for i >= 1; out[0] = 0.
    """
    f = np.asarray(values, dtype=float)
    n = len(f) - 1
    a = _interior_weights(n, alpha)
    w0 = _origin_weights(n, alpha)
    out = np.zeros(n + 1)
    out[1:] = w0[1:] * f[0] + f[1:]
    if n >= 2:
        conv = _linear_convolve(f[1:n], a[1:n])
        out[2:] += conv[: n - 1]
    out *= h ** alpha / math.gamma(alpha + 2.0)
    return out


def product_trapezoid_right(values: np.ndarray, alpha: float, h: float) -> np.ndarray:
    """Right fractional integral; derived directly, not by reflection.

    out[i] = h^a / Gamma(a+2) * (W0[n-i] f[n] + sum_{j=i+1}^{n-1} A[j-i] f[j] + f[i])
    for i <= n-1; out[n] = 0.
    """
    f = np.asarray(values, dtype=float)
    n = len(f) - 1
    a = _interior_weights(n, alpha)
    w0 = _origin_weights(n, alpha)
    out = np.zeros(n + 1)
    out[:-1] = w0[1:][::-1] * f[n] + f[:-1]
    if n >= 2:
        conv = _linear_convolve(f[1:n][::-1], a[1:n])
        out[: n - 1] += conv[: n - 1][::-1]
    out *= h ** alpha / math.gamma(alpha + 2.0)
    return out


def l1_caputo_left(values: np.ndarray, alpha: float, h: float) -> np.ndarray:
    """Left Caputo derivative from samples alone (no derivative supplied).

    Integrates the exact derivative of the piecewise-linear interpolant:
    out[i] = h^mu / Gamma(mu+1) * sum_{j<i} slope[j] ((i-j)^mu - (i-j-1)^mu)
    with mu = 1 - alpha.
    """
    f = np.asarray(values, dtype=float)
    n = len(f) - 1
    mu = 1.0 - alpha
    slopes = np.diff(f) / h
    grid_pow = np.arange(0, n + 1, dtype=float) ** mu
    inc = grid_pow[1:] - grid_pow[:-1]
    conv = _linear_convolve(slopes, inc)[:n]
    out = np.zeros(n + 1)
    out[1:] = conv * (h ** mu / math.gamma(mu + 1.0))
    return out


def l1_caputo_right(values: np.ndarray, alpha: float, h: float) -> np.ndarray:
    """Right Caputo derivative from samples alone.

    out[i] = -h^mu / Gamma(mu+1) * sum_{j>=i} slope[j] ((j+1-i)^mu - (j-i)^mu).
    """
    f = np.asarray(values, dtype=float)
    n = len(f) - 1
    mu = 1.0 - alpha
    slopes = np.diff(f) / h
    grid_pow = np.arange(0, n + 1, dtype=float) ** mu
    inc = grid_pow[1:] - grid_pow[:-1]
    conv = _linear_convolve(slopes[::-1], inc)[:n]
    out = np.zeros(n + 1)
    out[:-1] = -conv[::-1] * (h ** mu / math.gamma(mu + 1.0))
    return out


def _off_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * float(np.sum(np.tril(a, -1) ** 2)))


def jacobi_eigh(matrix: np.ndarray, tol_factor: float = 1e-12,
                max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues, eigenvectors) unsorted; column k of the second
    array pairs with entry k of the first.  Raises ``RuntimeError`` if
    the off-diagonal norm has not dropped below ``tol_factor * ||A||``
    after ``max_sweeps`` full sweeps.
    """
    a = np.array(matrix, dtype=float, copy=True)
    m = a.shape[0]
    if a.shape != (m, m):
        raise ValueError("matrix must be square")
    v = np.eye(m)
    if m == 1:
        return a[0, :1].copy(), v
    tol = tol_factor * max(math.sqrt(float(np.sum(a * a))), np.finfo(float).tiny)
    for _ in range(max_sweeps):
        if _off_norm(a) <= tol:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if abs(apq) == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                row_p = a[p, :].copy()
                a[p, :] = c * row_p - s * a[q, :]
                a[q, :] = s * row_p + c * a[q, :]
                col_p = a[:, p].copy()
                a[:, p] = c * col_p - s * a[:, q]
                a[:, q] = s * col_p + c * a[:, q]
                a[p, q] = a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                v[:, p] = c * vcol_p - s * v[:, q]
                v[:, q] = s * vcol_p + c * v[:, q]
    else:
        if _off_norm(a) > tol:
            raise RuntimeError(
                f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
            )
    return np.diagonal(a).copy(), v
