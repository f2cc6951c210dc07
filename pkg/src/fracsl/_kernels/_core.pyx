# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the NumPy kernels (see ``numpy_backend``).

Same quadrature weights and rotation formulas; plain C loops instead of
vectorized convolutions.  Callers allocate the output buffers; only
typed memoryviews cross the boundary, so no NumPy headers are needed.
"""

from libc.math cimport copysign, fabs, hypot, pow, sqrt, tgamma
from libc.stdlib cimport free, malloc


cdef double *_alloc(Py_ssize_t count) except NULL:
    cdef double *buf = <double *> malloc(count * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    return buf


def product_trapezoid_left(double[::1] f, double alpha, double h,
                           double[::1] out):
    cdef Py_ssize_t n = f.shape[0] - 1, i, j
    cdef double scale = pow(h, alpha) / tgamma(alpha + 2.0)
    cdef double ap = alpha + 1.0
    cdef double *kp = _alloc(n + 2)
    cdef double acc
    for i in range(n + 2):
        kp[i] = pow(<double> i, ap)
    out[0] = 0.0
    for i in range(1, n + 1):
        acc = (kp[i - 1] - kp[i] + ap * pow(<double> i, alpha)) * f[0] + f[i]
        for j in range(1, i):
            acc += (kp[i - j + 1] - 2.0 * kp[i - j] + kp[i - j - 1]) * f[j]
        out[i] = scale * acc
    free(kp)


def product_trapezoid_right(double[::1] f, double alpha, double h,
                            double[::1] out):
    cdef Py_ssize_t n = f.shape[0] - 1, i, j
    cdef double scale = pow(h, alpha) / tgamma(alpha + 2.0)
    cdef double ap = alpha + 1.0
    cdef double *kp = _alloc(n + 2)
    cdef double acc
    for i in range(n + 2):
        kp[i] = pow(<double> i, ap)
    out[n] = 0.0
    for i in range(n):
        acc = (kp[n - i - 1] - kp[n - i] + ap * pow(<double> (n - i), alpha)) * f[n] + f[i]
        for j in range(i + 1, n):
            acc += (kp[j - i + 1] - 2.0 * kp[j - i] + kp[j - i - 1]) * f[j]
        out[i] = scale * acc
    free(kp)


def l1_caputo_left(double[::1] f, double alpha, double h, double[::1] out):
    cdef Py_ssize_t n = f.shape[0] - 1, i, j
    cdef double mu = 1.0 - alpha
    cdef double scale = pow(h, mu) / tgamma(mu + 1.0) / h
    cdef double *bp = _alloc(n + 1)
    cdef double acc
    for i in range(n + 1):
        bp[i] = pow(<double> i, mu)
    out[0] = 0.0
    for i in range(1, n + 1):
        acc = 0.0
        for j in range(i):
            acc += (f[j + 1] - f[j]) * (bp[i - j] - bp[i - j - 1])
        out[i] = scale * acc
    free(bp)


def l1_caputo_right(double[::1] f, double alpha, double h, double[::1] out):
    cdef Py_ssize_t n = f.shape[0] - 1, i, j
    cdef double mu = 1.0 - alpha
    cdef double scale = pow(h, mu) / tgamma(mu + 1.0) / h
    cdef double *bp = _alloc(n + 1)
    cdef double acc
    for i in range(n + 1):
        bp[i] = pow(<double> i, mu)
    out[n] = 0.0
    for i in range(n):
        acc = 0.0
        for j in range(i, n):
            acc += (f[j + 1] - f[j]) * (bp[j + 1 - i] - bp[j - i])
        out[i] = -scale * acc
    free(bp)


cdef double _off_norm(double[:, ::1] a, Py_ssize_t m) noexcept:
    cdef Py_ssize_t p, q
    cdef double acc = 0.0
    for p in range(1, m):
        for q in range(p):
            acc += a[p, q] * a[p, q]
    return sqrt(2.0 * acc)


def jacobi_eigh(double[:, ::1] a, double[:, ::1] v, double tol,
                int max_sweeps):
    """In-place cyclic Jacobi on ``a``; accumulates rotations into ``v``.

    ``v`` must come in as the identity.  Returns the number of sweeps
    used, or -1 if the off-diagonal norm stayed above ``tol``.
    """
    cdef Py_ssize_t m = a.shape[0], p, q, k
    cdef int sweep
    cdef double apq, tau, t, c, s, xp, xq
    for sweep in range(max_sweeps):
        if _off_norm(a, m) <= tol:
            return sweep
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = copysign(1.0, tau) / (fabs(tau) + hypot(1.0, tau))
                c = 1.0 / hypot(1.0, t)
                s = t * c
                for k in range(m):
                    xp = a[p, k]
                    xq = a[q, k]
                    a[p, k] = c * xp - s * xq
                    a[q, k] = s * xp + c * xq
                for k in range(m):
                    xp = a[k, p]
                    xq = a[k, q]
                    a[k, p] = c * xp - s * xq
                    a[k, q] = s * xp + c * xq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(m):
                    xp = v[k, p]
                    xq = v[k, q]
                    v[k, p] = c * xp - s * xq
                    v[k, q] = s * xp + c * xq
    if _off_norm(a, m) <= tol:
        return max_sweeps
    return -1
