# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the per-power partial isometry scan.

The matrices here are small (n <= ~200, usually <= 12), so numpy call overhead
dominates the pure version; these loops fuse product, Gram and residual.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


cdef inline double cabs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef double _proj_res(double complex[:, ::1] P, double complex[:, ::1] work) nogil:
    cdef Py_ssize_t n = P.shape[0], i, j, t
    cdef double best = 0.0, d
    cdef double complex s, c
    for i in range(n):
        for j in range(n):
            c = P[j, i]
            d = cabs2(P[i, j] - (c.real - 1j * c.imag))
            if d > best:
                best = d
    for i in range(n):
        for j in range(n):
            s = 0
            for t in range(n):
                s = s + P[i, t] * P[t, j]
            d = cabs2(s - P[i, j])
            if d > best:
                best = d
    return sqrt(best)


cdef void _gram(double complex[:, ::1] X, double complex[:, ::1] G) nogil:
    # G = X^* X, filled as a Hermitian matrix
    cdef Py_ssize_t n = X.shape[0], m = X.shape[1], i, j, t
    cdef double complex s, a
    for i in range(m):
        for j in range(i, m):
            s = 0
            for t in range(n):
                a = X[t, i]
                s = s + (a.real - 1j * a.imag) * X[t, j]
            G[i, j] = s
            G[j, i] = s.real - 1j * s.imag


cdef void _matmul(double complex[:, ::1] X, double complex[:, ::1] Y,
                  double complex[:, ::1] out) nogil:
    cdef Py_ssize_t n = X.shape[0], k = X.shape[1], m = Y.shape[1], i, j, t
    cdef double complex s
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(k):
                s = s + X[i, t] * Y[t, j]
            out[i, j] = s


def projection_residual(P):
    cdef double complex[:, ::1] Pv = np.ascontiguousarray(P, dtype=np.complex128)
    if Pv.shape[0] != Pv.shape[1]:
        raise ValueError("projection_residual needs a square matrix")
    return _proj_res(Pv, Pv)


def isometry_residual(U):
    cdef double complex[:, ::1] Uv = np.ascontiguousarray(U, dtype=np.complex128)
    cdef Py_ssize_t m = Uv.shape[1], i, j
    cdef double complex[:, ::1] G = np.empty((m, m), dtype=np.complex128)
    cdef double best = 0.0, d
    with nogil:
        _gram(Uv, G)
        for i in range(m):
            G[i, i] = G[i, i] - 1.0
        for i in range(m):
            for j in range(m):
                d = cabs2(G[i, j])
                if d > best:
                    best = d
    return sqrt(best)


def power_gram_residuals(A, Py_ssize_t L):
    """Projection residual of (A^l)^* A^l for l = 1 .. L."""
    cdef double complex[:, ::1] Av = np.ascontiguousarray(A, dtype=np.complex128)
    cdef Py_ssize_t n = Av.shape[0], l
    if Av.shape[1] != n:
        raise ValueError("power_gram_residuals needs a square matrix")
    cdef double complex[:, ::1] P = np.array(Av, dtype=np.complex128, copy=True)
    cdef double complex[:, ::1] nxt = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] G = np.empty((n, n), dtype=np.complex128)
    cdef double complex[:, ::1] tmp
    cnp_out = np.empty(L, dtype=np.float64)
    cdef double[::1] out = cnp_out
    with nogil:
        for l in range(L):
            if l > 0:
                _matmul(P, Av, nxt)
                tmp = P
                P = nxt
                nxt = tmp
            _gram(P, G)
            out[l] = _proj_res(G, G)
    return cnp_out
