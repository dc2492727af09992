# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels; same contracts as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, M_PI, NAN

cnp.import_array()

ctypedef double complex cplx


cdef inline cplx _horner(const cplx[::1] c, Py_ssize_t m, cplx z) noexcept nogil:
    cdef cplx acc = 0
    cdef Py_ssize_t k
    for k in range(m - 1, -1, -1):
        acc = acc * z + c[k]
    return acc


cdef inline cplx _node(cplx center, double radius, Py_ssize_t k, Py_ssize_t n) noexcept nogil:
    cdef double t = 2.0 * M_PI * k / n
    return center + radius * (cos(t) + 1j * sin(t))


cdef inline double _abs(cplx z) noexcept nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


def circle_nodes(center, double radius, Py_ssize_t n):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(n, dtype=np.complex128)
    cdef cplx c = complex(center)
    cdef Py_ssize_t k
    for k in range(n):
        out[k] = _node(c, radius, k, n)
    return out


def poly_eval(coeffs, z):
    cdef const cplx[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const cplx[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef Py_ssize_t n = zz.shape[0], m = c.shape[0], k
    out = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] o = out
    with nogil:
        for k in range(n):
            o[k] = _horner(c, m, zz[k])
    return out


def poly_eval_with_derivative(coeffs, z):
    cdef const cplx[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const cplx[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef Py_ssize_t n = zz.shape[0], m = c.shape[0], k, j
    p_out = np.empty(n, dtype=np.complex128)
    dp_out = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] po = p_out
    cdef cplx[::1] dpo = dp_out
    cdef cplx p, dp, x
    with nogil:
        for k in range(n):
            p = 0
            dp = 0
            x = zz[k]
            for j in range(m - 1, -1, -1):
                dp = dp * x + p
                p = p * x + c[j]
            po[k] = p
            dpo[k] = dp
    return p_out, dp_out


def rational_eval(num, den, z):
    cdef const cplx[::1] a = np.ascontiguousarray(num, dtype=np.complex128)
    cdef const cplx[::1] b = np.ascontiguousarray(den, dtype=np.complex128)
    cdef const cplx[::1] zz = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    cdef Py_ssize_t n = zz.shape[0], ma = a.shape[0], mb = b.shape[0], k
    out = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] o = out
    cdef cplx d
    with nogil:
        for k in range(n):
            d = _horner(b, mb, zz[k])
            if d.real == 0 and d.imag == 0:
                o[k] = NAN + NAN * 1j
            else:
                o[k] = _horner(a, ma, zz[k]) / d
    return out


def contour_integral(num, den, center, double radius, Py_ssize_t n, int orientation=1):
    cdef const cplx[::1] a = np.ascontiguousarray(num, dtype=np.complex128)
    cdef const cplx[::1] b = np.ascontiguousarray(den, dtype=np.complex128)
    cdef Py_ssize_t ma = a.shape[0], mb = b.shape[0], k
    cdef cplx c = complex(center)
    cdef cplx z, acc = 0
    with nogil:
        for k in range(n):
            z = _node(c, radius, k, n)
            acc = acc + _horner(a, ma, z) / _horner(b, mb, z) * (z - c)
    return complex(orientation * acc * 1j * (2.0 * M_PI / n))


def log_winding(coeffs, center, double radius, Py_ssize_t n):
    cdef const cplx[::1] cf = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t m = cf.shape[0], k, j
    cdef cplx c = complex(center)
    cdef cplx z, p, dp, acc = 0
    cdef double mn = 1e308, ap
    with nogil:
        for k in range(n):
            z = _node(c, radius, k, n)
            p = 0
            dp = 0
            for j in range(m - 1, -1, -1):
                dp = dp * z + p
                p = p * z + cf[j]
            ap = _abs(p)
            if ap < mn:
                mn = ap
            if ap == 0:
                break
            acc = acc + dp / p * (z - c)
    if mn == 0:
        return float("nan"), 0.0
    return (acc / n).real, mn


def sup_abs(num, den, center, double radius, Py_ssize_t n):
    cdef const cplx[::1] a = np.ascontiguousarray(num, dtype=np.complex128)
    cdef const cplx[::1] b = np.ascontiguousarray(den, dtype=np.complex128)
    cdef Py_ssize_t ma = a.shape[0], mb = b.shape[0], k
    cdef cplx c = complex(center)
    cdef cplx z
    cdef double best = 0, v
    with nogil:
        for k in range(n):
            z = _node(c, radius, k, n)
            v = _abs(_horner(a, ma, z) / _horner(b, mb, z))
            if v > best or v != v:
                best = v
    return best
