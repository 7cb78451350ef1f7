# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Wright series summation and the L1 history sum.

Mirrors ``_pykernels`` exactly; see that module for the contracts.
"""

import numpy as np

from libc.math cimport tgamma, floor, fabs, sin, pow, copysign, INFINITY, M_PI

NAME = "cython"


cdef inline double _rgamma(double x) noexcept nogil:
    if x <= 0.0 and x == floor(x):
        return 0.0
    if x > 171.5:
        return 0.0
    if x < -170.0:
        return copysign(INFINITY, sin(M_PI * x))
    return 1.0 / tgamma(x)


cdef double _wright(double z, double a, double b, double rel_tol,
                    double abs_tol, int max_terms, int first, double *abs_sum,
                    int *n_terms) noexcept nogil:
    cdef double t = 0.0 if first else _rgamma(b)
    cdef double s = t
    cdef double comp = 0.0
    cdef double tot = fabs(t)
    cdef double prev = INFINITY if first else t
    cdef double p = 1.0
    cdef double tmp, thresh
    cdef int n
    for n in range(1, max_terms):
        p *= z / n
        t = p * _rgamma(b + n * a)
        tmp = s + t
        if fabs(s) >= fabs(t):
            comp += (s - tmp) + t
        else:
            comp += (t - tmp) + s
        s = tmp
        tot += fabs(t)
        thresh = rel_tol * fabs(s + comp)
        if thresh < abs_tol:
            thresh = abs_tol
        if fabs(t) < thresh and fabs(prev) < thresh:
            abs_sum[0] = tot
            n_terms[0] = n + 1
            return s + comp
        prev = t
    abs_sum[0] = tot
    n_terms[0] = -1
    return s + comp


def rgamma(double x):
    return _rgamma(x)


def wright_series(double z, double a, double b, double rel_tol,
                  double abs_tol, int max_terms, int first=0):
    cdef double abs_sum
    cdef int n_terms
    cdef double value = _wright(z, a, b, rel_tol, abs_tol, max_terms, first,
                                &abs_sum, &n_terms)
    return value, abs_sum, n_terms


def wright_many(zs, double a, double b, double rel_tol, double abs_tol,
                int max_terms, int first=0):
    z_arr = np.ascontiguousarray(zs, dtype=np.float64)
    shape = z_arr.shape
    cdef double[::1] z = z_arr.reshape(-1)
    values = np.empty(z.shape[0])
    abs_sums = np.empty(z.shape[0])
    nterms = np.empty(z.shape[0], dtype=np.int64)
    cdef double[::1] v = values
    cdef double[::1] s = abs_sums
    cdef long long[::1] k = nterms
    cdef Py_ssize_t i
    cdef int nt
    with nogil:
        for i in range(z.shape[0]):
            v[i] = _wright(z[i], a, b, rel_tol, abs_tol, max_terms, first, &s[i], &nt)
            k[i] = nt
    return values.reshape(shape), abs_sums.reshape(shape), nterms.reshape(shape)


def l1_history_sum(f, double alpha):
    cdef double[::1] fv = np.ascontiguousarray(f, dtype=np.float64)
    cdef Py_ssize_t n = fv.shape[0] - 1
    cdef Py_ssize_t j
    cdef double e = 1.0 - alpha
    cdef double w, term, tmp
    cdef double s = 0.0
    cdef double comp = 0.0
    with nogil:
        for j in range(n):
            if j == 0:
                w = 1.0
            else:
                w = pow(j + 1.0, e) - pow(<double>j, e)
            term = w * (fv[n - j] - fv[n - j - 1])
            tmp = s + term
            if fabs(s) >= fabs(term):
                comp += (s - tmp) + term
            else:
                comp += (term - tmp) + s
            s = tmp
    return s + comp
