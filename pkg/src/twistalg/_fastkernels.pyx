# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled inner loops for float64 twisted products.

The callers zero ``out`` before dispatching; both kernels accumulate
sgn(p,q) * x[p] * y[q] into the coefficient of the group product pq.
"""


def mul_xor_f64(const signed char[:, ::1] signs,
                const double[::1] x,
                const double[::1] y,
                double[::1] out):
    """Product over an xor group: the index of i_p i_q is p ^ q."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t p, q
    cdef double xp
    for p in range(n):
        xp = x[p]
        if xp == 0.0:
            continue
        for q in range(n):
            out[p ^ q] += signs[p, q] * xp * y[q]


def mul_table_f64(const signed char[:, ::1] signs,
                  const long long[:, ::1] prod,
                  const double[::1] x,
                  const double[::1] y,
                  double[::1] out):
    """Product over a general group given its full product index table."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t p, q
    cdef double xp
    for p in range(n):
        xp = x[p]
        if xp == 0.0:
            continue
        for q in range(n):
            out[prod[p, q]] += signs[p, q] * xp * y[q]
