"""Numpy fallback for the float64 product kernels.

Same contract as the compiled module: accumulate sgn(p,q) x_p y_q at the
index of the group product.  Work is chunked over output indices so the
gather buffers stay small even at order 2^13.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 21  # gather cells per chunk


def mul_xor_f64(signs: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    out = np.empty(n)
    p = np.arange(n)[:, None]
    step = max(1, _CHUNK // n)
    for r0 in range(0, n, step):
        r = np.arange(r0, min(r0 + step, n))[None, :]
        q = p ^ r  # q with p*q = r
        out[r0 : r0 + q.shape[1]] = x @ (signs[p, q] * y[q])
    return out


def mul_cyclic_f64(signs: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    out = np.empty(n)
    p = np.arange(n)[:, None]
    step = max(1, _CHUNK // n)
    for r0 in range(0, n, step):
        r = np.arange(r0, min(r0 + step, n))[None, :]
        q = (r - p) % n
        out[r0 : r0 + q.shape[1]] = x @ (signs[p, q] * y[q])
    return out
