"""Backend dispatch for the float64 product kernels.

The compiled extension is preferred when present; set ``TWISTALG_PURE=1``
to force the numpy fallback.  Both backends compute the same double sum
and agree to float64 rounding.
"""

from __future__ import annotations

import functools
import os

import numpy as np

from . import _purekernels
from .groups import GroupSpec

try:
    from . import _fastkernels
except ImportError:  # pragma: no cover - depends on how the package was built
    _fastkernels = None

PURE = "pure"
COMPILED = "compiled"


def compiled_available() -> bool:
    return _fastkernels is not None


def backend() -> str:
    if _fastkernels is None or os.environ.get("TWISTALG_PURE", "") not in ("", "0"):
        return PURE
    return COMPILED


@functools.lru_cache(maxsize=None)
def _prod_table(group: GroupSpec) -> np.ndarray:
    table = np.vstack([group.product_row(p) for p in range(group.order)])
    return np.ascontiguousarray(table, dtype=np.int64)


def multiply_f64(signs: np.ndarray, group: GroupSpec, x: np.ndarray, y: np.ndarray,
                 force: str | None = None) -> np.ndarray:
    """Coefficients of the twisted product of float64 coefficient vectors."""
    which = force or backend()
    if which == COMPILED:
        if _fastkernels is None:
            raise RuntimeError("compiled kernels are not available in this install")
        out = np.zeros(x.shape[0])
        if group.is_xor:
            _fastkernels.mul_xor_f64(signs, x, y, out)
        else:
            _fastkernels.mul_table_f64(signs, _prod_table(group), x, y, out)
        return out
    if group.is_xor:
        return _purekernels.mul_xor_f64(signs, x, y)
    return _purekernels.mul_cyclic_f64(signs, x, y)
