"""Seeded, documented random streams for the reproducible experiments.

Generator: splitmix64.  The stream for a 64-bit seed s is
``out[i] = mix(s + (i+1) * GOLDEN mod 2^64)`` where ``mix`` is the
standard splitmix64 finalizer (xor-shift 30, multiply 0xBF58476D1CE4E5B9,
xor-shift 27, multiply 0x94D049BB133111EB, xor-shift 31) and GOLDEN is
0x9E3779B97F4A7C15.  Sample k of an experiment draws from the substream
seeded with ``mix(seed XOR ((k+1) * GOLDEN mod 2^64))``.

Normal deviates come from the Box-Muller transform on consecutive word
pairs (a, b): u1 = ((a >> 11) + 1) * 2^-53 in (0, 1],
u2 = (b >> 11) * 2^-53 in [0, 1), giving the pair
(r cos(2 pi u2), r sin(2 pi u2)) with r = sqrt(-2 ln u1).

Any implementation of this recipe reproduces the streams bit-for-bit,
which is what makes the seeded reports comparable.
"""

from __future__ import annotations

import numpy as np

ALGORITHM = "splitmix64/box-muller:v1"

GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1
_U64 = np.uint64
_TWO_NEG53 = 2.0**-53


def mix(z: int) -> int:
    """The splitmix64 finalizer on a 64-bit word."""
    z &= _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


def _mix_array(z: np.ndarray) -> np.ndarray:
    z = z.astype(np.uint64, copy=True)
    z ^= z >> _U64(30)
    z *= _U64(0xBF58476D1CE4E5B9)
    z ^= z >> _U64(27)
    z *= _U64(0x94D049BB133111EB)
    z ^= z >> _U64(31)
    return z


def words(seed: int, count: int) -> np.ndarray:
    """The first ``count`` uint64 words of the stream for ``seed``."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        return _mix_array(_U64(seed & _MASK) + idx * _U64(GOLDEN))


def substream_seed(seed: int, index: int) -> int:
    """Seed of the independent substream for sample ``index``."""
    return mix((seed & _MASK) ^ (((index + 1) * GOLDEN) & _MASK))


def normals(seed: int, count: int) -> np.ndarray:
    """``count`` standard-normal deviates from the stream for ``seed``."""
    pairs = (count + 1) // 2
    w = words(seed, 2 * pairs)
    a = w[0::2]
    b = w[1::2]
    u1 = ((a >> _U64(11)).astype(np.float64) + 1.0) * _TWO_NEG53
    u2 = (b >> _U64(11)).astype(np.float64) * _TWO_NEG53
    r = np.sqrt(-2.0 * np.log(u1))
    theta = 2.0 * np.pi * u2
    out = np.empty(2 * pairs)
    out[0::2] = r * np.cos(theta)
    out[1::2] = r * np.sin(theta)
    return out[:count]
