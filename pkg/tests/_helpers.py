"""Shared test utilities: seeded random elements and tiny fixture twists."""

import random
from fractions import Fraction

import numpy as np

from twistalg import Element, custom_twist, cyclic_group

DENOMS = (1, 1, 1, 2, 3, 4)


def rand_exact(twist, rng: random.Random, bound: int = 9) -> Element:
    """Random exact-rational element with small numerators/denominators."""
    coeffs = [Fraction(rng.randint(-bound, bound), rng.choice(DENOMS)) for _ in range(twist.order)]
    return Element(twist, coeffs)


def rand_int(twist, rng: random.Random, bound: int = 9) -> Element:
    return Element(twist, [rng.randint(-bound, bound) for _ in range(twist.order)])


def rand_float(twist, rng: random.Random) -> Element:
    return Element(twist, [rng.gauss(0.0, 1.0) for _ in range(twist.order)], "float64")


def non_invertive_twist():
    """Unital table on cyclic:3 with sgn(1,2) != sgn(2,1): not invertive."""
    signs = np.ones((3, 3), dtype=np.int8)
    signs[1, 2] = -1
    return custom_twist(cyclic_group(3), signs)


def invertive_non_proper_twist():
    """Unital table on cyclic:3 with sgn(1,1) = -1 only.

    Invertive (the (1,2)/(2,1) diagonal is untouched) but fails properness
    condition 1 at p=1, q=1: sgn(1,1) sgn(1,2) != sgn(2,2).
    """
    signs = np.ones((3, 3), dtype=np.int8)
    signs[1, 1] = -1
    return custom_twist(cyclic_group(3), signs)
