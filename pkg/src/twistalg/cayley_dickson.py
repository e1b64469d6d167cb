"""The doubling construction on shuffled sequences.

This module multiplies elements as nested ordered pairs,
``(a,b)(c,d) = (ac - d conj(b), conj(a) d + c b)``, recursing down to real
scalars.  It never consults the sign table, so it serves as an independent
oracle for the Cayley-Dickson twist: a pair (x, y) of elements of the
size-2^N algebra is equated with the element of the size-2^(N+1) algebra
whose even coefficients come from x and odd coefficients from y.
"""

from __future__ import annotations

from .algebra import Element, basis, multiply
from .errors import ContextMismatchError
from .twists import TwistTable, cayley_dickson_twist


def _cd_exponent(x: Element) -> int:
    group = x.group
    if not group.is_xor or x.twist != cayley_dickson_twist(group.param):
        raise ContextMismatchError("element is not over a Cayley-Dickson context")
    return group.param


def shuffle(x: Element, y: Element) -> Element:
    """Interleave (x, y) into the element of the next doubling level."""
    n = _cd_exponent(x)
    if _cd_exponent(y) != n or x.mode != y.mode:
        raise ContextMismatchError("shuffle needs two elements of the same level and mode")
    target = cayley_dickson_twist(n + 1)
    coeffs = [0] * target.order
    for i in range(x.twist.order):
        coeffs[2 * i] = x.coeffs[i]
        coeffs[2 * i + 1] = y.coeffs[i]
    return Element(target, coeffs, x.mode)


def unshuffle(z: Element) -> tuple[Element, Element]:
    """Split an element of level N+1 into its level-N pair."""
    n = _cd_exponent(z)
    if n == 0:
        raise ValueError("cannot unshuffle a real scalar")
    source = cayley_dickson_twist(n - 1)
    return (
        Element(source, z.coeffs[0::2], z.mode),
        Element(source, z.coeffs[1::2], z.mode),
    )


def pair_conjugate(x: Element) -> Element:
    """conj(a, b) = (conj(a), -b), bottoming out at the identity on reals."""
    if _cd_exponent(x) == 0:
        return x
    a, b = unshuffle(x)
    return shuffle(pair_conjugate(a), -b)


def pair_product(x: Element, y: Element) -> Element:
    """Recursive ordered-pair product; real multiplication at the bottom."""
    n = _cd_exponent(x)
    if _cd_exponent(y) != n or x.mode != y.mode:
        raise ContextMismatchError("pair product needs matching levels and modes")
    if n == 0:
        return Element(x.twist, [x.coeffs[0] * y.coeffs[0]], x.mode)
    a, b = unshuffle(x)
    c, d = unshuffle(y)
    left = pair_product(a, c) - pair_product(d, pair_conjugate(b))
    right = pair_product(pair_conjugate(a), d) + pair_product(c, b)
    return shuffle(left, right)


def quaternion_triplets(exponent: int) -> list[tuple[int, int, int]]:
    """All (p, q, pq) with i_p i_q = +i_{pq} on nonzero distinct elements.

    Each cyclic class appears once, anchored at its smallest element and
    oriented toward the +1 successor; the list is sorted by (p, q).
    """
    if exponent < 2:
        raise ValueError("triplets need exponent >= 2")
    table = cayley_dickson_twist(exponent)
    n = table.order
    triples = []
    for a in range(1, n):
        for b in range(a + 1, n):
            c = a ^ b
            if c <= b:
                continue  # visit each {a, b, c} once, at its sorted form
            q = b if table.sign(a, b) == 1 else c
            triples.append((a, q, a ^ q))
    triples.sort()
    return triples


def blade_factor_cd(p: int) -> list[int]:
    """Set bits of p, ascending: the 1-blade factors of basis vector p.

    The left-nested product of the factors, innermost the highest bit,
    recovers +1 times the basis vector at p (each step multiplies a power
    of two into an index whose set bits are all higher).
    """
    if p < 0:
        raise ValueError("index must be >= 0")
    return [k for k in range(p.bit_length()) if (p >> k) & 1]


def left_nested_blade_product(p: int, twist: TwistTable, mode: str = "exact") -> Element:
    """Evaluate the left-nested product of the 1-blade factors of p."""
    bits = blade_factor_cd(p)
    acc = basis(twist, 0, mode)
    for k in reversed(bits):
        acc = multiply(basis(twist, 1 << k, mode), acc)
    return acc
