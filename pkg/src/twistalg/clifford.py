"""Blade-level Clifford arithmetic.

A blade is a signed product of distinct anticommuting 1-blades that square
to +1, stored as a strictly ascending tuple of 1-indexed positions.  Blade
index sets encode basis indices: position k corresponds to bit k-1, so the
blade with positions {1, 3, 4} is the basis vector at 0b1101 = 13.

Multiplication works by merging the two factor lists while counting the
transpositions needed to sort the concatenation, annihilating equal
factors.  This never consults the recursive twist table, making it the
independent oracle for that construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BladeParseError

REAL = "real"
IMAGINARY = "imaginary"


def grade(p: int) -> int:
    """Number of 1-blade factors of basis vector p: its popcount."""
    if p < 0:
        raise ValueError("index must be >= 0")
    return bin(p).count("1")


@dataclass(frozen=True)
class BladeExpression:
    """A signed blade: sign times the product of the listed 1-blades."""

    sign: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("blade sign must be -1 or +1")
        if any(i < 1 for i in self.indices):
            raise ValueError("blade indices are 1-indexed")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("blade indices must be strictly ascending")

    @property
    def grade(self) -> int:
        return len(self.indices)

    def __neg__(self) -> "BladeExpression":
        return BladeExpression(-self.sign, self.indices)


def i_to_e(p: int) -> BladeExpression:
    """Basis index to blade form: set bits become 1-indexed factor positions."""
    if p < 0:
        raise ValueError("index must be >= 0")
    return BladeExpression(1, tuple(k + 1 for k in range(p.bit_length()) if (p >> k) & 1))


def e_to_i(blade: BladeExpression) -> tuple[int, int]:
    """Blade form to (sign, basis index)."""
    p = 0
    for k in blade.indices:
        p |= 1 << (k - 1)
    return blade.sign, p


def blade_multiply(a: BladeExpression, b: BladeExpression) -> BladeExpression:
    """Merge-product of two blades.

    Each factor of b is moved left past the larger surviving factors of the
    accumulated list (one sign flip per transposition); meeting an equal
    factor annihilates the pair (1-blades square to +1).  The surviving
    index set is the symmetric difference.
    """
    merged = list(a.indices)
    swaps = 0
    for idx in b.indices:
        pos = len(merged)
        while pos > 0 and merged[pos - 1] > idx:
            pos -= 1
            swaps += 1
        if pos > 0 and merged[pos - 1] == idx:
            merged.pop(pos - 1)
        else:
            merged.insert(pos, idx)
    sign = a.sign * b.sign * (-1 if swaps & 1 else 1)
    return BladeExpression(sign, tuple(merged))


def blade_square_sign(g: int) -> int:
    """Sign of the square of a grade-g blade: (-1)^(g(g-1)/2).

    Moving the second copy's factors through the first costs
    g-1 + g-2 + ... + 0 transpositions before everything annihilates.
    """
    return -1 if (g * (g - 1) // 2) % 2 else 1


def blade_conjugate(blade: BladeExpression) -> BladeExpression:
    """The twist-defined conjugate restricted to a blade.

    On a self-inverse group the conjugate scales the basis vector at p by
    the table diagonal, which for blades is the square sign: the sign
    flips exactly when the grade is 2 or 3 mod 4.
    """
    if blade.grade % 4 in (2, 3):
        return -blade
    return blade


def parity(p: int) -> str:
    """Whether conjugation negates the basis vector at p."""
    return IMAGINARY if grade(p) % 4 in (2, 3) else REAL


# text form ------------------------------------------------------------------

_COMPACT = re.compile(r"^e([1-9][0-9]*)$")
_BRACKET = re.compile(r"^e\[([0-9, ]+)\]$")


def parse_blade(text: str) -> BladeExpression:
    """Parse '1', 'e134' (single-digit indices) or 'e[1,3,14]', with
    an optional leading '-'."""
    raw = text.strip()
    sign = 1
    if raw.startswith("-"):
        sign = -1
        raw = raw[1:].strip()
    if raw == "1":
        return BladeExpression(sign, ())
    m = _COMPACT.match(raw)
    if m:
        indices = tuple(int(ch) for ch in m.group(1))
    else:
        m = _BRACKET.match(raw)
        if not m:
            raise BladeParseError(f"cannot parse blade {text!r}")
        try:
            indices = tuple(int(part) for part in m.group(1).split(","))
        except ValueError:
            raise BladeParseError(f"cannot parse blade {text!r}") from None
    try:
        return BladeExpression(sign, indices)
    except ValueError as exc:
        raise BladeParseError(f"bad blade {text!r}: {exc}") from None


def format_blade(blade: BladeExpression) -> str:
    prefix = "-" if blade.sign < 0 else ""
    if not blade.indices:
        return prefix + "1"
    if blade.indices[-1] <= 9:
        return prefix + "e" + "".join(str(i) for i in blade.indices)
    return prefix + "e[" + ",".join(str(i) for i in blade.indices) + "]"
