"""Finite groups indexing the algebra bases.

Two kinds are supported, both with elements encoded as integers
``0 .. order-1`` and identity ``0``:

* ``xor``: the direct product of ``N`` copies of the two-element group,
  realized as bitwise XOR on ``0 .. 2^N - 1``.
* ``cyclic``: integers mod ``n`` under addition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidElementError

XOR = "xor"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class GroupSpec:
    """Descriptor of a finite group.

    ``param`` is the exponent N for kind ``xor`` (order 2^N) and the
    modulus n for kind ``cyclic`` (order n).
    """

    kind: str
    param: int

    def __post_init__(self):
        if self.kind not in (XOR, CYCLIC):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == XOR and self.param < 0:
            raise ValueError("xor group needs exponent N >= 0")
        if self.kind == CYCLIC and self.param < 1:
            raise ValueError("cyclic group needs modulus n >= 1")

    @property
    def order(self) -> int:
        return 2**self.param if self.kind == XOR else self.param

    @property
    def is_xor(self) -> bool:
        return self.kind == XOR

    def __str__(self) -> str:
        return f"{self.kind}:{self.param}"

    def check_element(self, p: int) -> int:
        if not 0 <= p < self.order:
            raise InvalidElementError(f"element {p} out of range for {self}")
        return p

    def elements(self) -> range:
        return range(self.order)

    # scalar operations -------------------------------------------------

    def product(self, p: int, q: int) -> int:
        self.check_element(p)
        self.check_element(q)
        if self.kind == XOR:
            return p ^ q
        return (p + q) % self.param

    def inverse(self, p: int) -> int:
        self.check_element(p)
        if self.kind == XOR:
            return p
        return (-p) % self.param

    def divide_right(self, r: int, q: int) -> int:
        """The p with p*q = r."""
        self.check_element(r)
        self.check_element(q)
        if self.kind == XOR:
            return r ^ q
        return (r - q) % self.param

    # vectorized helpers (used by the table-level law checks) -----------

    def product_row(self, p: int) -> np.ndarray:
        """Array of p*q over all q, in index order."""
        n = self.order
        if self.kind == XOR:
            return np.bitwise_xor(p, np.arange(n, dtype=np.int64))
        return (p + np.arange(n, dtype=np.int64)) % n

    def inverse_all(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n, dtype=np.int64)
        if self.kind == XOR:
            return idx
        return (-idx) % n


def xor_group(exponent: int) -> GroupSpec:
    return GroupSpec(XOR, exponent)


def cyclic_group(n: int) -> GroupSpec:
    return GroupSpec(CYCLIC, n)


def parse_group(text: str) -> GroupSpec:
    """Parse the CLI text form ``xor:N`` / ``cyclic:n``."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise ValueError(f"bad group descriptor {text!r}; expected kind:param")
    try:
        param = int(arg)
    except ValueError:
        raise ValueError(f"bad group parameter in {text!r}") from None
    return GroupSpec(kind, param)


def product(group: GroupSpec, p: int, q: int) -> int:
    return group.product(p, q)


def inverse(group: GroupSpec, p: int) -> int:
    return group.inverse(p)


def interior(group: GroupSpec) -> list[tuple[int, int]]:
    """All pairs (p, q) with p != e, q != e and pq != e, row-major."""
    return [
        (p, q)
        for p in group.elements()
        for q in group.elements()
        if p != 0 and q != 0 and group.product(p, q) != 0
    ]
