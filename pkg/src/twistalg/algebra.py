"""Twisted group algebra elements and their operations.

An element is a coefficient vector indexed by group elements, over one of
two scalar modes: ``exact`` (Python ints and Fractions, used by every law
check so equalities are exact) and ``float64`` (numpy, used by the norm
experiments).  Three independent product routes are provided and used as
mutual oracles: the direct double sum, the standard-matrix route, and the
Fourier-expansion route (proper twists only).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from . import kernels
from .errors import ContextMismatchError, InvalidElementError, UnsupportedTwistError
from .groups import parse_group
from .twists import (
    CUSTOM,
    PropertyReport,
    TwistTable,
    named_twist,
    table_from_json_obj,
    table_to_json_obj,
)

EXACT = "exact"
FLOAT64 = "float64"

ExactScalar = Union[int, Fraction]


def _check_exact_scalar(value) -> ExactScalar:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return value
    raise TypeError(f"exact mode needs int or Fraction coefficients, got {type(value).__name__}")


class Element:
    """A coefficient vector over a (group, twist) context.

    Arithmetic between elements requires the same twist table and the same
    scalar mode.
    """

    __slots__ = ("twist", "mode", "coeffs")

    def __init__(self, twist: TwistTable, coeffs, mode: str = EXACT):
        n = twist.order
        if mode == EXACT:
            coeffs = tuple(_check_exact_scalar(c) for c in coeffs)
            if len(coeffs) != n:
                raise ValueError(f"need {n} coefficients, got {len(coeffs)}")
        elif mode == FLOAT64:
            coeffs = np.array(coeffs, dtype=np.float64)
            if coeffs.shape != (n,):
                raise ValueError(f"need {n} coefficients, got shape {coeffs.shape}")
            coeffs.flags.writeable = False
        else:
            raise ValueError(f"unknown scalar mode {mode!r}")
        self.twist = twist
        self.mode = mode
        self.coeffs = coeffs

    @property
    def group(self):
        return self.twist.group

    @property
    def context(self) -> tuple:
        return (self.twist.group, self.twist)

    def is_zero(self) -> bool:
        if self.mode == EXACT:
            return all(c == 0 for c in self.coeffs)
        return not np.any(self.coeffs)

    def __repr__(self):
        return f"Element({self.twist.name} on {self.group}, {self.mode}, {list(self.coeffs)!r})"

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self.mode != other.mode or self.twist != other.twist:
            return False
        if self.mode == EXACT:
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.mode, tuple(self.coeffs)))

    # linear structure ----------------------------------------------------

    def __add__(self, other):
        _require_same(self, other)
        if self.mode == EXACT:
            return Element(self.twist, [a + b for a, b in zip(self.coeffs, other.coeffs)], EXACT)
        return Element(self.twist, self.coeffs + other.coeffs, FLOAT64)

    def __sub__(self, other):
        _require_same(self, other)
        if self.mode == EXACT:
            return Element(self.twist, [a - b for a, b in zip(self.coeffs, other.coeffs)], EXACT)
        return Element(self.twist, self.coeffs - other.coeffs, FLOAT64)

    def __neg__(self):
        if self.mode == EXACT:
            return Element(self.twist, [-a for a in self.coeffs], EXACT)
        return Element(self.twist, -self.coeffs, FLOAT64)

    def scale(self, c) -> "Element":
        if self.mode == EXACT:
            _check_exact_scalar(c)
            return Element(self.twist, [c * a for a in self.coeffs], EXACT)
        return Element(self.twist, float(c) * self.coeffs, FLOAT64)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


def _require_same(x: Element, y: Element) -> None:
    if x.mode != y.mode:
        raise ContextMismatchError(f"scalar modes differ: {x.mode} vs {y.mode}")
    if x.twist is not y.twist and x.twist != y.twist:
        raise ContextMismatchError("elements live over different twist contexts")


def element(twist: TwistTable, coeffs, mode: str = EXACT) -> Element:
    return Element(twist, coeffs, mode)


def zero(twist: TwistTable, mode: str = EXACT) -> Element:
    if mode == EXACT:
        return Element(twist, [0] * twist.order, EXACT)
    return Element(twist, np.zeros(twist.order), FLOAT64)


def basis(twist: TwistTable, p: int, mode: str = EXACT) -> Element:
    """The unit basis vector at group element p."""
    n = twist.order
    if not 0 <= p < n:
        raise InvalidElementError(f"basis index {p} out of range for order {n}")
    if mode == EXACT:
        return Element(twist, [1 if i == p else 0 for i in range(n)], EXACT)
    coeffs = np.zeros(n)
    coeffs[p] = 1.0
    return Element(twist, coeffs, FLOAT64)


def one(twist: TwistTable, mode: str = EXACT) -> Element:
    return basis(twist, 0, mode)


# products --------------------------------------------------------------


def multiply(x: Element, y: Element) -> Element:
    """Direct double-sum product: sum of sgn(p,q) x_p y_q at index pq."""
    _require_same(x, y)
    twist = x.twist
    if x.mode == FLOAT64:
        out = kernels.multiply_f64(twist.signs, twist.group, x.coeffs, y.coeffs)
        return Element(twist, out, FLOAT64)
    group = twist.group
    rows = twist.sign_rows()
    out = [0] * twist.order
    ynz = [(q, yq) for q, yq in enumerate(y.coeffs) if yq]
    is_xor = group.is_xor
    mod = group.param
    for p, xp in enumerate(x.coeffs):
        if not xp:
            continue
        row = rows[p]
        if is_xor:
            for q, yq in ynz:
                if row[q] > 0:
                    out[p ^ q] += xp * yq
                else:
                    out[p ^ q] -= xp * yq
        else:
            for q, yq in ynz:
                if row[q] > 0:
                    out[(p + q) % mod] += xp * yq
                else:
                    out[(p + q) % mod] -= xp * yq
    return Element(twist, out, EXACT)


@dataclass
class StandardMatrix:
    """The matrix of left multiplication by a fixed element.

    Entry (r, s) is sgn(r s^-1, s) x_{r s^-1}, so that the matrix-vector
    product with y's coefficients reproduces x y.
    """

    twist: TwistTable
    mode: str
    entries: object  # tuple-of-tuples in exact mode, ndarray in float mode


def standard_matrix(x: Element) -> StandardMatrix:
    twist = x.twist
    group = twist.group
    n = twist.order
    signs = twist.signs
    if x.mode == FLOAT64:
        idx = np.arange(n)
        if group.is_xor:
            d = idx[:, None] ^ idx[None, :]
        else:
            d = (idx[:, None] - idx[None, :]) % n
        entries = signs[d, idx[None, :]] * np.asarray(x.coeffs)[d]
        return StandardMatrix(twist, FLOAT64, entries)
    sign_rows = twist.sign_rows()
    xc = x.coeffs
    rows = []
    for r in range(n):
        row = []
        for s in range(n):
            p = (r ^ s) if group.is_xor else (r - s) % n
            row.append(sign_rows[p][s] * xc[p])
        rows.append(tuple(row))
    return StandardMatrix(twist, EXACT, tuple(rows))


def multiply_via_matrix(x: Element, y: Element) -> Element:
    """Product through the standard matrix of x; oracle for multiply()."""
    _require_same(x, y)
    mat = standard_matrix(x)
    if x.mode == FLOAT64:
        return Element(x.twist, mat.entries @ np.asarray(y.coeffs), FLOAT64)
    out = [sum(mrs * ys for mrs, ys in zip(row, y.coeffs)) for row in mat.entries]
    return Element(x.twist, out, EXACT)


# conjugation and inner product ------------------------------------------


def _require_invertive(twist: TwistTable) -> None:
    if not twist.is_invertive:
        raise UnsupportedTwistError("operation needs an invertive twist")


def _require_proper(twist: TwistTable) -> None:
    if not twist.is_proper:
        raise UnsupportedTwistError("operation needs a proper twist")


def conjugate(x: Element) -> Element:
    """Coefficient at p becomes sgn(p^-1, p) x_{p^-1}; scalars are real."""
    twist = x.twist
    _require_invertive(twist)
    group = twist.group
    signs = twist.signs
    inv = group.inverse_all()
    if x.mode == FLOAT64:
        idx = np.arange(twist.order)
        out = signs[inv, idx] * np.asarray(x.coeffs)[inv]
        return Element(twist, out, FLOAT64)
    rows = twist.sign_rows()
    invl = inv.tolist()
    out = [rows[invl[p]][p] * x.coeffs[invl[p]] for p in range(twist.order)]
    return Element(twist, out, EXACT)


def inner_product(x: Element, y: Element):
    """Sum of x_p y_p (real scalars, so no scalar conjugation)."""
    _require_same(x, y)
    if x.mode == FLOAT64:
        return float(np.dot(x.coeffs, y.coeffs))
    return sum(a * b for a, b in zip(x.coeffs, y.coeffs))


def norm_squared(x: Element):
    return inner_product(x, x)


def norm(x: Element) -> float:
    if x.mode != FLOAT64:
        raise ValueError("norm needs float64 mode; use norm_squared in exact mode")
    return float(np.sqrt(norm_squared(x)))


# Fourier route ------------------------------------------------------------


def fourier_product_forms(x: Element, y: Element) -> tuple[Element, Element]:
    """Both Fourier expansions of the product, as separate elements.

    Form 1 has coefficient sum_q sgn(r,q) conj(y)_q x_{rq} at r; form 2 has
    sum_s sgn(s,r) conj(x)_s y_{sr}.  For a proper twist both equal x y.
    """
    _require_same(x, y)
    twist = x.twist
    _require_proper(twist)
    group = twist.group
    rows = twist.sign_rows()
    n = twist.order
    cx = conjugate(x).coeffs
    cy = conjugate(y).coeffs
    xc, yc = x.coeffs, y.coeffs
    is_xor = group.is_xor
    mod = group.param
    form1 = []
    form2 = []
    for r in range(n):
        row = rows[r]
        if is_xor:
            acc1 = sum(row[q] * cy[q] * xc[r ^ q] for q in range(n) if cy[q])
            acc2 = sum(rows[s][r] * cx[s] * yc[s ^ r] for s in range(n) if cx[s])
        else:
            acc1 = sum(row[q] * cy[q] * xc[(r + q) % mod] for q in range(n) if cy[q])
            acc2 = sum(rows[s][r] * cx[s] * yc[(s + r) % mod] for s in range(n) if cx[s])
        form1.append(acc1)
        form2.append(acc2)
    return Element(twist, form1, x.mode), Element(twist, form2, x.mode)


def multiply_via_fourier(x: Element, y: Element) -> Element:
    """Product through the Fourier expansion; needs a proper twist."""
    form1, _ = fourier_product_forms(x, y)
    return form1


# symmetric / antisymmetric decomposition ----------------------------------


def _filtered_product(x: Element, y: Element, keep_symmetric: bool) -> Element:
    _require_same(x, y)
    twist = x.twist
    group = twist.group
    rows = twist.sign_rows()
    out = [0] * twist.order
    for p, xp in enumerate(x.coeffs):
        if not xp:
            continue
        row = rows[p]
        for q, yq in enumerate(y.coeffs):
            if not yq:
                continue
            if (row[q] == rows[q][p]) == keep_symmetric:
                out[group.product(p, q)] += row[q] * xp * yq
    if x.mode == FLOAT64:
        return Element(twist, np.array(out, dtype=np.float64), FLOAT64)
    return Element(twist, out, EXACT)


def symmetric_product(x: Element, y: Element) -> Element:
    """The part of x y summed over pairs where the twist is symmetric."""
    return _filtered_product(x, y, True)


def antisymmetric_product(x: Element, y: Element) -> Element:
    """The part of x y summed over pairs where the twist is anti-symmetric."""
    return _filtered_product(x, y, False)


@dataclass
class SasDecomposition:
    """Five-term split of the symmetric product for invertive twists.

    left_term + right_term + scalar_part + interior_sym reassembles the
    symmetric product; interior_antisym equals the anti-symmetric product.
    Scalar quantities are embedded as multiples of the identity basis
    vector.
    """

    scalar_part: Element
    left_term: Element
    right_term: Element
    interior_sym: Element
    interior_antisym: Element

    def reassemble_symmetric(self) -> Element:
        return self.left_term + self.right_term + self.scalar_part + self.interior_sym


_ONE_HALF = Fraction(1, 2)


def _half(value, mode: str):
    if mode == FLOAT64:
        return value / 2.0
    return value * _ONE_HALF


def sas_decomposition(x: Element, y: Element) -> SasDecomposition:
    """Split x into identity-row, identity-column, diagonal and interior sums."""
    _require_same(x, y)
    twist = x.twist
    _require_invertive(twist)
    group = twist.group
    rows = twist.sign_rows()
    n = twist.order
    mode = x.mode

    left = y.scale(x.coeffs[0])
    right = x.scale(y.coeffs[0])
    inv = group.inverse_all().tolist()
    diag = sum(rows[p][inv[p]] * x.coeffs[p] * y.coeffs[inv[p]] for p in range(n))
    scalar = diag - 2 * x.coeffs[0] * y.coeffs[0]
    scalar_part = basis(twist, 0, mode).scale(scalar)

    xc, yc = x.coeffs, y.coeffs
    sym = [0] * n
    antisym = [0] * n
    for p in range(1, n):
        row = rows[p]
        for q in range(1, n):
            pq = group.product(p, q)
            if pq == 0:
                continue
            s = row[q]
            if s == rows[q][p]:
                sym[pq] += s * _half(xc[p] * yc[q] + xc[q] * yc[p], mode)
            else:
                antisym[pq] += s * _half(xc[p] * yc[q] - xc[q] * yc[p], mode)
    if mode == FLOAT64:
        interior_sym = Element(twist, np.array(sym, dtype=np.float64), mode)
        interior_antisym = Element(twist, np.array(antisym, dtype=np.float64), mode)
    else:
        interior_sym = Element(twist, sym, mode)
        interior_antisym = Element(twist, antisym, mode)
    return SasDecomposition(scalar_part, left, right, interior_sym, interior_antisym)


# law checks over elements ---------------------------------------------------

ADJOINT_LEFT = "adjoint_left"
ADJOINT_RIGHT = "adjoint_right"
CONJUGATE_ANTIHOMOMORPHISM = "conjugate_antihomomorphism"


def _element_report(law: str, holds: bool) -> PropertyReport:
    # element-level checks have no group-element witness; an empty tuple
    # marks "failed, see the operands"
    return PropertyReport(law, holds, None if holds else ())


def adjoint_check(x: Element, y: Element, z: Element) -> tuple[PropertyReport, PropertyReport]:
    """The two adjoint identities <xy,z> = <y, conj(x) z> and <x,yz> = <x conj(z), y>."""
    _require_same(x, y)
    _require_same(y, z)
    _require_proper(x.twist)
    left = inner_product(multiply(x, y), z) == inner_product(y, multiply(conjugate(x), z))
    right = inner_product(x, multiply(y, z)) == inner_product(multiply(x, conjugate(z)), y)
    return _element_report(ADJOINT_LEFT, left), _element_report(ADJOINT_RIGHT, right)


def conjugate_antihomomorphism_check(x: Element, y: Element) -> PropertyReport:
    """conj(x y) = conj(y) conj(x), exact in exact mode."""
    _require_same(x, y)
    _require_proper(x.twist)
    holds = conjugate(multiply(x, y)) == multiply(conjugate(y), conjugate(x))
    return _element_report(CONJUGATE_ANTIHOMOMORPHISM, holds)


def zero_theorem_check(x: Element, p: int):
    """(1 - sgn(p,p)) <x, i_p x>; zero for proper twists on self-inverse groups."""
    twist = x.twist
    if not twist.group.is_xor:
        raise UnsupportedTwistError("zero-theorem check needs a self-inverse (xor) group")
    _require_proper(twist)
    ip_x = multiply(basis(twist, p, x.mode), x)
    return (1 - twist.sign(p, p)) * inner_product(x, ip_x)


# serialization ---------------------------------------------------------------


def _scalar_to_json(value, mode: str):
    if mode == FLOAT64:
        return float(value)
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _scalar_from_json(value, mode: str):
    if mode == FLOAT64:
        return float(value)
    if isinstance(value, str):
        return Fraction(value) if "/" in value else int(value)
    if isinstance(value, int):
        return value
    raise ValueError(f"exact coefficients must be integers or 'n/d' strings, got {value!r}")


def element_to_json_obj(x: Element) -> dict:
    twist = x.twist
    twist_repr = twist.name if twist.name != CUSTOM else table_to_json_obj(twist)
    return {
        "context": {"group": str(twist.group), "twist": twist_repr},
        "mode": x.mode,
        "coeffs": [_scalar_to_json(c, x.mode) for c in x.coeffs],
    }


def element_from_json_obj(obj: dict, twist: Optional[TwistTable] = None) -> Element:
    mode = obj.get("mode", EXACT)
    if twist is None:
        ctx = obj["context"]
        group = parse_group(ctx["group"])
        spec = ctx["twist"]
        if isinstance(spec, dict):
            twist = table_from_json_obj(spec)
            if twist.group != group:
                raise ContextMismatchError("element group does not match its twist table")
        else:
            twist = named_twist(spec, group)
    coeffs = [_scalar_from_json(c, mode) for c in obj["coeffs"]]
    return Element(twist, coeffs, mode)
