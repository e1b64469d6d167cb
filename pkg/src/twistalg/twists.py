"""Sign tables (twists) on finite groups and their law predicates.

A twist assigns +1 or -1 to every ordered pair of group elements, with the
identity row and column pinned to +1 so that the basis vector at the
identity acts as the algebra unit.  Tables are materialized densely as
int8 numpy arrays; every predicate is an exhaustive scan that reports the
first counterexample in row-major order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ContextMismatchError, TableFormatError
from .groups import GroupSpec, cyclic_group, parse_group, xor_group

TRIVIAL = "trivial"
HADAMARD = "hadamard"
CAYLEY_DICKSON = "cayley_dickson"
CLIFFORD = "clifford"
CUSTOM = "custom"

# laws named in PropertyReport.law
COMMUTATIVE = "commutative"
ASSOCIATIVE = "associative"
INVERTIVE = "invertive"
PROPER1 = "proper1"
PROPER2 = "proper2"
UNITAL = "unital"

_CHUNK = 1 << 22  # cells per chunk in the pairwise scans


@dataclass(frozen=True)
class PropertyReport:
    """Result of one law check: pass flag plus first counterexample.

    ``witness`` is the tuple of group elements (up to 3) at which the law
    first fails in row-major scan order; None iff the law holds.
    """

    law: str
    holds: bool
    witness: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present iff the law fails")


class TwistTable:
    """An order x order table of +/-1 signs over a group.

    Immutable after construction; construction rejects non-unital tables.
    """

    def __init__(self, group: GroupSpec, signs: np.ndarray, name: str = CUSTOM):
        signs = np.asarray(signs, dtype=np.int8)
        n = group.order
        if signs.shape != (n, n):
            raise TableFormatError(
                f"signs shape {signs.shape} does not match group order {n}"
            )
        if not np.all(np.abs(signs) == 1):
            raise TableFormatError("twist entries must be exactly -1 or +1")
        if not (np.all(signs[0, :] == 1) and np.all(signs[:, 0] == 1)):
            raise TableFormatError("twist must be unital: identity row/column +1")
        signs = signs.copy()
        signs.flags.writeable = False
        self.group = group
        self.signs = signs
        self.name = name

    @property
    def order(self) -> int:
        return self.group.order

    def sign(self, p: int, q: int) -> int:
        self.group.check_element(p)
        self.group.check_element(q)
        return int(self.signs[p, q])

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, TwistTable):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.signs, other.signs)

    def __hash__(self):
        return hash((self.group, self.signs.tobytes()))

    def __repr__(self):
        return f"TwistTable({self.name} on {self.group})"

    # cached law flags, used as operation preconditions ------------------

    @functools.cached_property
    def is_invertive(self) -> bool:
        return check_invertive(self).holds

    @functools.cached_property
    def is_proper(self) -> bool:
        r1, r2 = check_proper(self)
        return r1.holds and r2.holds

    def sign_rows(self) -> list[list[int]]:
        """Rows as plain int lists, cached for small orders; the exact-mode
        arithmetic loops are much faster on these than on numpy scalars."""
        rows = self.__dict__.get("_sign_rows")
        if rows is None:
            rows = self.signs.tolist()
            if self.order <= 1024:
                self.__dict__["_sign_rows"] = rows
        return rows


# constructors -----------------------------------------------------------


def trivial_twist(group: GroupSpec) -> TwistTable:
    """The all +1 twist, identity of the proper-twist group."""
    n = group.order
    return TwistTable(group, np.ones((n, n), dtype=np.int8), TRIVIAL)


def _parity_sign(values: np.ndarray) -> np.ndarray:
    """(-1)^popcount entrywise, as int8."""
    bits = np.bitwise_count(values.astype(np.uint64))
    return np.where(bits & 1, -1, 1).astype(np.int8)


def hadamard_twist(exponent: int) -> TwistTable:
    """(-1)^popcount(p AND q) on the xor group of the given exponent."""
    group = xor_group(exponent)
    idx = np.arange(group.order, dtype=np.int64)
    signs = _parity_sign(idx[:, None] & idx[None, :])
    return TwistTable(group, signs, HADAMARD)


# The three 2x2 doubling blocks of the Cayley-Dickson recursion, selected
# per (p, q) by: 0 -> p=0; 1 -> (0 != p = q) or (p != q = 0); 2 -> 0 != p != q != 0.
_CD_BLOCKS = np.array(
    [
        [[1, 1], [1, -1]],
        [[1, -1], [1, 1]],
        [[1, -1], [-1, -1]],
    ],
    dtype=np.int8,
)


@functools.lru_cache(maxsize=None)
def cayley_dickson_twist(exponent: int) -> TwistTable:
    """The twist producing the complex numbers, quaternions, octonions, ...

    Built by the doubling recursion: the table of size 2n is assembled from
    2x2 blocks, the block at (p, q) being the size-n entry times one of the
    three doubling matrices.
    """
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    g = np.ones((1, 1), dtype=np.int8)
    for _ in range(exponent):
        n = g.shape[0]
        p = np.arange(n)
        pp, qq = p[:, None], p[None, :]
        case = np.where(pp == 0, 0, np.where((pp == qq) | (qq == 0), 1, 2))
        blocks = g[:, :, None, None] * _CD_BLOCKS[case]  # (n, n, 2, 2)
        g = blocks.transpose(0, 2, 1, 3).reshape(2 * n, 2 * n)
    return TwistTable(xor_group(exponent), g, CAYLEY_DICKSON)


@functools.lru_cache(maxsize=None)
def clifford_twist(exponent: int) -> TwistTable:
    """The twist of the Clifford algebra with all 1-blades squaring to +1.

    Doubling step: entry (2p+r, 2q+s) equals the size-n entry (p, q) when
    s = 0 and picks up the factor (-1)^popcount(p) when s = 1.
    """
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    g = np.ones((1, 1), dtype=np.int8)
    for _ in range(exponent):
        n = g.shape[0]
        sbf = _parity_sign(np.arange(n, dtype=np.int64))
        factor = np.stack([np.ones(n, dtype=np.int8), sbf], axis=1)  # (n, 2)
        blocks = g[:, None, :, None] * factor[:, None, None, :]  # (n, 1, n, 2)
        g = np.broadcast_to(blocks, (n, 2, n, 2)).reshape(2 * n, 2 * n)
    return TwistTable(xor_group(exponent), g, CLIFFORD)


def custom_twist(group: GroupSpec, signs, name: str = CUSTOM) -> TwistTable:
    return TwistTable(group, np.asarray(signs, dtype=np.int8), name)


def twist_product(a: TwistTable, b: TwistTable) -> TwistTable:
    """Entrywise product; the group operation of the set of proper twists."""
    if a.group != b.group:
        raise ContextMismatchError(f"twist groups differ: {a.group} vs {b.group}")
    return TwistTable(a.group, a.signs * b.signs, CUSTOM)


def named_twist(name: str, group: GroupSpec) -> TwistTable:
    """Construct one of the named twists on the given group."""
    if name == TRIVIAL:
        return trivial_twist(group)
    if not group.is_xor:
        raise ValueError(f"{name} twist is only defined on xor groups")
    if name == HADAMARD:
        return hadamard_twist(group.param)
    if name == CAYLEY_DICKSON:
        return cayley_dickson_twist(group.param)
    if name == CLIFFORD:
        return clifford_twist(group.param)
    raise ValueError(f"unknown twist name {name!r}")


def parse_twist_spec(text: str) -> TwistTable:
    """Parse CLI twist descriptors.

    ``cayley_dickson:N``, ``hadamard:N``, ``clifford:N`` (xor exponent N),
    ``trivial:<group>`` e.g. ``trivial:cyclic:5``, or ``<name>:<group>``
    with an explicit group descriptor such as ``hadamard:xor:3``.
    """
    name, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"bad twist descriptor {text!r}; expected name:param")
    if ":" in rest:
        group = parse_group(rest)
    elif name == TRIVIAL:
        # bare integer defaults to a cyclic group for the trivial twist
        group = cyclic_group(int(rest))
    else:
        group = xor_group(int(rest))
    return named_twist(name, group)


# predicates --------------------------------------------------------------


def _first_true(mask: np.ndarray) -> Optional[tuple[int, ...]]:
    """Row-major position of the first True, or None."""
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None
    return tuple(int(v) for v in np.unravel_index(flat[0], mask.shape))


def check_unital(t: TwistTable) -> PropertyReport:
    s = t.signs
    bad = _first_true((s[0, :] != 1) | (s[:, 0] != 1))
    if bad is None:
        return PropertyReport(UNITAL, True)
    return PropertyReport(UNITAL, False, bad)


def check_commutative(t: TwistTable) -> PropertyReport:
    witness = _first_true(t.signs != t.signs.T)
    if witness is None:
        return PropertyReport(COMMUTATIVE, True)
    return PropertyReport(COMMUTATIVE, False, witness)


def check_invertive(t: TwistTable) -> PropertyReport:
    inv = t.group.inverse_all()
    idx = np.arange(t.order)
    mismatch = _first_true(t.signs[idx, inv] != t.signs[inv, idx])
    if mismatch is None:
        return PropertyReport(INVERTIVE, True)
    return PropertyReport(INVERTIVE, False, mismatch)


def _row_chunks(n: int) -> range:
    rows = max(1, _CHUNK // max(n, 1))
    return range(0, n, rows)


def check_proper(t: TwistTable) -> tuple[PropertyReport, PropertyReport]:
    """Both defining identities of a proper twist, scanned over all pairs.

    Condition 1: sgn(p,q) sgn(q,q^-1) = sgn(pq, q^-1)
    Condition 2: sgn(p^-1,p) sgn(p,q) = sgn(p^-1, pq)
    """
    s = t.signs
    n = t.order
    group = t.group
    inv = group.inverse_all()
    idx = np.arange(n)
    diag_r = s[idx, inv].astype(np.int16)  # sgn(q, q^-1)
    diag_l = s[inv, idx].astype(np.int16)  # sgn(p^-1, p)

    w1 = w2 = None
    rows = max(1, _CHUNK // n)
    for start in range(0, n, rows):
        stop = min(start + rows, n)
        p = np.arange(start, stop)
        pq = np.vstack([group.product_row(int(pi)) for pi in p])
        if w1 is None:
            lhs = s[start:stop].astype(np.int16) * diag_r[None, :]
            rhs = s[pq, inv[None, :]]
            local = _first_true(lhs != rhs)
            if local is not None:
                w1 = (start + local[0], local[1])
        if w2 is None:
            lhs = diag_l[start:stop, None] * s[start:stop]
            rhs = s[inv[start:stop, None], pq]
            local = _first_true(lhs != rhs)
            if local is not None:
                w2 = (start + local[0], local[1])
        if w1 is not None and w2 is not None:
            break
    r1 = PropertyReport(PROPER1, w1 is None, w1)
    r2 = PropertyReport(PROPER2, w2 is None, w2)
    return r1, r2


def is_proper(t: TwistTable) -> bool:
    r1, r2 = check_proper(t)
    return r1.holds and r2.holds


def check_associative(t: TwistTable) -> PropertyReport:
    """The cocycle identity sgn(p,q)sgn(pq,r) = sgn(p,qr)sgn(q,r), all triples."""
    s = t.signs
    n = t.order
    group = t.group
    s16 = s.astype(np.int16)
    prod = np.vstack([group.product_row(q) for q in range(n)])
    for p in range(n):
        # lhs[q, r] = s(p,q) s(pq, r); rhs[q, r] = s(p, qr) s(q, r)
        lhs = s16[p][:, None] * s16[prod[p], :]
        rhs = s16[p][prod] * s16
        local = _first_true(lhs != rhs)
        if local is not None:
            return PropertyReport(ASSOCIATIVE, False, (p, local[0], local[1]))
    return PropertyReport(ASSOCIATIVE, True)


# serialization ------------------------------------------------------------


def table_to_csv(t: TwistTable) -> str:
    """Row-major CSV of +/-1 integers, no header, newline-terminated rows."""
    return "".join(",".join(str(int(v)) for v in row) + "\n" for row in t.signs)


def table_from_csv(text: str, group: GroupSpec, name: str = CUSTOM) -> TwistTable:
    rows = [
        [int(cell) for cell in line.split(",")]
        for line in text.strip().splitlines()
        if line.strip()
    ]
    return TwistTable(group, np.array(rows, dtype=np.int8), name)


def table_to_json_obj(t: TwistTable) -> dict:
    return {
        "group": str(t.group),
        "name": t.name,
        "signs": [[int(v) for v in row] for row in t.signs],
    }


def table_from_json_obj(obj: dict) -> TwistTable:
    group = parse_group(obj["group"])
    return TwistTable(group, np.array(obj["signs"], dtype=np.int8), obj.get("name", CUSTOM))
