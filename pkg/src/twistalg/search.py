"""Enumeration of proper twists and zero-divisor search.

Properness is a system of parity constraints over the free sign cells
(every cell outside the identity row/column), because each defining
identity multiplies three table entries to +1.  The enumerator runs a
depth-first scan over those cells in row-major order and propagates every
constraint as soon as all but one of its cells is decided, which prunes
the 2^((n-1)^2) raw space to the point where order 16 is instant.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import Element, basis, multiply
from .errors import IncompleteEnumerationError
from .groups import GroupSpec
from .twists import (
    PropertyReport,
    TwistTable,
    check_associative,
    check_commutative,
    check_invertive,
    check_proper,
    is_proper,
    trivial_twist,
)


@dataclass
class EnumerationResult:
    group: GroupSpec
    twists: list[TwistTable]
    stats: dict
    complete: bool


def _properness_constraints(group: GroupSpec) -> list[tuple[int, ...]]:
    """Parity constraints over free-cell variable ids.

    Free cells are (p, q) with p, q >= 1, numbered row-major.  Each
    properness identity contributes the cells it touches; cells in the
    identity row/column are +1 and drop out, and a cell appearing twice
    cancels.  A constraint is the sorted tuple of surviving variable ids
    whose sign product must be +1 (even parity).
    """
    n = group.order
    m = n - 1

    def var(p: int, q: int) -> Optional[int]:
        if p == 0 or q == 0:
            return None
        return (p - 1) * m + (q - 1)

    constraints = set()
    for p in range(n):
        for q in range(n):
            qinv = group.inverse(q)
            pinv = group.inverse(p)
            pq = group.product(p, q)
            for cells in (
                (var(p, q), var(q, qinv), var(pq, qinv)),
                (var(pinv, p), var(p, q), var(pinv, pq)),
            ):
                odd = set()
                for c in cells:
                    if c is None:
                        continue
                    if c in odd:
                        odd.remove(c)
                    else:
                        odd.add(c)
                if odd:
                    constraints.add(tuple(sorted(odd)))
    return sorted(constraints)


def _table_from_bits(group: GroupSpec, bits: list[int]) -> TwistTable:
    n = group.order
    m = n - 1
    signs = np.ones((n, n), dtype=np.int8)
    for v, bit in enumerate(bits):
        p, q = divmod(v, m)
        signs[p + 1, q + 1] = -1 if bit else 1
    return TwistTable(group, signs)


def enumerate_proper_twists(group: GroupSpec, node_budget: int = 10**8) -> EnumerationResult:
    """All unital sign tables on the group satisfying both properness laws.

    Deterministic DFS over free cells in row-major order, trying +1 before
    -1; the result list is sorted by row-major sign vector.  If the node
    budget runs out the result is flagged incomplete.
    """
    start = time.perf_counter()
    n = group.order
    nvars = (n - 1) * (n - 1)
    constraints = _properness_constraints(group)

    # per-constraint mutable state: number of unassigned cells, running parity
    unassigned = [len(c) for c in constraints]
    parity = [0] * len(constraints)
    watching: list[list[int]] = [[] for _ in range(nvars)]
    for ci, cells in enumerate(constraints):
        for v in cells:
            watching[v].append(ci)

    assignment: list[Optional[int]] = [None] * nvars
    explored = 0
    pruned = 0
    budget_hit = False
    found: list[list[int]] = []

    def propagate(v: int, bit: int, trail: list[int]) -> bool:
        """Assign v := bit plus all consequences; record the trail."""
        queue = [(v, bit)]
        while queue:
            u, b = queue.pop()
            if assignment[u] is not None:
                if assignment[u] != b:
                    return False
                continue
            assignment[u] = b
            trail.append(u)
            for ci in watching[u]:
                unassigned[ci] -= 1
                parity[ci] ^= b
                if unassigned[ci] == 0:
                    if parity[ci]:
                        return False
                elif unassigned[ci] == 1:
                    rest = next(w for w in constraints[ci] if assignment[w] is None)
                    queue.append((rest, parity[ci]))
        return True

    def undo(trail: list[int]) -> None:
        for u in reversed(trail):
            bit = assignment[u]
            assignment[u] = None
            for ci in watching[u]:
                unassigned[ci] += 1
                parity[ci] ^= bit

    def dfs(next_var: int) -> None:
        nonlocal explored, pruned, budget_hit
        if budget_hit:
            return
        while next_var < nvars and assignment[next_var] is not None:
            next_var += 1
        if next_var == nvars:
            found.append([assignment[v] for v in range(nvars)])
            return
        for bit in (0, 1):
            explored += 1
            if explored > node_budget:
                budget_hit = True
                return
            trail: list[int] = []
            if propagate(next_var, bit, trail):
                dfs(next_var + 1)
            else:
                pruned += 1
            undo(trail)
            if budget_hit:
                return

    dfs(0)
    tables = [_table_from_bits(group, bits) for bits in found]
    tables.sort(key=lambda t: t.signs.tobytes())
    stats = {
        "explored": explored,
        "pruned": pruned,
        "elapsed": time.perf_counter() - start,
    }
    return EnumerationResult(group, tables, stats, not budget_hit)


def enumerate_proper_twists_naive(group: GroupSpec) -> EnumerationResult:
    """Filter all 2^((n-1)^2) unital tables through the properness check.

    Oracle for the propagating enumerator; only usable for tiny orders.
    """
    start = time.perf_counter()
    n = group.order
    nvars = (n - 1) * (n - 1)
    tables = []
    for bits in itertools.product((0, 1), repeat=nvars):
        t = _table_from_bits(group, list(bits))
        if is_proper(t):
            tables.append(t)
    tables.sort(key=lambda t: t.signs.tobytes())
    stats = {"explored": 2**nvars, "pruned": 0, "elapsed": time.perf_counter() - start}
    return EnumerationResult(group, tables, stats, True)


def classify(result: EnumerationResult) -> list[dict]:
    """Per-twist law flags for an enumeration result."""
    flags = []
    for t in result.twists:
        flags.append(
            {
                "commutative": check_commutative(t).holds,
                "associative": check_associative(t).holds,
                "invertive": check_invertive(t).holds,
            }
        )
    return flags


@dataclass
class TwistGroupReport:
    """Abelian-group laws of a complete proper-twist set under the
    pointwise product: closure, identity membership, self-inverse,
    commutativity.  Witnesses are indices into the enumerated list."""

    closure: PropertyReport
    identity: PropertyReport
    self_inverse: PropertyReport
    commutative: PropertyReport

    @property
    def holds(self) -> bool:
        return all(
            r.holds for r in (self.closure, self.identity, self.self_inverse, self.commutative)
        )


def verify_twist_group(result: EnumerationResult) -> TwistGroupReport:
    if not result.complete:
        raise IncompleteEnumerationError("twist-group verification needs a complete enumeration")
    keys = {t.signs.tobytes(): i for i, t in enumerate(result.twists)}
    trivial_key = trivial_twist(result.group).signs.tobytes()

    identity_ok = trivial_key in keys
    identity = PropertyReport("identity", identity_ok, None if identity_ok else ())

    closure_witness = None
    commutative_witness = None
    self_inverse_witness = None
    for i, a in enumerate(result.twists):
        prod_self = a.signs * a.signs
        if self_inverse_witness is None and prod_self.tobytes() != trivial_key:
            self_inverse_witness = (i,)
        for j, b in enumerate(result.twists):
            ab = a.signs * b.signs
            if closure_witness is None and ab.tobytes() not in keys:
                closure_witness = (i, j)
            if commutative_witness is None and not np.array_equal(ab, b.signs * a.signs):
                commutative_witness = (i, j)
        if closure_witness and commutative_witness and self_inverse_witness:
            break
    return TwistGroupReport(
        closure=PropertyReport("closure", closure_witness is None, closure_witness),
        identity=identity,
        self_inverse=PropertyReport(
            "self_inverse", self_inverse_witness is None, self_inverse_witness
        ),
        commutative=PropertyReport(
            "commutative", commutative_witness is None, commutative_witness
        ),
    )


BASIS_PAIR = "basis-pair"
BUDGETED_RANDOM = "budgeted-random"


def _basis_pair_candidates(twist: TwistTable) -> list[Element]:
    n = twist.order
    out = []
    for p in range(n):
        for q in range(p + 1, n):
            for s in (1, -1):
                e = basis(twist, p) + basis(twist, q).scale(s)
                out.append(e)
    return out


def find_zero_divisor(
    twist: TwistTable,
    scope: str = BASIS_PAIR,
    samples: int = 1000,
    seed: int = 0,
    coeff_bound: int = 3,
) -> Optional[tuple[Element, Element]]:
    """First (x, y) with x != 0 != y and x y = 0, or None.

    ``basis-pair`` scope scans all x = i_p +/- i_q, y = i_r +/- i_s
    exhaustively in deterministic order; ``budgeted-random`` tries seeded
    random small-integer elements.  Any witness is verified by the exact
    product before being returned.
    """
    if scope == BASIS_PAIR:
        candidates = _basis_pair_candidates(twist)
        for x in candidates:
            for y in candidates:
                if multiply(x, y).is_zero():
                    return x, y
        return None
    if scope == BUDGETED_RANDOM:
        rng = random.Random(seed)
        n = twist.order
        for _ in range(samples):
            x = Element(twist, [rng.randint(-coeff_bound, coeff_bound) for _ in range(n)])
            y = Element(twist, [rng.randint(-coeff_bound, coeff_bound) for _ in range(n)])
            if x.is_zero() or y.is_zero():
                continue
            if multiply(x, y).is_zero():
                return x, y
        return None
    raise ValueError(f"unknown scope {scope!r}")
