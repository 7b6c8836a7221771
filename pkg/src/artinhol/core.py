"""Exponent-vector model of the multiplicative semigroup of Artin L-functions.

The free commutative semigroup on r generators is represented by N^r: the
element f1^k1 * ... * fr^kr is the tuple k = (k1, ..., kr), with the zero
tuple standing for the constant function 1.  A point s0 != 1 enters the
model only through its order profile v, where v[j] is the integer order of
the j-th generator at s0.  Orders add under multiplication, so the element
k has order <k, v>, and k is holomorphic at s0 exactly when <k, v> >= 0.

Exponent vectors are plain tuples of nonnegative ints throughout the
package; order and degree vectors are small validated dataclasses.  All
arithmetic is overflow-checked against the signed 64-bit range: orders are
capped at 32 bits on input so that single products k_j * v_j cannot wrap,
and running sums are verified term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    ArithmeticOverflowError,
    LengthMismatchError,
    NotInHolError,
)

INT32_MAX = 2**31 - 1
INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _int_entries(entries, what: str) -> tuple[int, ...]:
    out = tuple(entries)
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"{what} entries must be ints, got {x!r}")
    return out


def validate_exponent_vector(k: Sequence[int], rank: int | None = None) -> tuple[int, ...]:
    """Normalize k to a tuple, checking nonnegativity and (optionally) rank."""
    kk = _int_entries(k, "exponent vector")
    if rank is not None and len(kk) != rank:
        raise LengthMismatchError(f"exponent vector has length {len(kk)}, expected {rank}")
    for x in kk:
        if x < 0:
            raise ValueError(f"exponent entries must be nonnegative, got {x}")
    return kk


@dataclass(frozen=True)
class OrderVector:
    """Order profile (ord f_1, ..., ord f_r) of the generators at s0.

    Entries are validated to the signed 32-bit range so every product
    k_j * v_j met downstream stays well inside 64 bits.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        ent = _int_entries(self.entries, "order vector")
        object.__setattr__(self, "entries", ent)
        if not ent:
            raise ValueError("order vector must have rank >= 1")
        for x in ent:
            if abs(x) > INT32_MAX:
                raise ValueError(f"order {x} outside the 32-bit input range")

    @property
    def rank(self) -> int:
        return len(self.entries)


OrdersLike = Union[OrderVector, Sequence[int]]


def as_order_vector(v: OrdersLike) -> OrderVector:
    return v if isinstance(v, OrderVector) else OrderVector(tuple(v))


@dataclass(frozen=True)
class DegreeVector:
    """Character-degree vector d with every d[j] >= 1.

    Also the exponent vector of the Dedekind zeta function of the field,
    since zeta_K factors as the product of the generators to their degrees.
    When a group order is attached, the sum-of-squares law and degree
    divisibility are enforced at construction.
    """

    entries: tuple[int, ...]
    group: str | None = None
    group_order: int | None = None

    def __post_init__(self):
        ent = _int_entries(self.entries, "degree vector")
        object.__setattr__(self, "entries", ent)
        if not ent:
            raise ValueError("degree vector must have rank >= 1")
        for d in ent:
            if d < 1:
                raise ValueError(f"degrees must be >= 1, got {d}")
        if self.group_order is not None:
            n = self.group_order
            sq = sum(d * d for d in ent)
            if sq != n:
                raise ValueError(f"sum of squared degrees {sq} != group order {n}")
            for d in ent:
                if n % d != 0:
                    raise ValueError(f"degree {d} does not divide group order {n}")

    @property
    def rank(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Instance:
    """One hypothetical situation: rank, degrees, order profile, flags.

    The field and the point s0 are carried only as opaque labels; no
    analytic content is attached to them.  Admissibility is a verdict of
    is_admissible, not a construction guard, so inadmissible instances can
    be built, swept, and recorded.
    """

    rank: int
    degrees: DegreeVector
    orders: OrderVector
    require_dedekind: bool = True
    require_trivial_nonneg: bool = False
    group: str | None = None
    s0_label: str | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.degrees.rank != self.rank or self.orders.rank != self.rank:
            raise LengthMismatchError(
                f"rank {self.rank} vs degrees {self.degrees.rank}, orders {self.orders.rank}"
            )

    @classmethod
    def of(cls, degrees, orders, **kwargs) -> "Instance":
        d = degrees if isinstance(degrees, DegreeVector) else DegreeVector(tuple(degrees))
        v = as_order_vector(orders)
        return cls(rank=d.rank, degrees=d, orders=v, **kwargs)


def order_of(k: Sequence[int], v: OrdersLike) -> int:
    """Order at s0 of the element with exponents k: the sum of k[j] * v[j].

    Raises ArithmeticOverflowError if any product or partial sum leaves the
    signed 64-bit range, and LengthMismatchError on rank disagreement.
    """
    ent = as_order_vector(v).entries
    kk = validate_exponent_vector(k, rank=len(ent))
    total = 0
    for kj, vj in zip(kk, ent):
        p = kj * vj
        if p > INT64_MAX or p < INT64_MIN:
            raise ArithmeticOverflowError(f"{kj} * {vj} leaves the 64-bit range")
        total += p
        if total > INT64_MAX or total < INT64_MIN:
            raise ArithmeticOverflowError("order accumulation left the 64-bit range")
    return total


def is_member_hol(k: Sequence[int], v: OrdersLike) -> bool:
    """True iff the element k is holomorphic at s0, i.e. <k, v> >= 0."""
    return order_of(k, v) >= 0


def divides_ar(a: Sequence[int], b: Sequence[int]) -> bool:
    """Divisibility in the ambient semigroup: b - a is componentwise >= 0."""
    aa = validate_exponent_vector(a)
    bb = validate_exponent_vector(b, rank=len(aa))
    return all(x <= y for x, y in zip(aa, bb))


def divides_hol(a: Sequence[int], b: Sequence[int], v: OrdersLike) -> bool:
    """Divisibility with the quotient inside Hol(s0).

    Both a and b must themselves be members of Hol; otherwise the question
    is ill-posed and NotInHolError is raised.
    """
    ov = as_order_vector(v)
    if not is_member_hol(a, ov):
        raise NotInHolError(f"dividend {tuple(a)} is not in Hol")
    if not is_member_hol(b, ov):
        raise NotInHolError(f"divisor target {tuple(b)} is not in Hol")
    if not divides_ar(a, b):
        return False
    h = tuple(y - x for x, y in zip(a, b))
    return is_member_hol(h, ov)


def is_admissible(inst: Instance) -> tuple[bool, tuple[str, ...]]:
    """Evaluate the enabled admissibility constraints; returns (ok, reasons).

    With require_dedekind on, the zeta-function exponent vector d must have
    nonnegative order, i.e. <d, v> >= 0; with require_trivial_nonneg on,
    the trivial character's order v1 must be >= 0.
    """
    reasons = []
    if inst.require_dedekind:
        s = order_of(inst.degrees.entries, inst.orders)
        if s < 0:
            reasons.append(f"dedekind:<d,v>={s}<0")
    if inst.require_trivial_nonneg:
        v1 = inst.orders.entries[0]
        if v1 < 0:
            reasons.append(f"trivial_nonneg:v1={v1}<0")
    return (not reasons, tuple(reasons))
