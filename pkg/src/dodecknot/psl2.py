"""2x2 matrices up to projective sign and their action on the boundary.

Matrices are stored in a canonical sign: the first nonzero entry (in
a, b, c, d order) has a lexicographically positive coefficient tuple, so
equality in PSL(2, C) is plain entrywise comparison.  Entries may be
:class:`~dodecknot.field.FieldElement` or :class:`~dodecknot.field.ExtElement`
values; the matrix code only relies on ring operations, ``is_zero`` and
``sort_key``.

``mobius_apply`` implements the fractional-linear action on the boundary
sphere (the field together with the point ``INF``), and
``classify_isometry`` decides identity / parabolic / elliptic-of-order-n /
other by exact matrix powers, never by floating point.
"""

from __future__ import annotations

from typing import NamedTuple

from .field import FieldElement


class _Infinity:
    """The boundary point at infinity (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()

BoundaryPoint = FieldElement | _Infinity


class ProjMatrix:
    """A 2x2 matrix stored in canonical projective sign."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d) -> None:
        first = next((e for e in (a, b, c, d) if not e.is_zero()), None)
        if first is not None and _is_negative(first):
            a, b, c, d = -a, -b, -c, -d
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("ProjMatrix is immutable")

    @classmethod
    def identity(cls, element_type=FieldElement) -> "ProjMatrix":
        one = element_type.one()
        zero = element_type.zero()
        return cls(one, zero, zero, one)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        """Trace of the canonical-sign representative."""
        return self.a + self.d

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        return ProjMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "ProjMatrix":
        """Inverse, assuming determinant 1: [[d, -b], [-c, a]]."""
        return ProjMatrix(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "ProjMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        out = ProjMatrix.identity(type(self.a))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        """True iff the matrix is +-I (identity in PSL)."""
        one = type(self.a).one()
        return (
            self.b.is_zero()
            and self.c.is_zero()
            and self.a == self.d
            and self.a * self.a == one
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def pretty(self, approx: bool = False) -> str:
        a, b, c, d = (e.pretty(approx) for e in self.entries)
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"ProjMatrix({self.pretty()})"


def _is_negative(element) -> bool:
    key = element.sort_key()
    for v in key:
        if v != 0:
            return v < 0
    return False


def psl_equal(first: ProjMatrix, second: ProjMatrix) -> bool:
    """Projective equality: equal entrywise up to a global sign.

    Canonical-sign storage makes the comparison a direct one, but the
    negated comparison is kept as a belt-and-braces check.
    """
    if first.entries == second.entries:
        return True
    return first.entries == tuple(-e for e in second.entries)


def mobius_apply(matrix: ProjMatrix, point: BoundaryPoint) -> BoundaryPoint:
    """Apply ``z -> (a z + b) / (c z + d)`` with the usual conventions.

    ``INF`` maps to ``a/c`` (or stays at infinity when c = 0); the pole
    of the transformation maps to ``INF``.  The result is independent of
    the projective sign.  Only defined over the base field (division).
    """
    a, b, c, d = matrix.entries
    if point is INF:
        if c.is_zero():
            return INF
        return a / c
    denominator = c * point + d
    if denominator.is_zero():
        return INF
    return (a * point + b) / denominator


class IsometryClass(NamedTuple):
    kind: str  # "identity" | "parabolic" | "elliptic" | "other"
    order: int | None = None

    def __str__(self) -> str:
        if self.kind == "elliptic":
            return f"elliptic({self.order})"
        return self.kind


IDENTITY = IsometryClass("identity")
PARABOLIC = IsometryClass("parabolic")
OTHER = IsometryClass("other")


def classify_isometry(matrix: ProjMatrix, order_bound: int = 12) -> IsometryClass:
    """Classify a determinant-1 matrix as an isometry of hyperbolic 3-space.

    Identity iff M = +-I; parabolic iff trace = +-2 and M != +-I;
    elliptic of order n iff M^n = +-I for the minimal 2 <= n <=
    order_bound (detected by exact matrix powers); otherwise "other"
    (loxodromic, or elliptic of an order beyond the bound).
    """
    if order_bound < 2:
        raise ValueError("order_bound must be at least 2")
    if matrix.is_identity():
        return IDENTITY
    trace = matrix.trace()
    two = type(trace).one() + type(trace).one()
    if trace == two or trace == -two:
        return PARABOLIC
    # elliptic and parabolic isometries have real trace in the fixed
    # embedding, so a nonreal trace settles the question exactly
    if not trace.is_real():
        return OTHER
    power = matrix
    for n in range(2, order_bound + 1):
        power = power * matrix
        if power.is_identity():
            return IsometryClass("elliptic", n)
    return OTHER
