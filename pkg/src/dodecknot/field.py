"""Exact arithmetic in Q(u, w) and its degree-2 extension by i.

Here ``u = 2 cos(pi/5) = (1 + sqrt 5)/2`` satisfies ``u^2 = u + 1`` and
``w = (1 + sqrt(-3))/2`` (a primitive sixth root of unity) satisfies
``w^2 = w - 1``.  The two quadratic extensions are linearly disjoint, so
every element has a unique expansion

    a + b*u + c*w + d*u*w        (a, b, c, d rational)

and equality is coefficient-tuple equality.  ``FieldElement`` implements
the full field structure; ``ExtElement`` adjoins ``t`` with ``t^2 = -1``
(the element i does not lie in Q(u, w)) as pairs ``p + q*t`` and only
needs ring operations -- it exists for the handful of matrices whose
entries involve i.

A floating-point shadow (``complex(x)`` under u -> 1.618..., w ->
0.5 + 0.866...i, t -> i) is provided for display and diagnostics only;
no decision anywhere in the package uses it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

U_NUMERIC = (1.0 + math.sqrt(5.0)) / 2.0
OMEGA_NUMERIC = complex(0.5, math.sqrt(3.0) / 2.0)


class FieldElement:
    """An element of Q(u, w) as a rational 4-vector over {1, u, w, u*w}."""

    __slots__ = ("coeffs",)

    def __init__(self, a: Rational = 0, b: Rational = 0,
                 c: Rational = 0, d: Rational = 0) -> None:
        object.__setattr__(
            self, "coeffs",
            (Fraction(a), Fraction(b), Fraction(c), Fraction(d)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "FieldElement":
        return _ZERO

    @classmethod
    def one(cls) -> "FieldElement":
        return _ONE

    @classmethod
    def coerce(cls, value: "FieldElement | Rational") -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        return cls(value)

    # -- ring structure --------------------------------------------------

    def __add__(self, other):
        other = FieldElement.coerce(other)
        return FieldElement(*(s + o for s, o in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-FieldElement.coerce(other))

    def __rsub__(self, other):
        return (-self) + FieldElement.coerce(other)

    def __neg__(self):
        return FieldElement(*(-v for v in self.coeffs))

    def __mul__(self, other):
        other = FieldElement.coerce(other)
        a1, b1, c1, d1 = self.coeffs
        a2, b2, c2, d2 = other.coeffs
        # expand using u^2 = u + 1 and w^2 = w - 1
        bd = b1 * d2 + d1 * b2
        cd = c1 * d2 + d1 * c2
        dd = d1 * d2
        return FieldElement(
            a1 * a2 + b1 * b2 - c1 * c2 - dd,
            a1 * b2 + b1 * a2 + b1 * b2 - cd - dd,
            a1 * c2 + c1 * a2 + bd + c1 * c2 + dd,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2 + bd + cd + dd,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse by solving the 4x4 rational system
        ``self * v = 1`` over the basis."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        cols = [(self * b).coeffs for b in _BASIS]
        # augmented matrix for M v = e1, M[i][j] = coefficient i of self*basis_j
        m = [[cols[j][i] for j in range(4)] + [Fraction(int(i == 0))] for i in range(4)]
        for col in range(4):
            pivot = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[pivot] = m[pivot], m[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            for r in range(4):
                if r != col and m[r][col] != 0:
                    factor = m[r][col]
                    m[r] = [v - factor * p for v, p in zip(m[r], m[col])]
        return FieldElement(*(m[i][4] for i in range(4)))

    def __truediv__(self, other):
        return self * FieldElement.coerce(other).inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "FieldElement":
        """The field automorphism fixing u and sending w to 1 - w.

        Under the standard embedding this is complex conjugation; it is a
        ring homomorphism and an involution.
        """
        a, b, c, d = self.coeffs
        return FieldElement(a + c, b + d, -c, -d)

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs)

    def is_rational(self) -> bool:
        return all(v == 0 for v in self.coeffs[1:])

    def is_real(self) -> bool:
        """Exactly real in the standard embedding (no w / u*w part)."""
        return self.coeffs[2] == 0 and self.coeffs[3] == 0

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElement(other)
        return isinstance(other, FieldElement) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __complex__(self) -> complex:
        a, b, c, d = self.coeffs
        return complex(a) + float(b) * U_NUMERIC \
            + (float(c) + float(d) * U_NUMERIC) * OMEGA_NUMERIC

    def pretty(self, approx: bool = True) -> str:
        """Basis-form rendering, optionally with a decimal shadow."""
        names = ("", "u", "w", "u*w")
        terms = []
        for coeff, name in zip(self.coeffs, names):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if name and mag == 1:
                body = name
            elif name:
                body = f"{mag}*{name}"
            else:
                body = str(mag)
            terms.append((sign, body))
        if not terms:
            text = "0"
        else:
            first_sign, first_body = terms[0]
            text = ("-" if first_sign == "-" else "") + first_body
            for sign, body in terms[1:]:
                text += f" {sign} {body}"
        if approx:
            value = complex(self)
            if abs(value.imag) < 1e-12:
                text += f" ~ {value.real:.10g}"
            else:
                text += f" ~ {value.real:.10g}{value.imag:+.10g}i"
        return text

    def __str__(self) -> str:
        return self.pretty(approx=False)

    def __repr__(self) -> str:
        return f"FieldElement({self.pretty(approx=False)})"


_ZERO = FieldElement()
_ONE = FieldElement(1)
U = FieldElement(0, 1)
OMEGA = FieldElement(0, 0, 1)
_BASIS = (_ONE, U, OMEGA, FieldElement(0, 0, 0, 1))


class ExtElement:
    """``p + q*t`` with ``t^2 = -1`` over Q(u, w); ring operations only."""

    __slots__ = ("re", "im")

    def __init__(self, re: FieldElement | Rational = 0,
                 im: FieldElement | Rational = 0) -> None:
        object.__setattr__(self, "re", FieldElement.coerce(re))
        object.__setattr__(self, "im", FieldElement.coerce(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExtElement is immutable")

    @classmethod
    def zero(cls) -> "ExtElement":
        return _EXT_ZERO

    @classmethod
    def one(cls) -> "ExtElement":
        return _EXT_ONE

    @classmethod
    def coerce(cls, value: "ExtElement | FieldElement | Rational") -> "ExtElement":
        if isinstance(value, ExtElement):
            return value
        return cls(FieldElement.coerce(value))

    def __add__(self, other):
        other = ExtElement.coerce(other)
        return ExtElement(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-ExtElement.coerce(other))

    def __rsub__(self, other):
        return (-self) + ExtElement.coerce(other)

    def __neg__(self):
        return ExtElement(-self.re, -self.im)

    def __mul__(self, other):
        other = ExtElement.coerce(other)
        return ExtElement(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero() and self.re.is_real()

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.re.coeffs + self.im.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, FieldElement)):
            other = ExtElement.coerce(other)
        return (
            isinstance(other, ExtElement)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def pretty(self, approx: bool = True) -> str:
        if self.im.is_zero():
            return self.re.pretty(approx)
        text = f"({self.re.pretty(False)}) + ({self.im.pretty(False)})*t"
        if approx:
            value = complex(self)
            text += f" ~ {value.real:.10g}{value.imag:+.10g}i"
        return text

    def __str__(self) -> str:
        return self.pretty(approx=False)

    def __repr__(self) -> str:
        return f"ExtElement({self.pretty(approx=False)})"


_EXT_ZERO = ExtElement()
_EXT_ONE = ExtElement(1)
T = ExtElement(0, 1)


def field_arith(op: str, x: FieldElement, y: FieldElement | None = None) -> FieldElement:
    """Named dispatch over the field operations (add/mul need two operands)."""
    if op == "add":
        assert y is not None
        return x + y
    if op == "mul":
        assert y is not None
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    raise ValueError(f"unknown field operation {op!r}")


def complex_conjugate(x: FieldElement) -> FieldElement:
    return x.conjugate()
