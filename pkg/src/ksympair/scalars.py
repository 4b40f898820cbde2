"""Scalar fields: exact rationals, the quadratic extension Q(sqrt 3), floats.

Exact data is stored as Python ints, ``fractions.Fraction`` and ``QSqrt3``
values; all three interoperate, stay exact, and share the "rational" field
marker.  The quadratic extension exists because realifying an inner
automorphism of order 3 or 6 produces rotation blocks with entries
``-1/2 +- (1/2)*sqrt(3)``; everything downstream of such an automorphism is
then computed exactly in Q(sqrt 3).

Float markers ("real-float", "complex-float") switch the linear algebra to
tolerance-based pivoting.
"""

from __future__ import annotations

import math
from fractions import Fraction

RATIONAL = "rational"
REAL_FLOAT = "real-float"
COMPLEX_FLOAT = "complex-float"

FIELD_MARKERS = (RATIONAL, REAL_FLOAT, COMPLEX_FLOAT)

#: default relative tolerance for rank decisions on float paths
DEFAULT_TOL = 1e-9

_SQRT3 = math.sqrt(3.0)


def is_exact(marker: str) -> bool:
    return marker == RATIONAL


class QSqrt3:
    """Exact element ``a + b*sqrt(3)`` with rational components."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QSqrt3):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt3(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # multiply by the conjugate; the norm a^2 - 3 b^2 is nonzero for o != 0
        norm = o.a * o.a - 3 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        num = self * QSqrt3(o.a, -o.b)
        return QSqrt3(num.a / norm, num.b / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(3)."""
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 3 b^2 (equality impossible, sqrt 3
        # being irrational)
        if a > 0:
            return 1 if a * a > 3 * b * b else -1
        return 1 if 3 * b * b > a * a else -1

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT3

    def __repr__(self):
        if self.b == 0:
            return f"QSqrt3({self.a})"
        return f"QSqrt3({self.a}, {self.b})"


def exact_sign(x) -> int:
    """Sign of an exact scalar (int, Fraction or QSqrt3)."""
    if isinstance(x, QSqrt3):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def scalar_to_float(x):
    """Convert any supported scalar to a float (or complex, passed through)."""
    if isinstance(x, QSqrt3):
        return float(x)
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, complex):
        return x
    return float(x)


def simplify_exact(x):
    """Collapse a QSqrt3 with zero irrational part back to a Fraction."""
    if isinstance(x, QSqrt3) and x.b == 0:
        return x.a
    return x


def format_exact(x) -> str:
    """Render an exact scalar as a string ("3/2", "-1/2+1/2*sqrt3")."""
    if isinstance(x, QSqrt3):
        if x.b == 0:
            return format_exact(x.a)
        rad = f"{x.b}*sqrt3" if x.b >= 0 else f"-{-x.b}*sqrt3"
        if x.a == 0:
            return rad
        joiner = "+" if x.b >= 0 else "-"
        return f"{x.a}{joiner}{abs(x.b)}*sqrt3"
    return str(Fraction(x))


def rational_sqrt(x: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


# exact values of cos/sin(2*pi*d/k) for the orders whose characters live in
# Q(sqrt 3); any other order falls back to floats
_EXACT_ANGLES = {
    1: {0: (Fraction(1), Fraction(0))},
    2: {0: (Fraction(1), Fraction(0)), 1: (Fraction(-1), Fraction(0))},
    3: {
        0: (Fraction(1), Fraction(0)),
        1: (Fraction(-1, 2), QSqrt3(0, Fraction(1, 2))),
        2: (Fraction(-1, 2), QSqrt3(0, Fraction(-1, 2))),
    },
    4: {
        0: (Fraction(1), Fraction(0)),
        1: (Fraction(0), Fraction(1)),
        2: (Fraction(-1), Fraction(0)),
        3: (Fraction(0), Fraction(-1)),
    },
    6: {
        0: (Fraction(1), Fraction(0)),
        1: (Fraction(1, 2), QSqrt3(0, Fraction(1, 2))),
        2: (Fraction(-1, 2), QSqrt3(0, Fraction(1, 2))),
        3: (Fraction(-1), Fraction(0)),
        4: (Fraction(-1, 2), QSqrt3(0, Fraction(-1, 2))),
        5: (Fraction(1, 2), QSqrt3(0, Fraction(-1, 2))),
    },
}

EXACT_ROOT_ORDERS = frozenset(_EXACT_ANGLES)


def root_of_unity(power: int, order: int):
    """(cos, sin) of exp(2*pi*i*power/order), exact when the order allows.

    Returns a pair of exact scalars for orders 1, 2, 3, 4, 6 and a pair of
    floats otherwise.
    """
    d = power % order
    if order in _EXACT_ANGLES:
        return _EXACT_ANGLES[order][d]
    ang = 2.0 * math.pi * d / order
    return (math.cos(ang), math.sin(ang))
