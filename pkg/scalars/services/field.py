"""
Exact scalars: rationals and single quadratic extensions Q(sqrt(D)).

Rationals are plain ``fractions.Fraction`` values. An element a + b*sqrt(D)
with b != 0 is a ``QuadExtScalar``; arithmetic that produces b == 0 hands
back a ``Fraction``, so zero tests and equality work the same for both
kinds. Complex points use a negative D (sqrt(-1) is D = -1).
"""

import logging
import operator
from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from planarize.exceptions import IncompatibleFieldError

logger = logging.getLogger(__name__)

Rational = Fraction


@lru_cache(maxsize=512)
def squarefree_decomposition(n):
    """Split a nonzero integer as n = s**2 * D with D square-free (sign kept in D)."""
    if n == 0:
        raise ValueError("0 has no square-free decomposition")
    square, free = 1, 1
    for prime, exponent in factorint(abs(n)).items():
        square *= prime ** (exponent // 2)
        free *= prime ** (exponent % 2)
    return square, free if n > 0 else -free


def is_squarefree(n):
    return n != 0 and squarefree_decomposition(n)[0] == 1


def to_scalar(value):
    """Coerce ints to Fraction; leave Fraction and QuadExtScalar alone."""
    if isinstance(value, (Fraction, QuadExtScalar)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Not an exact scalar: {value!r}")


def make_scalar(a, b, disc):
    """a + b*sqrt(disc), demoted to a Fraction when b == 0."""
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    return QuadExtScalar(a, b, disc)


def scalar_disc(value):
    """0 for rationals, the discriminant otherwise."""
    return value.disc if isinstance(value, QuadExtScalar) else 0


def common_disc(values):
    """Shared discriminant of a collection of scalars (0 if all rational)."""
    disc = 0
    for value in values:
        d = scalar_disc(value)
        if d == 0:
            continue
        if disc == 0:
            disc = d
        elif d != disc:
            raise IncompatibleFieldError(f"Mixed extensions sqrt({disc}) and sqrt({d})")
    return disc


class QuadExtScalar:
    """Element a + b*sqrt(disc) of Q(sqrt(disc)) with b != 0."""

    __slots__ = ('a', 'b', 'disc')

    def __init__(self, a, b, disc):
        disc = int(disc)
        if disc in (0, 1) or not is_squarefree(disc):
            raise ValueError(f"Discriminant must be square-free and not 0 or 1, got {disc}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.disc = disc

    def _parts(self, other):
        if isinstance(other, QuadExtScalar):
            if other.disc != self.disc:
                raise IncompatibleFieldError(
                    f"Mixed extensions sqrt({self.disc}) and sqrt({other.disc})"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return make_scalar(self.a + parts[0], self.b + parts[1], self.disc)

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return make_scalar(self.a - parts[0], self.b - parts[1], self.disc)

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return make_scalar(parts[0] - self.a, parts[1] - self.b, self.disc)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        return make_scalar(self.a * c + self.b * d * self.disc, self.a * d + self.b * c, self.disc)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExtScalar(-self.a, -self.b, self.disc)

    def __pos__(self):
        return self

    def conjugate(self):
        return QuadExtScalar(self.a, -self.b, self.disc)

    def norm(self):
        """x * conjugate(x), always rational."""
        return self.a * self.a - self.b * self.b * self.disc

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExtScalar division by zero")
        return make_scalar(self.a / n, -self.b / n, self.disc)

    def __truediv__(self, other):
        if isinstance(other, QuadExtScalar):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadExtScalar division by zero")
            return make_scalar(self.a / other, self.b / other, self.disc)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = Fraction(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            return (self.a, self.b, self.disc) == (other.a, other.b, other.disc)
        if isinstance(other, (int, Fraction)):
            # b != 0, so never equal to a rational
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.disc))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadExtScalar({self.a}, {self.b}, {self.disc})"

    def __str__(self):
        return format_scalar(self)


def _format_fraction(value):
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value):
    """Text form used in reports: ``p/q`` or ``p/q + r/s*sqrt(D)``, ``/1`` omitted."""
    value = to_scalar(value)
    if not isinstance(value, QuadExtScalar):
        return _format_fraction(value)
    magnitude = abs(value.b)
    radical = f"sqrt({value.disc})" if magnitude == 1 else f"{_format_fraction(magnitude)}*sqrt({value.disc})"
    if value.a == 0:
        return radical if value.b > 0 else f"-{radical}"
    sign = '+' if value.b > 0 else '-'
    return f"{_format_fraction(value.a)} {sign} {radical}"


_BINARY = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
    'eq': operator.eq,
}


def field_ops(x, y=None, op='add'):
    """
    Uniform entry point for scalar arithmetic.

    ``op`` is one of add, sub, mul, div, neg, inv, eq. ``inv`` of zero raises
    ZeroDivisionError; operands from different extensions raise
    IncompatibleFieldError.
    """
    x = to_scalar(x)
    if op == 'neg':
        return -x
    if op == 'inv':
        if x == 0:
            raise ZeroDivisionError("Inverse of zero")
        return x.inverse() if isinstance(x, QuadExtScalar) else 1 / x
    if op not in _BINARY:
        raise ValueError(f"Unknown field operation: {op}")
    y = to_scalar(y)
    common_disc((x, y))
    return _BINARY[op](x, y)


def sqrt_in_field(r):
    """
    Square root of a rational inside Q or Q(sqrt(D)).

    Perfect squares give the positive rational root; otherwise the result is
    (s/q)*sqrt(D) with D the square-free part of numerator*denominator.
    """
    r = Fraction(r)
    if r == 0:
        return Fraction(0)
    square, free = squarefree_decomposition(r.numerator * r.denominator)
    coefficient = Fraction(square, r.denominator)
    if free == 1:
        return coefficient
    return QuadExtScalar(0, coefficient, free)
