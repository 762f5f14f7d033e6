"""Exact arithmetic in an imaginary quadratic field Q(sqrt(-d))."""

import re
from fractions import Fraction

DEFAULT_D = 3


def _squarefree(d):
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadExt:
    """The number a + b*sqrt(-d) with rational a, b.

    Instances are immutable and hashable.  Plain ints and Fractions are
    coerced into the field of the other operand; mixing two different
    values of d raises ValueError.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=DEFAULT_D):
        if d <= 0 or not _squarefree(d):
            raise ValueError(f"d must be a positive squarefree integer, got {d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def sqrt_minus_d(cls, d=DEFAULT_D):
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt(-{self.d})) and Q(sqrt(-{other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self.a, self.b, other.a, other.b
        return QuadExt(a * c - self.d * b * e, a * e + b * c, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.d)

    def norm(self):
        """Field norm a^2 + d*b^2 (the squared modulus)."""
        return self.a * self.a + self.d * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(-d))")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sort_key(self):
        return (self.a, self.b)

    @property
    def real(self):
        return self.a

    def imag_sign(self):
        """Exact sign of the imaginary part: -1, 0 or 1."""
        return (self.b > 0) - (self.b < 0)

    def is_real(self):
        return self.b == 0

    def __complex__(self):
        return complex(float(self.a), float(self.b) * self.d ** 0.5)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __str__(self):
        sign = "-" if self.b < 0 else "+"
        return f"{_frac_str(self.a)} {sign} {_frac_str(abs(self.b))}*sqrt(-{self.d})"

    def __repr__(self):
        return f"QuadExt('{self}')"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``; also accepts '+ -c/e' and bare rationals."""
        m = _PATTERN.fullmatch(text.strip())
        if m is None:
            try:
                return cls(Fraction(text.strip()))
            except ValueError:
                raise ValueError(f"not a quadratic-field literal: {text!r}") from None
        a = Fraction(m.group("a"))
        b = Fraction(m.group("b"))
        if m.group("op") == "-":
            b = -b
        return cls(a, b, int(m.group("d")))


_RAT = r"[+-]?\d+(?:/\d+)?"
_PATTERN = re.compile(
    rf"(?P<a>{_RAT})\s*(?P<op>[+-])\s*(?P<b>{_RAT})\s*\*\s*sqrt\(\s*-\s*(?P<d>\d+)\s*\)"
)


def _frac_str(x):
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def regular_shape():
    """(1 + sqrt(-3))/2, the shape of a regular ideal tetrahedron."""
    return QuadExt(Fraction(1, 2), Fraction(1, 2), 3)


__all__ = ["QuadExt", "DEFAULT_D", "regular_shape"]
