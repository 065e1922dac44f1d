"""Exact Gaussian-rational scalars.

Every quantity in the exact code path lives in Q(i): a rational real part
plus a rational imaginary part.  Internally a value is stored as a triple
of integers (a, b, d) meaning (a + b*i)/d with d > 0 and gcd(a, b, d) = 1,
so equality is literal tuple equality and arithmetic stays canonical.

The float code path (benchmarks, large-parameter limit checks) uses plain
Python ``complex`` behind the same duck-typed operations; nothing here may
silently mix the two.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
import re as _re

__all__ = [
    "GaussianRational",
    "ZERO",
    "ONE",
    "IMAG_UNIT",
    "rational",
    "gaussian",
    "scalar_from_json",
    "scalar_to_json",
    "one_like",
    "zero_like",
    "to_complex",
]

_RATIONAL_RE = _re.compile(r"^[+-]?\d+(/\d+)?$")


def _normalize(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d == 0:
        raise ZeroDivisionError("denominator is zero")
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class GaussianRational:
    """An element of Q(i), immutable and always in canonical form."""

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im != 0:
                raise ValueError("cannot add an imaginary part to a GaussianRational")
            self.a, self.b, self.d = re.a, re.b, re.d
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self.a, self.b, self.d = _normalize(a, b, d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        self = object.__new__(cls)
        self.a, self.b, self.d = _normalize(a, b, d)
        return self

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    @property
    def is_real(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.a, -self.b, self.d)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational._raw(other, 0, 1)
        if isinstance(other, Fraction):
            return GaussianRational._raw(other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == 1 and o.d == 1:
            r = object.__new__(GaussianRational)
            r.a, r.b, r.d = self.a + o.a, self.b + o.b, 1
            return r
        return GaussianRational._raw(
            self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == 1 and o.d == 1:
            r = object.__new__(GaussianRational)
            r.a, r.b, r.d = self.a - o.a, self.b - o.b, 1
            return r
        return GaussianRational._raw(
            self.a * o.d - o.a * self.d, self.b * o.d - o.b * self.d, self.d * o.d
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            if self.d == 1 and o.d == 1:
                r = object.__new__(GaussianRational)
                r.a, r.b, r.d = self.a * o.a, 0, 1
                return r
            return GaussianRational._raw(self.a * o.a, 0, self.d * o.d)
        return GaussianRational._raw(
            self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, self.d * o.d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.a == 0 and o.b == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        if self.b == 0 and o.b == 0:
            return GaussianRational._raw(self.a * o.d, 0, self.d * o.a)
        n2 = o.a * o.a + o.b * o.b
        return GaussianRational._raw(
            (self.a * o.a + self.b * o.b) * o.d,
            (self.b * o.a - self.a * o.b) * o.d,
            self.d * n2,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        r = object.__new__(GaussianRational)
        r.a, r.b, r.d = -self.a, -self.b, self.d
        return r

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return not eq

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    # -- conversion / formatting --------------------------------------------

    def __complex__(self):
        return complex(self.a / self.d, self.b / self.d)

    def __str__(self):
        if self.b == 0:
            return str(self.re)
        if self.a == 0:
            return f"{self.im}i"
        sign = "+" if self.b > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational('{self}')"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
IMAG_UNIT = GaussianRational(0, 1)


def rational(value) -> GaussianRational:
    """Parse a rational literal: an int, a Fraction, or a string 'p/q' / 'p'."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value.strip()):
            raise ValueError(f"not a rational literal: {value!r}")
        return GaussianRational(Fraction(value.strip()))
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot build a rational from {type(value).__name__}")


def gaussian(re, im=0) -> GaussianRational:
    """Build a Gaussian rational from rational literals for both parts."""
    return GaussianRational(rational(re).re, rational(im).re)


def scalar_from_json(obj) -> GaussianRational:
    """Decode 'p/q' or {'re': 'p/q', 'im': 'p/q'} into a scalar."""
    if isinstance(obj, str):
        return rational(obj)
    if isinstance(obj, dict):
        unknown = set(obj) - {"re", "im"}
        if unknown:
            raise ValueError(f"unknown keys in complex literal: {sorted(unknown)}")
        return gaussian(obj.get("re", "0"), obj.get("im", "0"))
    raise ValueError(f"not a scalar literal: {obj!r}")


def scalar_to_json(value) -> dict:
    if isinstance(value, GaussianRational):
        return {"re": str(value.re), "im": str(value.im)}
    value = complex(value)
    return {"re": repr(value.real), "im": repr(value.imag)}


def one_like(sample):
    """Multiplicative identity in the field of ``sample`` (exact or float)."""
    if isinstance(sample, GaussianRational):
        return ONE
    return complex(1.0)


def zero_like(sample):
    if isinstance(sample, GaussianRational):
        return ZERO
    return complex(0.0)


def to_complex(value) -> complex:
    return complex(value)
