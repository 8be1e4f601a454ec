"""Exact rational and interval (enclosure) arithmetic.

Every real quantity in this package is carried either as an exact rational
(`Rat`, an alias of `fractions.Fraction`) or as an `Enclosure`, a closed
interval with exact rational endpoints guaranteed to contain the true value.
Endpoints are never floats, so a strict inequality certified through
enclosures is an exact fact, not a rounding artifact.

All operations are pure and all values immutable; sharing across threads is
safe.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Union

# Exact serialization of arbitrarily large integers is part of this package's
# contract; CPython's default 4300-digit str() guard would break it.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

Rat = Fraction

Scalar = Union[int, Fraction]

# Outward-rounding budget: bits of denominator granularity granted per
# requested decimal digit. 16 bits/digit is ~4.8x the 3.33 bits a decimal
# digit needs, so budget rounding never dominates the enclosure width.
BITS_PER_DIGIT = 16


def budget_bits(digits: int) -> int:
    return BITS_PER_DIGIT * max(1, digits)


def rat_str(x: Scalar) -> str:
    """Serialize a rational as ``p/q``, or just ``p`` when q = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Trichotomy(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    CONTAINS_ZERO = "contains_zero"


@dataclass(frozen=True, slots=True)
class Enclosure:
    """Closed interval [lo, hi] with exact rational endpoints.

    Arithmetic is containment-sound: if x is in ``a`` and y is in ``b`` then
    x op y is in ``a op b``. Scalars (int or Fraction) mix freely with
    enclosures and are treated as zero-width intervals.
    """

    lo: Rat
    hi: Rat

    def __post_init__(self) -> None:
        lo = Fraction(self.lo)
        hi = Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"inverted enclosure: lo={lo} > hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @staticmethod
    def point(x: Scalar) -> Enclosure:
        return Enclosure(Fraction(x), Fraction(x))

    # -- queries ----------------------------------------------------------

    def width(self) -> Rat:
        return self.hi - self.lo

    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Scalar) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: Enclosure) -> bool:
        """True when ``other`` lies entirely inside ``self``."""
        return self.lo <= other.lo and other.hi <= self.hi

    def intersect(self, other: Enclosure) -> Optional[Enclosure]:
        """Common part of two enclosures, or None when they are disjoint."""
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Enclosure(lo, hi)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Union[Enclosure, Scalar]) -> Enclosure:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Enclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> Enclosure:
        return Enclosure(-self.hi, -self.lo)

    def __sub__(self, other: Union[Enclosure, Scalar]) -> Enclosure:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> Enclosure:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Union[Enclosure, Scalar]) -> Enclosure:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> Enclosure:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("reciprocal of an enclosure containing zero")
        return Enclosure(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Union[Enclosure, Scalar]) -> Enclosure:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other: Scalar) -> Enclosure:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, k: int) -> Enclosure:
        """Tight image of x -> x**k over the interval, k a non-negative int.

        Even powers of a zero-straddling interval use the image rule
        [-2, 1]**2 = [0, 4], not the looser repeated product [-2, 4].
        """
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers not supported; use reciprocal()")
        if k == 0:
            return Enclosure.point(1)
        plo, phi = self.lo**k, self.hi**k
        if k % 2 == 1:
            return Enclosure(plo, phi)
        if self.lo >= 0:
            return Enclosure(plo, phi)
        if self.hi <= 0:
            return Enclosure(phi, plo)
        return Enclosure(Fraction(0), max(plo, phi))

    def __abs__(self) -> Enclosure:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Enclosure(Fraction(0), max(-self.lo, self.hi))

    def round_out(self, bits: int) -> Enclosure:
        """Outward-round endpoints onto the grid of multiples of 2**-bits.

        Containment is preserved; the width grows by at most 2**(1-bits).
        Used to stop rational endpoints from blowing up across long
        computations.
        """
        if bits < 1:
            raise ValueError("bits must be >= 1")
        scale = 1 << bits
        lo = Fraction((self.lo.numerator * scale) // self.lo.denominator, scale)
        hi = Fraction(-((-self.hi.numerator * scale) // self.hi.denominator), scale)
        return Enclosure(lo, hi)

    def __str__(self) -> str:
        return f"[{rat_str(self.lo)}, {rat_str(self.hi)}]"


def _coerce(x: object) -> Optional[Enclosure]:
    if isinstance(x, Enclosure):
        return x
    if isinstance(x, (int, Fraction)):
        return Enclosure.point(x)
    return None


def trichotomy(a: Enclosure) -> Trichotomy:
    """Certified sign of every value in the enclosure.

    POSITIVE iff lo > 0, NEGATIVE iff hi < 0, CONTAINS_ZERO otherwise
    (exactly when lo <= 0 <= hi). This is the only decision procedure the
    package uses for strict inequalities.
    """
    if a.lo > 0:
        return Trichotomy.POSITIVE
    if a.hi < 0:
        return Trichotomy.NEGATIVE
    return Trichotomy.CONTAINS_ZERO


@lru_cache(maxsize=None)
def sqrt2_enclosure(digits: int) -> Enclosure:
    """Enclosure of sqrt(2) of width <= 10**-digits.

    Built from the integer square root of 2*10**(2*digits), so the defining
    property lo**2 <= 2 <= hi**2 holds exactly by construction.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10**digits
    root = isqrt(2 * scale * scale)
    return Enclosure(Fraction(root, scale), Fraction(root + 1, scale))
