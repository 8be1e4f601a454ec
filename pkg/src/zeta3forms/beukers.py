"""Kernel moments of -log(xy)/(1-xy) and the Beukers linear forms in 1, zeta(3).

The double integral over the unit square of x^r y^s (-log xy)/(1-xy) equals

    r == s:  2*zeta(3) - 2*H_r(3)                  (H = generalized harmonic)
    r != s:  (H_r(2) - H_s(2)) / (r - s)

Pairing these moments with the shifted Legendre coefficients of P_n(x)P_n(y)
yields I_n = alpha_n + beta_n*zeta(3) with alpha_n rational and beta_n a
positive even integer. Multiplying by d_n^3 = lcm(1..n)^3 clears alpha_n's
denominator exactly, giving the integer pair (A_n, B_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import legendre
from .combinatorics import d, harmonic
from .exactnum import Enclosure, Rat


class IntegralityViolation(ArithmeticError):
    """d_n^3 * alpha_n failed to be an integer; signals an implementation bug."""


@dataclass(frozen=True, slots=True)
class KernelMoment:
    r: int
    s: int
    rat: Rat  # rational part
    zeta3_coef: int  # 2 on the diagonal, 0 off it

    def value_enclosure(self, zeta3_enc: Enclosure) -> Enclosure:
        return zeta3_enc * self.zeta3_coef + self.rat


@dataclass(frozen=True, slots=True)
class LinearForm:
    n: int
    alpha: Rat
    beta: int
    A: int  # dn3 * alpha
    B: int  # dn3 * beta
    dn3: int


@lru_cache(maxsize=None)
def moment(r: int, s: int) -> KernelMoment:
    """Exact closed form of the (r, s) kernel moment."""
    if r < 0 or s < 0:
        raise ValueError("moment orders must be non-negative")
    if r == s:
        return KernelMoment(r=r, s=s, rat=-2 * harmonic(r, 3), zeta3_coef=2)
    rat = Fraction(harmonic(r, 2) - harmonic(s, 2), r - s)
    return KernelMoment(r=r, s=s, rat=rat, zeta3_coef=0)


# Fixed-point scale for directed summation in the series oracle. The grid
# 2**-128 is far below any tail bound used, so rounding slack never matters.
_ORACLE_BITS = 128


def moment_series_oracle(r: int, s: int, terms: int) -> Enclosure:
    """Enclosure of the (r, s) moment from its geometric-series expansion.

    The moment expands as sum_{k>=0} of
    1/((k+r+1)^2 (k+s+1)) + 1/((k+r+1) (k+s+1)^2). The first ``terms`` terms
    are summed (exactly off the diagonal, by directed fixed-point rounding on
    it) and the nonnegative tail is bounded above by
    2 * sum_{k>=terms} (k+1)^-3 <= 1/terms^2.

    Validation-only path, independent of the harmonic-number closed forms.
    """
    if r < 0 or s < 0:
        raise ValueError("moment orders must be non-negative")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    a, b = r + 1, s + 1
    tail_hi = Fraction(1, terms * terms)
    if a == b:
        lo = _diagonal_partial_floor(a, terms)
        slack = Fraction(terms, 1 << _ORACLE_BITS)
        return Enclosure(lo, lo + slack + tail_hi)
    if a > b:
        a, b = b, a
    # Per term, 1/((k+a)^2 (k+b)) + 1/((k+a)(k+b)^2) equals
    # (1/(k+a)^2 - 1/(k+b)^2) / (b - a), so the block sums telescope into
    # two short windows of 1/m^2 and the partial sum is exact and cheap.
    partial = (_inv_square_window(a, b) - _inv_square_window(a + terms, b + terms)) / (b - a)
    return Enclosure(partial, partial + tail_hi)


def _inv_square_window(lo: int, hi: int) -> Fraction:
    """sum of 1/m^2 for lo <= m < hi."""
    return sum((Fraction(1, m * m) for m in range(lo, hi)), Fraction(0))


def _diagonal_partial_floor(a: int, terms: int) -> Fraction:
    """Lower bound of sum_{k<terms} 2/(k+a)^3 on the 2**-_ORACLE_BITS grid."""
    num = 2 << _ORACLE_BITS
    acc = 0
    for m in range(a, a + terms):
        acc += num // (m * m * m)
    return Fraction(acc, 1 << _ORACLE_BITS)


def dn_cubed(n: int) -> int:
    """d_n^3 with the empty-product convention d_0 = 1."""
    return 1 if n == 0 else d(n).cube


def _assemble(n: int, moment_fn: Callable[[int, int], KernelMoment]) -> LinearForm:
    c = legendre.coeffs(n).coeffs
    alpha = Fraction(0)
    for r in range(n + 1):
        cr = c[r]
        alpha += cr * cr * moment_fn(r, r).rat
        for s in range(r):
            alpha += 2 * cr * c[s] * moment_fn(r, s).rat
    beta = 2 * sum(ck * ck for ck in c)
    cube = dn_cubed(n)
    scaled = alpha * cube
    if scaled.denominator != 1:
        raise IntegralityViolation(f"d_n^3 * alpha is not an integer at n={n}: {scaled}")
    return LinearForm(n=n, alpha=alpha, beta=beta, A=scaled.numerator, B=beta * cube, dn3=cube)


@lru_cache(maxsize=None)
def linear_form(n: int) -> LinearForm:
    """The pair (alpha_n, beta_n) with I_n = alpha_n + beta_n*zeta(3).

    Raises IntegralityViolation if d_n^3 * alpha_n is not an integer, which
    cannot happen unless the moment or lcm machinery is broken.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _assemble(n, moment)


# Apery numbers 1, 5, 73, 1445, ... via the three-term recurrence
# n^3 b_n = (34n^3 - 51n^2 + 27n - 5) b_{n-1} - (n-1)^3 b_{n-2}.
_APERY: list[int] = [1, 5]


def apery_oracle(n: int) -> int:
    """Independent oracle for beta_n: linear_form(n).beta == 2 * apery_oracle(n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_APERY) <= n:
        k = len(_APERY)
        num = (34 * k**3 - 51 * k**2 + 27 * k - 5) * _APERY[k - 1] - (k - 1) ** 3 * _APERY[k - 2]
        q, rem = divmod(num, k**3)
        if rem:
            raise ArithmeticError(f"Apery recurrence not integral at n={k}")
        _APERY.append(q)
    return _APERY[n]
