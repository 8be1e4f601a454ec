"""Shifted Legendre polynomials on [0, 1] with integer coefficients.

Convention: P_n(x) = (1/n!) d^n/dx^n [x^n (1-x)^n], which gives P_n(0) = +1
and integer coefficients c_k = (-1)^k C(n,k) C(n+k,k). A single fixed sign
convention keeps downstream integer outputs reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import binom
from .exactnum import Rat


@dataclass(frozen=True, slots=True)
class LegendrePoly:
    n: int
    coeffs: tuple[int, ...]  # coeffs[k] multiplies x**k

    def evaluate(self, x: Rat) -> Rat:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def coeffs(n: int) -> LegendrePoly:
    """Coefficient sequence of P_n from the closed form."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ck = tuple((-1 if k % 2 else 1) * binom(n, k) * binom(n + k, k) for k in range(n + 1))
    return LegendrePoly(n=n, coeffs=ck)


def rodrigues_coeffs(n: int) -> tuple[int, ...]:
    """Oracle: expand (1/n!) d^n/dx^n [x^n (1-x)^n] by direct differentiation."""
    if n < 0:
        raise ValueError("n must be non-negative")
    # x^n (1-x)^n = sum_j (-1)^j C(n,j) x^(n+j)
    work = [0] * (2 * n + 1)
    for j in range(n + 1):
        work[n + j] = (-1 if j % 2 else 1) * math.comb(n, j)
    for _ in range(n):
        work = [i * work[i] for i in range(1, len(work))]
    fact = math.factorial(n)
    out = []
    for c in work:
        q, r = divmod(c, fact)
        if r:
            raise ArithmeticError("derivative not divisible by n!")
        out.append(q)
    return tuple(out)
