"""Scalar special functions used everywhere else in the package.

Three primitives are enough for the whole artifact: log-gamma, the
*terminating* Gauss hypergeometric series 2F1(-n, b; c; x), and Jacobi
polynomials evaluated through the hypergeometric identity

    P_n^(a,b)(x) = ((a+1)_n / n!) * 2F1(-n, 1+a+b+n; a+1; (1-x)/2).

All degrees that occur are small (n <= a few), so the exact (n+1)-term sum
is both the fastest and the most accurate evaluation; no recurrences or
asymptotics are needed. Every function accepts numpy arrays for ``x`` and
broadcasts; scalars in give scalars out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class SpecfunDomainError(ValueError):
    """Argument outside the supported real domain."""


@dataclass(frozen=True)
class JacobiIndex:
    """Index triple (a, b, n) of a Jacobi polynomial P_n^(a,b)."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if self.a <= -1.0:
            raise SpecfunDomainError(f"Jacobi exponent a must be > -1, got {self.a}")
        if self.b <= -1.0:
            raise SpecfunDomainError(f"Jacobi exponent b must be > -1, got {self.b}")
        if self.n < 0 or int(self.n) != self.n:
            raise SpecfunDomainError(f"degree must be a nonnegative integer, got {self.n}")


def ln_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0.

    Delegates to the C library Lanczos-style implementation, which is well
    inside the 1e-13 relative-error budget on the positive axis.
    """
    if x <= 0.0:
        raise SpecfunDomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def ln_pochhammer(a: float, n: int) -> float:
    """ln (a)_n for a > 0, n >= 0."""
    if n == 0:
        return 0.0
    return ln_gamma(a + n) - ln_gamma(a)


def _is_nonpositive_integer(c: float) -> bool:
    return c <= 0.0 and float(c).is_integer()


def hyp2f1_terminating(n: int, b: float, c: float, x):
    """2F1(-n, b; c; x) as the exact (n+1)-term sum.

    The first parameter is supplied as the nonnegative integer ``n`` (the
    series parameter is -n). Raises on a pole of the series, i.e. when c is
    a non-positive integer reached by the denominator within the sum.
    Supports array ``x``; uses Kahan-compensated accumulation because the
    terms alternate in sign for larger n.
    """
    if n < 0 or int(n) != n:
        raise SpecfunDomainError(f"series degree must be a nonnegative integer, got {n}")
    if _is_nonpositive_integer(c) and c > -n:
        raise SpecfunDomainError(f"2F1 pole: c = {c} hits a non-positive integer inside the sum")

    x = np.asarray(x, dtype=float)
    total = np.ones_like(x)
    comp = np.zeros_like(x)
    term = np.ones_like(x)
    for k in range(n):
        term = term * ((-n + k) * (b + k) / ((c + k) * (k + 1))) * x
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total if total.ndim else float(total)


def jacobi_p(idx: JacobiIndex, x):
    """Jacobi polynomial P_n^(a,b)(x) via the terminating 2F1 identity."""
    a, b, n = idx.a, idx.b, idx.n
    s = (1.0 - np.asarray(x, dtype=float)) / 2.0
    lead = math.exp(ln_pochhammer(a + 1.0, n) - ln_gamma(n + 1.0))
    out = lead * np.asarray(hyp2f1_terminating(n, 1.0 + a + b + n, a + 1.0, s))
    return out if out.ndim else float(out)
