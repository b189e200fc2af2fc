"""Closed-form radial profiles shared by all branches.

Every bound radial function in this package has the same shape in the
variable x = exp(-2 alpha r):

    f(r) = e^{-2 nu alpha r} (1 - x)^edge P_n^{(2 nu, 2 edge - 1)}(1 - 2x)

with a branch-specific decay index ``nu`` and edge power ``edge`` (kappa+1
in the spin branch, kappa in the pseudospin branch, l+1 nonrelativistically).
This module evaluates that profile, its exact r-derivative, and the
closed-form constant that makes the profile square-normalized on (0, inf).

The Jacobi polynomial is evaluated through its terminating-hypergeometric
form because the derivative then follows from the contiguous relation
d/dx 2F1(-n, b; c; x) = (-n b / c) 2F1(-n+1, b+1; c+1; x).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NormalizationDomainError
from .specfun import hyp2f1_terminating, ln_gamma


def _lead(nu: float, n: int) -> float:
    """Gamma(n + 2nu + 1) / (Gamma(2nu + 1) n!), the Jacobi leading factor."""
    return math.exp(ln_gamma(n + 2.0 * nu + 1.0) - ln_gamma(2.0 * nu + 1.0) - ln_gamma(n + 1.0))


def shape(alpha: float, nu: float, edge: float, n: int, r):
    """Unnormalized profile e^{-2 nu a r}(1-x)^edge P_n^{(2nu, 2edge-1)}(1-2x)."""
    r = np.asarray(r, dtype=float)
    x = np.exp(-2.0 * alpha * r)
    b = n + 2.0 * (nu + edge)
    c = 1.0 + 2.0 * nu
    series = np.asarray(hyp2f1_terminating(n, b, c, x))
    out = _lead(nu, n) * x**nu * (1.0 - x) ** edge * series
    return out if out.ndim else float(out)


def shape_derivative(alpha: float, nu: float, edge: float, n: int, r):
    """Exact d/dr of :func:`shape` at the same (alpha, nu, edge, n)."""
    r = np.asarray(r, dtype=float)
    x = np.exp(-2.0 * alpha * r)
    b = n + 2.0 * (nu + edge)
    c = 1.0 + 2.0 * nu
    lead = _lead(nu, n)
    series = np.asarray(hyp2f1_terminating(n, b, c, x))
    base = lead * x**nu * (1.0 - x) ** edge * series
    # Local (logarithmic-derivative) part from the two prefactors.
    local = (-2.0 * alpha * nu + 2.0 * alpha * edge * x / (1.0 - x)) * base
    if n == 0:
        out = local
    else:
        shifted = np.asarray(hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, x))
        poly_term = lead * (2.0 * n * alpha * b / c) * x ** (nu + 1.0) * (1.0 - x) ** edge * shifted
        out = local + poly_term
    return out if out.ndim else float(out)


def norm_constant(alpha: float, nu: float, edge: float, n: int) -> float:
    """Constant N with integral_0^inf [N * shape(r)]^2 dr = 1.

    Closed form from the two standard squared-Jacobi weight integrals; the
    profile must decay (nu > 0) and be square-integrable at the origin
    (edge >= 0, with n >= 1 when edge = 0).
    """
    if nu <= 0.0:
        raise NormalizationDomainError(f"decay index must be positive, got nu = {nu}")
    if edge < 0.0:
        raise NormalizationDomainError(f"profile not square-integrable at r = 0 for edge = {edge}")
    for name, arg in (
        ("n + nu + edge", n + nu + edge),
        ("n + edge", n + edge),
        ("n + 2*edge", n + 2.0 * edge),
        ("n + 2*nu + 2*edge", n + 2.0 * nu + 2.0 * edge),
    ):
        if arg <= 0.0:
            raise NormalizationDomainError(f"gamma argument {name} = {arg} <= 0")
    log_nsq = (
        math.log(4.0 * alpha * nu)
        + math.log(n + nu + edge)
        - math.log(n + edge)
        + ln_gamma(n + 1.0)
        + ln_gamma(n + 2.0 * nu + 2.0 * edge)
        - ln_gamma(n + 2.0 * nu + 1.0)
        - ln_gamma(n + 2.0 * edge)
    )
    return math.exp(0.5 * log_nsq)


def default_grid(alpha: float, nu: float, points: int = 512) -> np.ndarray:
    """Logarithmic emission grid from 1e-4 fm out to where the tail has
    decayed to ~e^-25 of its scale."""
    r_max = 25.0 / (2.0 * alpha * nu)
    return np.geomspace(1e-4, r_max, points)
