"""Independent numerical eigenvalue machinery.

Outward Numerov integration of the reduced radial Schroedinger equation
u'' = g(r) u with node-count bisection: the n-th eigenvalue is the infimum
of energies whose outward solution shows at least n+1 sign changes. Used
to check the closed forms against (a) the true screened potential and
(b) the same approximated Hamiltonian the closed forms solve, which
separates modeling error from implementation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np
from numba import njit
from scipy import integrate

from .errors import DomainTooSmallError


class PotentialKind(str, Enum):
    """YUKAWA is the true -A e^{-alpha r}/r; APPROX replaces 1/r and the
    centrifugal 1/r^2 by their exponential surrogates (the Hamiltonian the
    closed forms actually diagonalize); COULOMB is the alpha = 0 limit."""

    YUKAWA = "yukawa"
    APPROX = "approx"
    COULOMB = "coulomb"


_KIND_CODE = {PotentialKind.YUKAWA: 0, PotentialKind.APPROX: 1, PotentialKind.COULOMB: 2}


@dataclass(frozen=True)
class RadialProblem:
    """One radial eigenproblem: reduced mass, angular momentum l, potential
    selection, and grid controls. ``r_max = None`` sizes the domain from a
    Coulomb energy estimate and re-solves if the tail needs more room."""

    mass: float
    l: int
    kind: PotentialKind
    A: float
    alpha: float = 0.0
    r_min: float = 1e-6
    r_max: Optional[float] = None
    h: float = 1e-3

    def __post_init__(self):
        if self.mass <= 0.0 or self.A <= 0.0:
            raise ValueError("mass and coupling must be positive")
        if self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if self.r_min <= 0.0 or self.h <= 0.0:
            raise ValueError("r_min and h must be positive")
        if self.r_max is not None and self.r_max <= self.r_min:
            raise ValueError("r_max must exceed r_min")
        if self.kind is not PotentialKind.COULOMB and self.alpha <= 0.0:
            raise ValueError("screened potentials need alpha > 0")


@dataclass(frozen=True)
class EigenResult:
    energy: float
    node_count: int
    converged: bool
    residual: float


@njit(cache=True)
def _count_nodes(E, m, l, A, alpha, kind, r_min, h, n_steps):
    """Sign changes of the outward Numerov solution at energy E."""
    ll = l * (l + 1.0)
    c = h * h / 12.0

    # g(r) at the first two points via the Frobenius start u ~ r^(l+1)(1 - mAr/(l+1)).
    r0 = r_min
    r1 = r_min + h
    u0 = r0 ** (l + 1) * (1.0 - m * A * r0 / (l + 1.0))
    u1 = r1 ** (l + 1) * (1.0 - m * A * r1 / (l + 1.0))

    def g_at(r):
        if kind == 0:
            v = -A * math.exp(-alpha * r) / r
            cent = ll / (r * r)
        elif kind == 1:
            x = math.exp(-2.0 * alpha * r)
            omx = 1.0 - x
            v = -2.0 * alpha * A * x / omx
            cent = ll * 4.0 * alpha * alpha * x / (omx * omx)
        else:
            v = -A / r
            cent = ll / (r * r)
        return cent + 2.0 * m * (v - E)

    g0 = g_at(r0)
    g1 = g_at(r1)
    nodes = 0
    for i in range(2, n_steps):
        r2 = r_min + i * h
        g2 = g_at(r2)
        u2 = (2.0 * u1 * (1.0 + 5.0 * c * g1) - u0 * (1.0 - c * g0)) / (1.0 - c * g2)
        if (u2 > 0.0 and u1 < 0.0) or (u2 < 0.0 and u1 > 0.0):
            nodes += 1
        # Rescale before the exponential tail overflows.
        au = abs(u2)
        if au > 1e250:
            u1 /= au
            u2 /= au
        u0, u1 = u1, u2
        g0, g1 = g1, g2
    return nodes


def _solve_on_domain(prob: RadialProblem, n: int, r_max: float) -> EigenResult:
    m, l, A, alpha = prob.mass, prob.l, prob.A, prob.alpha
    kind = _KIND_CODE[prob.kind]
    n_steps = int((r_max - prob.r_min) / prob.h) + 1

    def nodes(E: float) -> int:
        return _count_nodes(E, m, l, A, alpha, kind, prob.r_min, prob.h, n_steps)

    e_lo = -m * A * A  # below the Coulomb ground state, a strict lower bound
    e_hi = -1e-12
    if nodes(e_hi) < n + 1:
        return EigenResult(energy=math.nan, node_count=nodes(e_hi), converged=False, residual=math.inf)
    if nodes(e_lo) > n:
        return EigenResult(energy=math.nan, node_count=nodes(e_lo), converged=False, residual=math.inf)
    while e_hi - e_lo > 1e-12 * max(1.0, abs(e_lo)):
        mid = 0.5 * (e_lo + e_hi)
        if nodes(mid) >= n + 1:
            e_hi = mid
        else:
            e_lo = mid
    energy = 0.5 * (e_lo + e_hi)
    return EigenResult(energy=energy, node_count=n, converged=True, residual=e_hi - e_lo)


def shoot_eigenvalue(prob: RadialProblem, n: int) -> EigenResult:
    """Eigenvalue with n radial nodes by node-count bisection.

    The domain is sized from the Coulomb estimate of the energy and grown
    once if the found eigenvalue is shallower than estimated.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"node count must be a nonnegative integer, got {n}")
    if prob.r_max is not None:
        return _solve_on_domain(prob, n, prob.r_max)

    shell = n + prob.l + 1
    e_est = -prob.mass * prob.A**2 / (2.0 * shell**2)
    r_max = max(50.0, 40.0 / math.sqrt(2.0 * prob.mass * abs(e_est)))
    result = _solve_on_domain(prob, n, r_max)
    if result.converged:
        r_needed = 40.0 / math.sqrt(2.0 * prob.mass * abs(result.energy))
        if r_needed > r_max:
            result = _solve_on_domain(prob, n, r_needed)
    return result


def quadrature_norm(f: Callable[[float], float], r_max: float) -> float:
    """Integral of f(r)^2 over (0, r_max) by adaptive quadrature.

    Refuses domains where the integrand has not decayed to 1e-14 of its
    sampled maximum by r_max, since the result would silently miss tail
    weight.
    """
    probe = np.linspace(max(1e-8, r_max * 1e-6), r_max, 400)
    vals = np.asarray([float(f(r)) ** 2 for r in probe])
    peak = float(vals.max())
    if peak == 0.0:
        return 0.0
    if vals[-1] > 1e-14 * peak:
        raise DomainTooSmallError(f"integrand at r_max is {vals[-1] / peak:.2e} of its peak; extend the domain")
    total, _ = integrate.quad(lambda r: f(r) ** 2, 0.0, r_max, limit=400, epsabs=1e-12, epsrel=1e-12)
    return total
