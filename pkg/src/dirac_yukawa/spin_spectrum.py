"""Spin-symmetry branch: energies and two-component wave functions when the
difference of the vector and scalar potentials is a constant C_s.

The bound-state condition for the upper component is

    sqrt((M - E)(M + E - C_s)) + alpha (n + kappa + 1)
        = (M + E - C_s) A / (2 (n + kappa + 1)),

which squares to a quadratic in E. Both quadratic roots are returned and
classified by back-substitution: the squaring admits a second sign of the
radical, so the residual is taken over both signs and the matching sign is
recorded. States with n + kappa + 1 = 0 are undefined (the condition
divides by the shell index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import radial
from .errors import CoulombLimitError, InvalidStateError, NormalizationDomainError, SingularDenominatorError
from .states import Classification, EnergyPair, PhysicalParams, StateIndex

#: Relative back-substitution tolerance for accepting a root as bound.
RESIDUAL_RTOL = 1e-9


@dataclass(frozen=True)
class AuxCoefficients:
    """Derived quantities at one candidate energy: decay index nu (None when
    nu^2 < 0), strength index omega, shell index N = 2(n + kappa + 1), and
    the energy combinations W = C_s - M, S = (C_s + alpha A)/2."""

    nu_sq: float
    nu: Optional[float]
    omega: float
    N: int
    W: float
    S: float


def aux_coefficients(p: PhysicalParams, s: StateIndex, E: float) -> AuxCoefficients:
    if p.alpha == 0.0:
        raise CoulombLimitError("alpha = 0: use the Coulomb-limit solver in dirac_yukawa.limits")
    nu_sq = (p.M - E) * (p.M + E - p.C_sym) / (4.0 * p.alpha**2)
    nu = math.sqrt(nu_sq) if nu_sq >= 0.0 else None
    omega = (E + p.M - p.C_sym) * p.A / (2.0 * p.alpha)
    return AuxCoefficients(
        nu_sq=nu_sq,
        nu=nu,
        omega=omega,
        N=2 * (s.n + s.kappa + 1),
        W=p.C_sym - p.M,
        S=0.5 * (p.C_sym + p.alpha * p.A),
    )


def _quadratic_roots(M: float, A: float, alpha: float, C: float, half_shell: float):
    """Roots of the squared energy condition with shell index N = 2*half_shell.

    Returns (discriminant, e_high, e_low); the roots are None when the
    discriminant is negative. Evaluated in the numerically stable form
    (larger-magnitude root first, companion via the product of roots).
    """
    N_sq = 4.0 * half_shell * half_shell
    W = C - M
    S = 0.5 * (C + alpha * A)
    a2 = A * A + N_sq
    b1 = A * A * W + S * N_sq
    k0 = (A * W + 0.5 * alpha * N_sq) ** 2 + M * W * N_sq
    disc = b1 * b1 - a2 * k0
    if disc < 0.0:
        return disc, None, None
    root = math.sqrt(disc)
    if b1 >= 0.0:
        e_hi = (b1 + root) / a2
        e_lo = k0 / (a2 * e_hi) if e_hi != 0.0 else (b1 - root) / a2
    else:
        e_lo = (b1 - root) / a2
        e_hi = k0 / (a2 * e_lo) if e_lo != 0.0 else (b1 + root) / a2
    return disc, e_hi, e_lo


def energy_residual(p: PhysicalParams, s: StateIndex, E: float):
    """Back-substitution residual of the bound-state condition.

    Returns (relative_residual, radical_sign). The squaring that produced
    the quadratic merges the two signs of the radical; the particle root
    satisfies the + sign, the antiparticle root the - sign, so the residual
    is minimized over both and the achieving sign reported. Infinite when
    the radicand is negative.
    """
    half_shell = s.n + s.kappa + 1
    if half_shell == 0:
        raise InvalidStateError("kappa = -(n+1): the bound-state condition is undefined")
    q = (p.M - E) * (p.M + E - p.C_sym)
    rhs = (p.M + E - p.C_sym) * p.A / (2.0 * half_shell)
    scale = max(1.0, abs(rhs))
    if q < 0.0:
        return math.inf, 0
    root = math.sqrt(q)
    res_plus = abs(root + p.alpha * half_shell - rhs)
    res_minus = abs(-root + p.alpha * half_shell - rhs)
    if res_plus <= res_minus:
        return res_plus / scale, +1
    return res_minus / scale, -1


def validate_energy(p: PhysicalParams, s: StateIndex, E: float) -> Classification:
    """Classify one candidate energy for the spin branch."""
    if s.n + s.kappa + 1 == 0:
        return Classification.UNDEFINED
    aux = aux_coefficients(p, s, E)
    if aux.nu_sq < 0.0:
        return Classification.SCATTERING
    if not (p.M > E and p.M + E > p.C_sym):
        return Classification.SPURIOUS
    residual, _ = energy_residual(p, s, E)
    if residual <= RESIDUAL_RTOL:
        return Classification.BOUND
    return Classification.SPURIOUS


def spin_energy_pair(p: PhysicalParams, s: StateIndex) -> EnergyPair:
    """Both roots of the spin-branch quadratic, classified."""
    half_shell = s.n + s.kappa + 1
    if half_shell == 0:
        return EnergyPair(None, None, Classification.UNDEFINED, Classification.UNDEFINED)
    disc, e_hi, e_lo = _quadratic_roots(p.M, p.A, p.alpha, p.C_sym, half_shell)
    if e_hi is None:
        return EnergyPair(None, None, Classification.COMPLEX, Classification.COMPLEX)
    return EnergyPair(
        e_plus=e_hi,
        e_minus=e_lo,
        class_plus=validate_energy(p, s, e_hi),
        class_minus=validate_energy(p, s, e_lo),
        degenerate=(disc == 0.0),
    )


def normalization_constant(p: PhysicalParams, s: StateIndex, E: float) -> float:
    """Constant making the upper component square-normalized on (0, inf).

    Only defined where the closed form is (kappa >= 0 edge behavior, i.e.
    kappa >= 1, or kappa = -1 with n >= 1); outside that a
    NormalizationDomainError is raised.
    """
    aux = aux_coefficients(p, s, E)
    if aux.nu is None or aux.nu <= 0.0:
        raise NormalizationDomainError(f"no real decay index at E = {E}")
    return radial.norm_constant(p.alpha, aux.nu, s.kappa + 1.0, s.n)


def upper_component(p: PhysicalParams, s: StateIndex, E: float, r):
    """Normalized upper spinor component F(r); requires a BOUND energy."""
    cls = validate_energy(p, s, E)
    if cls is not Classification.BOUND:
        raise InvalidStateError(f"upper_component requires a bound energy, got {cls.value}")
    aux = aux_coefficients(p, s, E)
    N = normalization_constant(p, s, E)
    return N * radial.shape(p.alpha, aux.nu, s.kappa + 1.0, s.n, r)


def lower_component(p: PhysicalParams, s: StateIndex, E: float, r):
    """Normalized-by-F lower spinor component G(r) from the first-order
    coupling relation G = (F' + kappa F / r) / (M + E - C_s)."""
    cls = validate_energy(p, s, E)
    if cls is not Classification.BOUND:
        raise InvalidStateError(f"lower_component requires a bound energy, got {cls.value}")
    denom = p.M + E - p.C_sym
    if denom == 0.0:
        raise SingularDenominatorError("M + E - C_s = 0: the lower component is singular here")
    aux = aux_coefficients(p, s, E)
    N = normalization_constant(p, s, E)
    r = np.asarray(r, dtype=float)
    edge = s.kappa + 1.0
    dF = N * radial.shape_derivative(p.alpha, aux.nu, edge, s.n, r)
    F = N * radial.shape(p.alpha, aux.nu, edge, s.n, r)
    out = (dF + s.kappa * F / r) / denom
    return out if out.ndim else float(out)


def emission_grid(p: PhysicalParams, s: StateIndex, E: float, points: int = 512) -> np.ndarray:
    aux = aux_coefficients(p, s, E)
    if aux.nu is None or aux.nu <= 0.0:
        raise InvalidStateError("emission grid needs a real positive decay index")
    return radial.default_grid(p.alpha, aux.nu, points)
