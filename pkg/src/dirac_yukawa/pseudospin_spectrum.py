"""Pseudospin-symmetry branch: energies and wave functions when the sum of
the vector and scalar potentials is a constant C_ps.

The lower component now carries the closed-form profile; its bound-state
condition is

    sqrt((M + E)(M - E + C_ps)) + alpha (n + kappa)
        = (E - M - C_ps) A / (2 (n + kappa)),

and the squared form is a quadratic in E. The branch is also the image of
the spin branch under the substitution (kappa, A, E, C_s) ->
(kappa - 1, -A, -E, -C_ps); :func:`map_from_spin` exposes that route and
the acceptance suite checks it agrees with the direct quadratic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import radial
from .errors import CoulombLimitError, InvalidStateError, NormalizationDomainError, SingularDenominatorError
from .spin_spectrum import RESIDUAL_RTOL, _quadratic_roots
from .states import Classification, EnergyPair, PhysicalParams, StateIndex


@dataclass(frozen=True)
class PseudoAuxCoefficients:
    """Derived quantities at one candidate energy for the pseudospin branch:
    decay index nu, strength index omega, shell index N = 2(n + kappa), and
    the combinations U = C_ps + M, T = (C_ps + alpha A)/2."""

    nu_sq: float
    nu: Optional[float]
    omega: float
    N: int
    U: float
    T: float


def pseudo_aux_coefficients(p: PhysicalParams, s: StateIndex, E: float) -> PseudoAuxCoefficients:
    if p.alpha == 0.0:
        raise CoulombLimitError("alpha = 0: use the Coulomb-limit solver in dirac_yukawa.limits")
    nu_sq = (p.M + E) * (p.M - E + p.C_sym) / (4.0 * p.alpha**2)
    nu = math.sqrt(nu_sq) if nu_sq >= 0.0 else None
    omega = (E - p.M - p.C_sym) * p.A / (2.0 * p.alpha)
    return PseudoAuxCoefficients(
        nu_sq=nu_sq,
        nu=nu,
        omega=omega,
        N=2 * (s.n + s.kappa),
        U=p.C_sym + p.M,
        T=0.5 * (p.C_sym + p.alpha * p.A),
    )


def _pseudo_quadratic_roots(M: float, A: float, alpha: float, C: float, half_shell: float):
    """Direct roots of the squared pseudospin condition, stable form."""
    N_sq = 4.0 * half_shell * half_shell
    U = C + M
    T = 0.5 * (C + alpha * A)
    a2 = A * A + N_sq
    b1 = A * A * U + T * N_sq
    k0 = (A * U + 0.5 * alpha * N_sq) ** 2 - M * U * N_sq
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


def map_from_spin(p: PhysicalParams, s: StateIndex):
    """Pseudospin roots obtained through the spin branch.

    Substituting kappa -> kappa - 1, A -> -A, E -> -E, C_s -> -C_ps in the
    spin quadratic reproduces the pseudospin quadratic exactly, so the
    pseudospin roots are the negated spin roots of the mapped problem
    (order swapped because negation reverses it).
    """
    half_shell = s.n + s.kappa
    if half_shell == 0:
        return None, None, None
    disc, e_hi, e_lo = _quadratic_roots(p.M, -p.A, p.alpha, -p.C_sym, half_shell)
    if e_hi is None:
        return disc, None, None
    return disc, -e_lo, -e_hi


def energy_residual(p: PhysicalParams, s: StateIndex, E: float):
    """Back-substitution residual, minimized over both radical signs.

    Returns (relative_residual, radical_sign); see the spin-branch twin for
    why both signs must be tried.
    """
    half_shell = s.n + s.kappa
    if half_shell == 0:
        raise InvalidStateError("kappa = -n: the bound-state condition is undefined")
    q = (p.M + E) * (p.M - E + p.C_sym)
    rhs = (E - p.M - p.C_sym) * p.A / (2.0 * half_shell)
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
    """Classify one candidate energy for the pseudospin branch."""
    if s.n + s.kappa == 0:
        return Classification.UNDEFINED
    aux = pseudo_aux_coefficients(p, s, E)
    if aux.nu_sq < 0.0:
        return Classification.SCATTERING
    if not (p.M > -E and p.M + p.C_sym > E):
        return Classification.SPURIOUS
    residual, _ = energy_residual(p, s, E)
    if residual <= RESIDUAL_RTOL:
        return Classification.BOUND
    return Classification.SPURIOUS


def pseudospin_energy_pair(p: PhysicalParams, s: StateIndex) -> EnergyPair:
    """Both roots of the pseudospin-branch quadratic, classified."""
    half_shell = s.n + s.kappa
    if half_shell == 0:
        return EnergyPair(None, None, Classification.UNDEFINED, Classification.UNDEFINED)
    disc, e_hi, e_lo = _pseudo_quadratic_roots(p.M, p.A, p.alpha, p.C_sym, half_shell)
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
    """Constant making the lower component square-normalized on (0, inf).

    The closed form needs a non-negative edge power, which for this branch
    means kappa >= 1.
    """
    aux = pseudo_aux_coefficients(p, s, E)
    if aux.nu is None or aux.nu <= 0.0:
        raise NormalizationDomainError(f"no real decay index at E = {E}")
    return radial.norm_constant(p.alpha, aux.nu, float(s.kappa), s.n)


def lower_component_ps(p: PhysicalParams, s: StateIndex, E: float, r):
    """Normalized lower spinor component G(r); requires a BOUND energy."""
    cls = validate_energy(p, s, E)
    if cls is not Classification.BOUND:
        raise InvalidStateError(f"lower_component_ps requires a bound energy, got {cls.value}")
    aux = pseudo_aux_coefficients(p, s, E)
    N = normalization_constant(p, s, E)
    return N * radial.shape(p.alpha, aux.nu, float(s.kappa), s.n, r)


def upper_component_ps(p: PhysicalParams, s: StateIndex, E: float, r):
    """Upper spinor component F(r) from the coupling relation
    F = (G' - kappa G / r) / (M - E + C_ps)."""
    cls = validate_energy(p, s, E)
    if cls is not Classification.BOUND:
        raise InvalidStateError(f"upper_component_ps requires a bound energy, got {cls.value}")
    denom = p.M - E + p.C_sym
    if denom == 0.0:
        raise SingularDenominatorError("M - E + C_ps = 0: the upper component is singular here")
    aux = pseudo_aux_coefficients(p, s, E)
    N = normalization_constant(p, s, E)
    r = np.asarray(r, dtype=float)
    edge = float(s.kappa)
    dG = N * radial.shape_derivative(p.alpha, aux.nu, edge, s.n, r)
    G = N * radial.shape(p.alpha, aux.nu, edge, s.n, r)
    out = (dG - s.kappa * G / r) / denom
    return out if out.ndim else float(out)
