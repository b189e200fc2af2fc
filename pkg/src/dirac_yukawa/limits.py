"""Special-case solvers: the nonrelativistic reduction, the Coulomb limit
(alpha -> 0) of both branches, exact symmetry (vanishing symmetry constant),
and the screened potential augmented by a D/r^2 term solved through a
self-consistent effective spin-orbit index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import pseudospin_spectrum, radial, spin_spectrum
from .errors import CoulombLimitError, InvalidStateError, UnphysicalCentrifugalError
from .spin_spectrum import RESIDUAL_RTOL
from .states import Classification, EnergyPair, PhysicalParams, StateIndex


class Branch(str, Enum):
    SPIN = "spin"
    PSEUDOSPIN = "pseudospin"


@dataclass(frozen=True)
class NonRelParams:
    """Schroedinger-Yukawa inputs: mass m, coupling A, screening alpha, and
    the (n, l) quantum numbers."""

    m: float
    A: float
    alpha: float
    n: int
    l: int

    def __post_init__(self):
        if self.m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.m}")
        if self.A <= 0.0:
            raise ValueError(f"coupling A must be positive, got {self.A}")
        if self.alpha < 0.0:
            raise ValueError(f"screening alpha must be >= 0, got {self.alpha}")
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if self.l < 0 or int(self.l) != self.l:
            raise ValueError(f"l must be a nonnegative integer, got {self.l}")


@dataclass(frozen=True)
class NonRelEnergy:
    """Closed-form energy with its decay rate eps = mA/(n+l+1) - (n+l+1)alpha.

    The formula is defined for every input; ``bound`` records whether the
    decay rate is positive, i.e. whether the state actually exists. Past
    that threshold the value is an analytic continuation, kept so sweeps
    stay continuous.
    """

    energy: float
    decay_rate: float
    bound: bool


def nonrel_energy(p: NonRelParams) -> NonRelEnergy:
    """E = -(1/2m) [mA/(n+l+1) - (n+l+1) alpha]^2 (hbar = 1)."""
    shell = p.n + p.l + 1
    eps = p.m * p.A / shell - shell * p.alpha
    return NonRelEnergy(energy=-eps * eps / (2.0 * p.m), decay_rate=eps, bound=eps > 0.0)


def nonrel_wavefunction(p: NonRelParams, r):
    """Normalized reduced radial function u_nl(r) = r R_nl(r)."""
    if p.alpha == 0.0:
        raise CoulombLimitError("alpha = 0: the wave function is the Coulomb Laguerre form, not this profile")
    e = nonrel_energy(p)
    if not e.bound:
        raise InvalidStateError(f"(n={p.n}, l={p.l}) is unbound at alpha = {p.alpha} (decay rate {e.decay_rate})")
    nu = e.decay_rate / (2.0 * p.alpha)
    N = radial.norm_constant(p.alpha, nu, p.l + 1.0, p.n)
    return N * radial.shape(p.alpha, nu, p.l + 1.0, p.n, r)


def exact_coulomb_spin(M: float, A: float, n: int, kappa: int) -> float:
    """Unscreened Coulomb energy at zero symmetry constant, spin branch:
    4 Ns^2 (M - E) = A^2 (M + E) with Ns = n + kappa + 1."""
    Ns = n + kappa + 1
    if Ns == 0:
        raise InvalidStateError("kappa = -(n+1): the Coulomb shell index vanishes")
    return M * (4.0 * Ns * Ns - A * A) / (4.0 * Ns * Ns + A * A)


def exact_coulomb_pseudospin(M: float, A: float, n: int, kappa: int) -> float:
    """Unscreened Coulomb energy at zero symmetry constant, pseudospin
    branch: 4 Nps^2 (M + E) = A^2 (M - E) with Nps = n + kappa."""
    Nps = n + kappa
    if Nps == 0:
        raise InvalidStateError("kappa = -n: the Coulomb shell index vanishes")
    return M * (A * A - 4.0 * Nps * Nps) / (A * A + 4.0 * Nps * Nps)


def _coulomb_spin_residual(M: float, A: float, C: float, half_shell: float, E: float):
    q = (M - E) * (M + E - C)
    rhs = (M + E - C) * A / (2.0 * half_shell)
    scale = max(1.0, abs(rhs))
    if q < 0.0:
        return math.inf, 0
    root = math.sqrt(q)
    if abs(root - rhs) <= abs(-root - rhs):
        return abs(root - rhs) / scale, +1
    return abs(-root - rhs) / scale, -1


def dirac_coulomb_spin(p: PhysicalParams, s: StateIndex) -> EnergyPair:
    """Both roots of the alpha -> 0 spin-branch quadratic
    (A^2 + N1^2) E^2 - (C_s N1^2 + 2 A^2 W) E + A^2 W^2 + M W N1^2 = 0."""
    half_shell = s.n + s.kappa + 1
    if half_shell == 0:
        return EnergyPair(None, None, Classification.UNDEFINED, Classification.UNDEFINED)
    N_sq = 4.0 * half_shell * half_shell
    W = p.C_sym - p.M
    a2 = p.A * p.A + N_sq
    b1 = 0.5 * (p.C_sym * N_sq + 2.0 * p.A * p.A * W)
    k0 = (p.A * W) ** 2 + p.M * W * N_sq
    disc = b1 * b1 - a2 * k0
    if disc < 0.0:
        return EnergyPair(None, None, Classification.COMPLEX, Classification.COMPLEX)
    root = math.sqrt(disc)
    if b1 >= 0.0:
        e_hi = (b1 + root) / a2
        e_lo = k0 / (a2 * e_hi) if e_hi != 0.0 else (b1 - root) / a2
    else:
        e_lo = (b1 - root) / a2
        e_hi = k0 / (a2 * e_lo) if e_lo != 0.0 else (b1 + root) / a2

    def classify(E: float) -> Classification:
        if not (p.M > E and p.M + E > p.C_sym):
            return Classification.SPURIOUS
        res, _ = _coulomb_spin_residual(p.M, p.A, p.C_sym, half_shell, E)
        return Classification.BOUND if res <= RESIDUAL_RTOL else Classification.SPURIOUS

    return EnergyPair(e_hi, e_lo, classify(e_hi), classify(e_lo), degenerate=(disc == 0.0))


def dirac_coulomb_pseudospin(p: PhysicalParams, s: StateIndex) -> EnergyPair:
    """Both roots of the alpha -> 0 pseudospin-branch quadratic
    (A^2 + N2^2) E^2 - (C_ps N2^2 + 2 A^2 U) E + A^2 U^2 - M U N2^2 = 0."""
    half_shell = s.n + s.kappa
    if half_shell == 0:
        return EnergyPair(None, None, Classification.UNDEFINED, Classification.UNDEFINED)
    N_sq = 4.0 * half_shell * half_shell
    U = p.C_sym + p.M
    a2 = p.A * p.A + N_sq
    b1 = 0.5 * (p.C_sym * N_sq + 2.0 * p.A * p.A * U)
    k0 = (p.A * U) ** 2 - p.M * U * N_sq
    disc = b1 * b1 - a2 * k0
    if disc < 0.0:
        return EnergyPair(None, None, Classification.COMPLEX, Classification.COMPLEX)
    root = math.sqrt(disc)
    if b1 >= 0.0:
        e_hi = (b1 + root) / a2
        e_lo = k0 / (a2 * e_hi) if e_hi != 0.0 else (b1 - root) / a2
    else:
        e_lo = (b1 - root) / a2
        e_hi = k0 / (a2 * e_lo) if e_lo != 0.0 else (b1 + root) / a2

    def classify(E: float) -> Classification:
        if not (p.M > -E and p.M + p.C_sym > E):
            return Classification.SPURIOUS
        q = (p.M + E) * (p.M - E + p.C_sym)
        rhs = (E - p.M - p.C_sym) * p.A / (2.0 * half_shell)
        scale = max(1.0, abs(rhs))
        if q < 0.0:
            return Classification.SPURIOUS
        res = min(abs(math.sqrt(q) - rhs), abs(-math.sqrt(q) - rhs)) / scale
        return Classification.BOUND if res <= RESIDUAL_RTOL else Classification.SPURIOUS

    return EnergyPair(e_hi, e_lo, classify(e_hi), classify(e_lo), degenerate=(disc == 0.0))


def exact_symmetry_energy(p: PhysicalParams, s: StateIndex, branch: Branch) -> EnergyPair:
    """Energies at vanishing symmetry constant.

    The zero-constant quadratic is the same one the general branch solvers
    use, so this delegates after asserting the precondition; it exists so
    callers can state the exact-symmetry intent explicitly.
    """
    if p.C_sym != 0.0:
        raise ValueError(f"exact symmetry requires a zero symmetry constant, got {p.C_sym}")
    if branch is Branch.SPIN:
        return spin_spectrum.spin_energy_pair(p, s)
    return pseudospin_spectrum.pseudospin_energy_pair(p, s)


def exact_symmetry_gamma(p: PhysicalParams, E: float) -> float:
    """Decay index gamma = sqrt(M^2 - E^2) / (2 alpha) at zero constant."""
    if p.alpha == 0.0:
        raise CoulombLimitError("gamma is defined for alpha > 0")
    q = p.M * p.M - E * E
    if q < 0.0:
        raise InvalidStateError(f"|E| >= M at E = {E}: no decaying solution")
    return math.sqrt(q) / (2.0 * p.alpha)


@dataclass(frozen=True)
class CentrifugalResult:
    """Converged (or last-iterate) solution of the D/r^2-augmented problem."""

    energy: float
    kappa_eff: float
    converged: bool
    iterations: int
    residual: float


def _kappa_eff_spin(p: PhysicalParams, kappa: int, D: float, E: float) -> float:
    radicand = (2.0 * kappa + 1.0) ** 2 + 4.0 * D * (p.M + E - p.C_sym)
    if radicand < 0.0:
        raise UnphysicalCentrifugalError(f"negative radicand {radicand} in the effective index at E = {E}")
    sign = 1.0 if kappa > 0 else -1.0
    return -0.5 + sign * 0.5 * math.sqrt(radicand)


def _kappa_eff_pseudospin(p: PhysicalParams, kappa: int, D: float, E: float) -> float:
    radicand = (2.0 * kappa - 1.0) ** 2 + 4.0 * D * (E - p.M - p.C_sym)
    if radicand < 0.0:
        raise UnphysicalCentrifugalError(f"negative radicand {radicand} in the effective index at E = {E}")
    sign = 1.0 if kappa > 0 else -1.0
    return 0.5 + sign * 0.5 * math.sqrt(radicand)


def centrifugal_augmented_energy(
    p: PhysicalParams,
    s: StateIndex,
    D: float,
    branch: Branch = Branch.SPIN,
    which: str = "plus",
    max_iter: int = 200,
    damping: float = 0.5,
) -> CentrifugalResult:
    """Self-consistent energy for the potential with an added D/r^2 term.

    The effective index depends on the energy and the energy on the index,
    so the pair is solved by damped fixed-point iteration seeded from the
    D = 0 solution. Returns the last iterate with ``converged = False`` if
    the cap is hit; a negative radicand raises.
    """
    if D < 0.0:
        raise ValueError(f"centrifugal strength D must be >= 0, got {D}")
    spin = branch is Branch.SPIN
    base = spin_spectrum.spin_energy_pair(p, s) if spin else pseudospin_spectrum.pseudospin_energy_pair(p, s)
    E = base.root(which)
    if E is None:
        raise InvalidStateError(f"no real D = 0 seed energy for (n={s.n}, kappa={s.kappa})")
    kappa_eff = float(s.kappa)
    offset = 1.0 if spin else 0.0
    kap_fn = _kappa_eff_spin if spin else _kappa_eff_pseudospin
    roots_fn = spin_spectrum._quadratic_roots if spin else pseudospin_spectrum._pseudo_quadratic_roots

    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        kappa_new = kap_fn(p, s.kappa, D, E)
        half_shell = s.n + kappa_new + offset
        if half_shell == 0.0:
            raise InvalidStateError("effective shell index hit zero during iteration")
        _, e_hi, e_lo = roots_fn(p.M, p.A, p.alpha, p.C_sym, half_shell)
        if e_hi is None:
            raise InvalidStateError(f"discriminant turned negative at kappa_eff = {kappa_new}")
        E_new = e_hi if which == "plus" else e_lo
        dE = E_new - E
        dk = kappa_new - kappa_eff
        kappa_eff = kappa_new
        if abs(dE) <= 1e-10 and abs(dk) <= 1e-10:
            E = E_new
            converged = True
            break
        E += damping * dE

    residual = abs(kappa_eff - kap_fn(p, s.kappa, D, E))
    return CentrifugalResult(energy=E, kappa_eff=kappa_eff, converged=converged, iterations=iterations, residual=residual)


def centrifugal_wavefunction_grid(p: PhysicalParams, nu: float, points: int = 512) -> np.ndarray:
    return radial.default_grid(p.alpha, nu, points)
