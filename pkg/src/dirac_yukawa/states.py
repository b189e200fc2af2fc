"""Domain types shared by the spin and pseudospin branches.

Units are natural (hbar = c = 1); masses, energies, the screening
parameter and the symmetry constant are all in fm^-1. The coupling A is
dimensionless.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

_ORBITAL_LETTERS = "spdfghiklmnoqrtuv"


class Classification(str, Enum):
    """Per-root validity of a quadratic energy root.

    BOUND      back-substitutes into the branch energy condition and obeys
               the bound-state inequalities,
    SPURIOUS   real root introduced by squaring; fails the inequalities or
               the back-substitution residual,
    SCATTERING real root but the decay index is imaginary (continuum),
    COMPLEX    the quadratic's discriminant is negative (no real roots),
    UNDEFINED  the shell index vanishes and the branch formula is singular.
    """

    BOUND = "BOUND"
    SPURIOUS = "SPURIOUS"
    SCATTERING = "SCATTERING"
    COMPLEX = "COMPLEX"
    UNDEFINED = "UNDEFINED"


@dataclass(frozen=True)
class PhysicalParams:
    """Potential and symmetry parameters: mass M, coupling A > 0, screening
    alpha >= 0, and the symmetry constant (C_s in the spin branch, C_ps in
    the pseudospin branch)."""

    M: float
    A: float
    alpha: float
    C_sym: float = 0.0

    def __post_init__(self):
        if self.M <= 0.0:
            raise ValueError(f"mass must be positive, got {self.M}")
        if self.A <= 0.0:
            raise ValueError(f"coupling A must be positive, got {self.A}")
        if self.alpha < 0.0:
            raise ValueError(f"screening alpha must be >= 0, got {self.alpha}")


@dataclass(frozen=True)
class StateIndex:
    """Radial quantum number n >= 0 and spin-orbit quantum number kappa != 0."""

    n: int
    kappa: int

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if self.kappa == 0 or int(self.kappa) != self.kappa:
            raise ValueError(f"kappa must be a nonzero integer, got {self.kappa}")

    @property
    def l(self) -> int:
        """Orbital angular momentum: kappa(kappa+1) = l(l+1)."""
        return self.kappa if self.kappa > 0 else -self.kappa - 1

    @property
    def l_tilde(self) -> int:
        """Pseudo-orbital angular momentum: kappa(kappa-1) = l~(l~+1)."""
        return self.kappa - 1 if self.kappa > 0 else -self.kappa

    @property
    def j_twice(self) -> int:
        """2j, with j = |kappa| - 1/2."""
        return 2 * abs(self.kappa) - 1

    @property
    def label(self) -> str:
        """Spectroscopic label, e.g. (n=1, kappa=-1) -> '1s1/2'; orbitals
        beyond the letter list fall back to a numeric '[l=..]' marker."""
        letter = _ORBITAL_LETTERS[self.l] if self.l < len(_ORBITAL_LETTERS) else f"[l={self.l}]"
        return f"{self.n}{letter}{self.j_twice}/2"


@dataclass(frozen=True)
class EnergyPair:
    """Both quadratic roots with per-root classification.

    A ``None`` energy means the root does not exist as a real number
    (COMPLEX) or the state is UNDEFINED. ``degenerate`` marks a vanishing
    discriminant (the two roots coincide).
    """

    e_plus: Optional[float]
    e_minus: Optional[float]
    class_plus: Classification
    class_minus: Classification
    degenerate: bool = False

    def root(self, which: str) -> Optional[float]:
        return self.e_plus if which == "plus" else self.e_minus
