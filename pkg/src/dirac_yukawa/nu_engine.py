"""Parametric machinery that reduces hypergeometric-type radial equations
to polynomial eigenproblems.

A problem is posed by six numbers: the two first-degree template
polynomials tau~(x) = c1 - c2 x and sigma(x) = x(1 - c3 x), and the three
coefficients of sigma~(x) = -xi2 x^2 + xi1 x - xi0. From those,
:func:`derive_constants` produces the ten derived constants c4..c13 that
fix the eigenvalue condition and the shape of the eigenfunctions

    psi_n(x) = x^c12 (1 - c3 x)^c13 P_n^(c10, c11)(1 - 2 c3 x).

This module is purely algebraic: it never picks energies. Root finding on
top of the eigenvalue condition lives in the physics modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoRealNuSolutionError, UnphysicalEigenfunctionError
from .specfun import JacobiIndex, jacobi_p


@dataclass(frozen=True)
class NuSignature:
    """Template-polynomial coefficients posing one reduced radial problem."""

    c1: float
    c2: float
    c3: float
    xi0: float
    xi1: float
    xi2: float

    def __post_init__(self):
        if self.c3 == 0.0:
            raise ValueError("c3 must be nonzero (the c3 = 0 limit is handled analytically elsewhere)")


@dataclass(frozen=True)
class NuConstants:
    """Derived constants c4..c13.

    ``violations`` lists the positivity/range flags that fail; a nonempty
    tuple means the algebra went through but no physical eigenfunction
    exists (parameter sweeps cross such regions routinely, so this is a
    flag, not an error).
    """

    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float
    c13: float
    violations: tuple[str, ...] = ()

    @property
    def is_physical(self) -> bool:
        return not self.violations


def derive_constants(sig: NuSignature) -> NuConstants:
    """Closed-form c4..c13 from a signature.

    Raises :class:`NoRealNuSolutionError` if c8 or c9, whose square roots
    enter everywhere downstream, come out negative.
    """
    c1, c2, c3 = sig.c1, sig.c2, sig.c3
    c4 = 0.5 * (1.0 - c1)
    c5 = 0.5 * (c2 - 2.0 * c3)
    c6 = c5 * c5 + sig.xi2
    c7 = 2.0 * c4 * c5 - sig.xi1
    c8 = c4 * c4 + sig.xi0
    if c8 < 0.0:
        raise NoRealNuSolutionError("c8", c8)
    c9 = c3 * (c7 + c3 * c8) + c6
    if c9 < 0.0:
        raise NoRealNuSolutionError("c9", c9)
    sqrt_c8 = math.sqrt(c8)
    sqrt_c9 = math.sqrt(c9)
    c10 = c1 + 2.0 * c4 + 2.0 * sqrt_c8 - 1.0
    c11 = 1.0 - c1 - 2.0 * c4 + 2.0 / c3 * sqrt_c9
    c12 = c4 + sqrt_c8
    c13 = -c4 + (sqrt_c9 - c5) / c3

    # Physical solutions need a strictly decreasing tau; with c8, c9 >= 0 and
    # c3 = 1 this is automatic, and we keep the check as a guard.
    if c3 == 1.0:
        assert -2.0 * c3 - 2.0 * (sqrt_c9 + c3 * sqrt_c8) < 0.0

    violations = []
    if c10 <= -1.0:
        violations.append(f"c10 = {c10} <= -1")
    if c11 <= -1.0:
        violations.append(f"c11 = {c11} <= -1")
    if c12 <= 0.0:
        violations.append(f"c12 = {c12} <= 0")
    if c13 <= 0.0:
        violations.append(f"c13 = {c13} <= 0")
    return NuConstants(c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, tuple(violations))


def energy_condition_residual(consts: NuConstants, sig: NuSignature, n: int) -> float:
    """Left side of the polynomial eigenvalue condition; zero at a solution."""
    if n < 0 or int(n) != n:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    c3 = sig.c3
    return (
        sig.c2 * n
        - (2 * n + 1) * consts.c5
        + (2 * n + 1) * (math.sqrt(consts.c9) + c3 * math.sqrt(consts.c8))
        + n * (n - 1) * c3
        + consts.c7
        + 2.0 * c3 * consts.c8
        + 2.0 * math.sqrt(consts.c8 * consts.c9)
    )


def assemble_eigenfunction(consts: NuConstants, sig: NuSignature, n: int, x):
    """Unnormalized eigenfunction x^c12 (1-c3 x)^c13 P_n^(c10,c11)(1-2 c3 x).

    ``x`` may be a scalar or array in (0, 1/c3).
    """
    if not consts.is_physical:
        raise UnphysicalEigenfunctionError(
            "eigenfunction exponents violate constraints: " + "; ".join(consts.violations)
        )
    c3 = sig.c3
    x = np.asarray(x, dtype=float)
    poly = jacobi_p(JacobiIndex(consts.c10, consts.c11, n), 1.0 - 2.0 * c3 * x)
    out = x**consts.c12 * (1.0 - c3 * x) ** consts.c13 * poly
    return out if out.ndim else float(out)
