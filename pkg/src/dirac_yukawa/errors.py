"""Exception hierarchy shared across the package.

Input-shape problems raise plain ``ValueError`` (pydantic handles the
service layer); everything below is a *physics-domain* failure: the inputs
were well formed but the requested quantity does not exist there.
"""


class PhysicsDomainError(Exception):
    """Base class for physics-domain failures (CLI exit code 3)."""


class CoulombLimitError(PhysicsDomainError):
    """alpha = 0 requested on a screened-potential code path; use the
    Coulomb-limit formulas in :mod:`dirac_yukawa.limits` instead."""


class NoRealNuSolutionError(PhysicsDomainError):
    """A derived constant that must be a real square root came out negative."""

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"no real solution: {name} = {value} < 0")


class UnphysicalEigenfunctionError(PhysicsDomainError):
    """Eigenfunction exponents violate the positivity/integrability flags."""


class SingularDenominatorError(PhysicsDomainError):
    """The spinor-component relation divides by zero at this energy."""


class InvalidStateError(PhysicsDomainError):
    """A wave-function or normalization request for a non-bound energy."""


class NormalizationDomainError(PhysicsDomainError):
    """Closed-form normalization undefined (gamma argument or integrability)."""


class DomainTooSmallError(PhysicsDomainError):
    """Quadrature integrand has not decayed at the end of the domain."""


class UnphysicalCentrifugalError(PhysicsDomainError):
    """Negative radicand in the effective spin-orbit index for this D."""
