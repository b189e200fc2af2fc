"""Bound states of the screened Coulomb potential in the Dirac equation
under spin and pseudospin symmetry, with nonrelativistic and Coulomb
limits, closed-form wave functions, and an independent numerical oracle.
"""

__version__ = "0.1.0"

from .errors import PhysicsDomainError
from .states import Classification, EnergyPair, PhysicalParams, StateIndex
from .spin_spectrum import spin_energy_pair
from .pseudospin_spectrum import pseudospin_energy_pair
from .limits import NonRelParams, nonrel_energy

__all__ = [
    "__version__",
    "PhysicsDomainError",
    "Classification",
    "EnergyPair",
    "PhysicalParams",
    "StateIndex",
    "spin_energy_pair",
    "pseudospin_energy_pair",
    "NonRelParams",
    "nonrel_energy",
]
