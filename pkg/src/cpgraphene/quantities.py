"""Unit conventions, physical constants, and kinematic wave numbers.

Everything downstream works in eV-based units: energies and temperatures
enter as eV and kelvin, lengths as nm, and wave vectors are exchanged as
hbar*c*k in eV.  Forces are assembled in eV/nm and converted to newtons
only at output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParameterError

# hbar*c in eV*nm and the Boltzmann constant in eV/K.
HBARC_EV_NM = 197.3269804
BOLTZMANN_EV_PER_K = 8.617333e-5
# CODATA fine-structure constant.
FINE_STRUCTURE = 7.2973525693e-3
# Fermi velocity of graphene's Dirac cone over the speed of light.
FERMI_VELOCITY_RATIO = 1.0 / 300.0

# One eV/nm in newtons.
EV_PER_NM_TO_NEWTON = 1.602176634e-10


@dataclass(frozen=True)
class UnitSystem:
    """Constants every other module shares.

    ``fermi_velocity_ratio`` is configurable because v_F/c is only known
    approximately; the default is exactly 1/300.
    """

    hbar_c: float = HBARC_EV_NM
    boltzmann: float = BOLTZMANN_EV_PER_K
    fine_structure: float = FINE_STRUCTURE
    fermi_velocity_ratio: float = FERMI_VELOCITY_RATIO

    def __post_init__(self):
        if self.hbar_c <= 0 or self.boltzmann <= 0:
            raise InvalidParameterError("hbar_c and boltzmann must be positive")
        if not 0 < self.fine_structure < 1:
            raise InvalidParameterError("fine_structure must lie in (0, 1)")
        if not 0 < self.fermi_velocity_ratio < 1:
            raise InvalidParameterError("fermi_velocity_ratio must lie in (0, 1)")


DEFAULT_UNITS = UnitSystem()


@dataclass(frozen=True)
class KinematicPoint:
    """A (hbar*omega, hbar*c*k) point in eV, restricted to the evanescent sector."""

    omega: float
    k: float

    def __post_init__(self):
        if self.omega < 0 or self.k < 0:
            raise InvalidParameterError("omega and k must be non-negative")
        if self.k < self.omega:
            raise DomainError("evanescent sector requires k >= omega")


def matsubara_energy(l: int, temperature: float, units: UnitSystem = DEFAULT_UNITS) -> float:
    """Return the l-th Matsubara energy 2*pi*k_B*T*l in eV."""
    if temperature <= 0:
        raise InvalidParameterError(f"temperature must be positive, got {temperature}")
    if l < 0:
        raise InvalidParameterError(f"Matsubara index must be non-negative, got {l}")
    return 2.0 * math.pi * units.boltzmann * temperature * l


def q_imaginary(xi: float, k: float) -> float:
    """Imaginary-axis wave number sqrt(k^2 + xi^2), all in eV."""
    if xi < 0 or k < 0:
        raise InvalidParameterError("xi and k must be non-negative")
    return math.hypot(xi, k)


def q_evanescent(omega: float, k: float) -> float:
    """Evanescent decay constant sqrt(k^2 - omega^2) in eV; requires k >= omega."""
    if omega < 0 or k < 0:
        raise InvalidParameterError("omega and k must be non-negative")
    if k < omega:
        raise DomainError("propagating-wave sector: k < omega")
    return math.sqrt((k - omega) * (k + omega))


def plasmonic_p(omega: float, k: float, fermi_velocity_ratio: float = FERMI_VELOCITY_RATIO) -> float:
    """Plasmonic continuation variable sqrt(omega^2 - r^2 k^2) in eV.

    Defined for omega >= r*k, i.e. on the plasmonic side of the Dirac cone.
    """
    rk = fermi_velocity_ratio * k
    if omega < rk:
        raise DomainError("plasmonic variable requires omega >= v_F*k")
    return math.sqrt((omega - rk) * (omega + rk))


def largek_qtilde_gamma(
    omega: float, k: float, fermi_velocity_ratio: float = FERMI_VELOCITY_RATIO
) -> tuple[float, float]:
    """Return (sqrt(r^2 k^2 - omega^2), omega / sqrt(r^2 k^2 - omega^2)).

    Defined strictly inside the large-wavevector sector v_F*k > omega; at the
    boundary the second component diverges, so equality raises.
    """
    rk = fermi_velocity_ratio * k
    if rk <= omega:
        raise DomainError("large-k sector requires v_F*k > omega")
    qt = math.sqrt((rk - omega) * (rk + omega))
    return qt, omega / qt
