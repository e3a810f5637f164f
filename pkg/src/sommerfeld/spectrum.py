"""Spectroscopic outputs: Rydberg scale, Bohr radius, transition lines.

Wavelengths are vacuum values and no reduced-mass correction is applied;
callers wanting one override ``mass_electron`` in their constants record.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import PhysicalConstants, fine_structure_constant
from .errors import DomainError
from .orbit import _validate_charge
from .quantize import bohr_energy

SERIES_BASE = {"lyman": 1, "balmer": 2, "paschen": 3, "brackett": 4}


@dataclass(frozen=True)
class SpectralLine:
    """One emission line of a hydrogen-like atom."""

    n_upper: int
    n_lower: int
    delta_energy: float
    frequency: float
    wavelength: float
    z: int

    def __post_init__(self):
        if not self.n_upper > self.n_lower >= 1:
            raise DomainError("need n_upper > n_lower >= 1")
        if not self.delta_energy > 0:
            raise DomainError("delta_energy must be positive")


def rydberg_energy(z: int, c: PhysicalConstants) -> float:
    """Level-energy scale Z^2 m e^4 / (2 hbar^2): one rydberg, in energy
    units of the supplied constants record."""
    z = _validate_charge(z)
    return z**2 * c.mass_electron * c.e_squared**2 / (2.0 * c.hbar**2)


def bohr_radius(z: int, c: PhysicalConstants) -> float:
    """Radius hbar^2 / (Z m e^2) of the innermost circular orbit."""
    z = _validate_charge(z)
    return c.hbar**2 / (z * c.mass_electron * c.e_squared)


def transition(n_upper: int, n_lower: int, z: int, c: PhysicalConstants) -> SpectralLine:
    """Emission line for the jump n_upper -> n_lower.

    The emitted frequency is delta_energy / h and the vacuum wavelength
    c / frequency.
    """
    if not (isinstance(n_upper, int) and isinstance(n_lower, int) and n_upper > n_lower >= 1):
        raise DomainError(f"need integer n_upper > n_lower >= 1, got ({n_upper!r}, {n_lower!r})")
    z = _validate_charge(z)
    delta = bohr_energy(n_upper, z, c) - bohr_energy(n_lower, z, c)
    frequency = delta / c.planck_h
    wavelength = c.speed_of_light / frequency
    return SpectralLine(n_upper, n_lower, delta, frequency, wavelength, z)


def series(name: str, n_upper_max: int, z: int, c: PhysicalConstants) -> list[SpectralLine]:
    """All lines of a named series with n_upper up to ``n_upper_max``.

    An upper bound at or below the series base yields an empty list.
    """
    if name not in SERIES_BASE:
        raise DomainError(f"unknown series {name!r}; expected one of {sorted(SERIES_BASE)}")
    if not isinstance(n_upper_max, int):
        raise DomainError(f"n_upper_max must be an integer, got {n_upper_max!r}")
    base = SERIES_BASE[name]
    return [transition(n, base, z, c) for n in range(base + 1, n_upper_max + 1)]


def check_z_limit(z: int, c: PhysicalConstants) -> str:
    """'warning' when Z reaches the inverse fine-structure constant
    (computed from the constants record, not hard-coded), else 'ok'."""
    z = _validate_charge(z)
    return "warning" if z >= 1.0 / fine_structure_constant(c) else "ok"
