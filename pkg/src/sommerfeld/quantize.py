"""Energy levels from the quantized phase integrals.

The angular integral fixes L = n_theta hbar; demanding that the radial
action equal n_r h then pins the energy to

    E = - m Z^2 e^4 / (2 hbar^2 (n_r + n_theta)^2),

so only the principal number n = n_r + n_theta matters and every
partition of n is degenerate.  ``energy_numeric`` recovers the same
levels without the closed form by root-finding on any of the radial
action routes.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import actions
from .constants import PhysicalConstants, fine_structure_constant
from .errors import ConvergenceError, DomainError, NuclearChargeWarning
from .orbit import _validate_charge, circular_energy, ellipse_from_energy

_LEVEL_METHODS = ("closed", "numeric")

_MAX_ROOT_ITER = 200


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial and angular quantum numbers (n_r >= 0, n_theta >= 1).

    n_theta = 0 would force L = 0, a straight-line orbit through the
    nucleus with no turning-point structure, so it is excluded at the
    type level; n = n_r + n_theta is then automatically >= 1.
    """

    n_r: int
    n_theta: int

    def __post_init__(self):
        if not isinstance(self.n_r, int) or self.n_r < 0:
            raise DomainError(f"n_r must be an integer >= 0, got {self.n_r!r}")
        if not isinstance(self.n_theta, int) or self.n_theta < 1:
            raise DomainError(f"n_theta must be an integer >= 1, got {self.n_theta!r}")

    @property
    def n(self) -> int:
        """Principal quantum number n_r + n_theta."""
        return self.n_r + self.n_theta


@dataclass(frozen=True)
class EnergyLevel:
    """A quantized level: energy < 0 and L = n_theta hbar."""

    qn: QuantumNumbers
    energy: float
    angular_momentum: float
    method: str

    def __post_init__(self):
        if self.method not in _LEVEL_METHODS:
            raise DomainError(f"method must be one of {_LEVEL_METHODS}, got {self.method!r}")
        if self.energy >= 0:
            raise DomainError("level energies must be negative")


def _warn_if_z_extreme(z: int, c: PhysicalConstants) -> None:
    alpha = fine_structure_constant(c)
    if z >= 1.0 / alpha:
        warnings.warn(
            f"Z = {z} is at or beyond the inverse fine-structure constant "
            f"{1.0 / alpha:.3f}; the nonrelativistic levels are unreliable there",
            NuclearChargeWarning,
            stacklevel=3,
        )


def energy_closed(qn: QuantumNumbers, z: int, c: PhysicalConstants) -> EnergyLevel:
    """Closed-form level E = -m Z^2 e^4 / (2 hbar^2 n^2) with L = n_theta hbar."""
    z = _validate_charge(z)
    _warn_if_z_extreme(z, c)
    m, e2, hbar = c.mass_electron, c.e_squared, c.hbar
    energy = -m * (z * e2) ** 2 / (2.0 * hbar**2 * qn.n**2)
    return EnergyLevel(qn, energy, qn.n_theta * hbar, "closed")


def bohr_energy(n: int, z: int, c: PhysicalConstants) -> float:
    """Level energy -Z^2 m e^4 / (2 hbar^2 n^2) for principal number n.

    Equals ``energy_closed`` for every partition of n by construction.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"principal quantum number must be an integer >= 1, got {n!r}")
    z = _validate_charge(z)
    m, e2, hbar = c.mass_electron, c.e_squared, c.hbar
    return -m * (z * e2) ** 2 / (2.0 * hbar**2 * n**2)


def degenerate_states(n: int) -> list[QuantumNumbers]:
    """All (n_r, n_theta) partitions of n, ordered by ascending n_r."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"principal quantum number must be an integer >= 1, got {n!r}")
    return [QuantumNumbers(n_r, n - n_r) for n_r in range(n)]


def energy_numeric(
    qn: QuantumNumbers,
    z: int,
    c: PhysicalConstants,
    rel_tol: float = 1e-10,
    method: str = "direct",
) -> EnergyLevel:
    """Invert the radial quantization condition J_r(E) = n_r h numerically.

    J_r is strictly increasing in E on (E_circ, 0), so the root is
    bracketed and refined by bisection with secant acceleration until the
    bracket width falls below ``rel_tol`` relative.  n_r = 0 means a
    circular orbit and short-circuits to E_circ exactly.
    """
    z = _validate_charge(z)
    if method not in actions.METHODS:
        raise DomainError(f"unknown method {method!r}; expected one of {actions.METHODS}")
    if not (rel_tol >= 1e-12):
        raise DomainError(f"rel_tol must be >= 1e-12, got {rel_tol!r}")
    _warn_if_z_extreme(z, c)

    L = qn.n_theta * c.hbar
    e_circ = circular_energy(L, z, c)
    if qn.n_r == 0:
        return EnergyLevel(qn, e_circ, L, "numeric")

    target = qn.n_r * c.planck_h
    quad_tol = min(max(rel_tol * 1e-2, 2e-14), 1e-3)

    def gap(energy: float) -> float:
        return actions.radial_action(energy, L, z, c, method=method, rel_tol=quad_tol).value - target

    lo = e_circ * (1.0 - 1e-12)
    g_lo = gap(lo)
    hi = 0.5 * e_circ
    g_hi = gap(hi)
    for _ in range(64):
        if g_hi >= 0.0:
            break
        lo, g_lo = hi, g_hi
        hi *= 0.5
        g_hi = gap(hi)
    else:
        raise ConvergenceError("could not bracket the quantization root")

    prev = (lo, g_lo)
    cur = (hi, g_hi)
    for _ in range(_MAX_ROOT_ITER):
        if abs(hi - lo) <= rel_tol * abs(lo):
            break
        # Secant candidate from the two most recent evaluations; fall back
        # to the midpoint when it degenerates or leaves the bracket.
        denom = cur[1] - prev[1]
        candidate = cur[0] - cur[1] * (cur[0] - prev[0]) / denom if denom != 0.0 else math.nan
        if not (math.isfinite(candidate) and lo < candidate < hi):
            candidate = 0.5 * (lo + hi)
        g_candidate = gap(candidate)
        prev, cur = cur, (candidate, g_candidate)
        if g_candidate < 0.0:
            lo, g_lo = candidate, g_candidate
        else:
            hi, g_hi = candidate, g_candidate
    else:
        raise ConvergenceError("quantization root refinement did not converge")

    return EnergyLevel(qn, 0.5 * (lo + hi), L, "numeric")


def correspondence_ratio(n: int, z: int, c: PhysicalConstants) -> float:
    """Transition frequency (E_{n+1} - E_n)/h over the orbital frequency
    1/T of the n-th circular orbit.

    Approaches one from below as n grows; the exact value is
    n (2n + 1) / (2 (n + 1)^2).
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"principal quantum number must be an integer >= 1, got {n!r}")
    delta_e = bohr_energy(n + 1, z, c) - bohr_energy(n, z, c)
    level = energy_closed(QuantumNumbers(0, n), z, c)
    geometry = ellipse_from_energy(level.energy, level.angular_momentum, z, c)
    return (delta_e / c.planck_h) * geometry.period
