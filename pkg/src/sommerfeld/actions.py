"""Phase integrals of a bound Coulomb orbit, evaluated by independent routes.

The angular action is trivially 2 pi L.  The radial action

    J_r = 2 int_{r_min}^{r_max} dr sqrt(-L^2/r^2 + 2 Z m e^2 / r + 2 m E)

is evaluated four ways that must agree:

direct   substitute 1/r = mean + half-spread * sin(v), which maps the
         integral to 2L int_{-pi/2}^{pi/2} cos^2 v / (ep + sin v)^2 dv
         with ep = 1 / sqrt(1 + 2 m E (L / (Z m e^2))^2) > 1 and removes
         the inverse-square-root endpoint singularity entirely;
theta    integrate over the polar angle instead,
         J_r = L int_0^{2pi} sin^2 t / (ecc^-1 + cos t)^2 dt with the
         orbit eccentricity ecc < 1;
time     integrate twice the kinetic energy over one period (total action
         of both degrees of freedom) and subtract the angular part 2 pi L;
closed   the exact value 2 pi (Z m e^2 / sqrt(-2 m E) - L).

A fifth route by contour integration lives in the residue module.  The
two distinct integrand parameters are kept strictly apart: ``ep`` above is
always > 1 and is not the ellipse eccentricity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import PhysicalConstants
from .errors import DomainError, NumericalInconsistencyError
from .orbit import ellipse_from_energy, turning_points
from .quadrature import TrigIntegralParams, integrate_adaptive, trig_integral_numeric

METHODS = ("direct", "theta", "time", "residue", "closed")

# Below this eccentricity an orbit is treated as exactly circular: the
# radial action is zero and quadrature routes short-circuit.
_CIRCULAR_ECC = 1e-12

_VIRIAL_REL_TOL = 1e-6

DEFAULT_REL_TOL = 1e-10


@dataclass(frozen=True)
class ActionResult:
    """A phase-integral value, the route that produced it, and its error."""

    value: float
    method: str
    error_estimate: float

    def __post_init__(self):
        if self.method not in METHODS:
            raise DomainError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.error_estimate < 0:
            raise DomainError("error_estimate must be non-negative")


def angular_action(angular_momentum: float) -> float:
    """Closed angular phase integral: exactly 2 pi L."""
    if angular_momentum <= 0:
        raise DomainError(f"angular momentum must be positive, got {angular_momentum!r}")
    return 2.0 * math.pi * angular_momentum


def radial_action_direct(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
    rel_tol: float = DEFAULT_REL_TOL,
) -> ActionResult:
    """Radial action by the sine substitution in 1/r.

    The substituted integrand cos^2 v / (ep + sin v)^2 is smooth on
    [-pi/2, pi/2]; the raw radial integrand is never touched.
    """
    turning_points(energy, angular_momentum, z, c)  # domain validation
    m, e2 = c.mass_electron, c.e_squared
    L = angular_momentum
    x = 1.0 + 2.0 * m * energy * (L / (z * m * e2)) ** 2
    if x <= _CIRCULAR_ECC**2:
        return ActionResult(0.0, "direct", 0.0)
    ep = 1.0 / math.sqrt(x)

    def integrand(v):
        cos_v = np.cos(v)
        return cos_v * cos_v / (ep + np.sin(v)) ** 2

    q = integrate_adaptive(integrand, -0.5 * math.pi, 0.5 * math.pi, rel_tol)
    return ActionResult(2.0 * L * q.value, "direct", 2.0 * L * q.error_estimate)


def radial_action_theta(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
    rel_tol: float = DEFAULT_REL_TOL,
) -> ActionResult:
    """Radial action integrated over the polar angle.

    Uses (1/r)(dr/dtheta) = ecc sin t / (1 + ecc cos t) for the ellipse,
    giving J_r = L int_0^{2pi} sin^2 t / (ecc^-1 + cos t)^2 dt.  Circular
    orbits short-circuit to zero (the integrand amplitude vanishes while
    ecc^-1 diverges, so the limit is taken explicitly).
    """
    g = ellipse_from_energy(energy, angular_momentum, z, c)
    if g.eccentricity < _CIRCULAR_ECC:
        return ActionResult(0.0, "theta", 0.0)
    params = TrigIntegralParams(1.0 / g.eccentricity, 2)
    q = trig_integral_numeric(params, rel_tol)
    L = angular_momentum
    return ActionResult(L * q.value, "theta", L * q.error_estimate)


def radial_action_time(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
    rel_tol: float = DEFAULT_REL_TOL,
) -> ActionResult:
    """Radial action via the time integral of twice the kinetic energy.

    The total action of both degrees of freedom over one period is
    int_0^T 2K dt; in the eccentric anomaly u this becomes
    int_0^{2pi} 2 K(u) (T / 2pi)(1 - ecc cos u) du with
    K(u) = E + Z e^2 / r(u).  The radial part is the total minus 2 pi L.
    The virial identity <K> = -E is checked on the way; a residual above
    1e-6 relative raises ``NumericalInconsistencyError``.
    """
    g = ellipse_from_energy(energy, angular_momentum, z, c)
    e2 = c.e_squared
    a, ecc, T = g.semi_major, g.eccentricity, g.period
    L = angular_momentum

    def integrand(u):
        jac = 1.0 - ecc * np.cos(u)
        kinetic = energy + z * e2 / (a * jac)
        return 2.0 * kinetic * (T / (2.0 * math.pi)) * jac

    q = integrate_adaptive(integrand, 0.0, 2.0 * math.pi, rel_tol)
    mean_kinetic = q.value / (2.0 * T)
    if abs(mean_kinetic + energy) > _VIRIAL_REL_TOL * abs(energy):
        raise NumericalInconsistencyError(
            f"virial check failed: <K> = {mean_kinetic!r} but -E = {-energy!r}"
        )
    value = q.value - 2.0 * math.pi * L
    if ecc < _CIRCULAR_ECC:
        value = 0.0
    return ActionResult(value, "time", q.error_estimate)


def radial_action_closed(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
) -> ActionResult:
    """Exact radial action 2 pi (Z m e^2 / sqrt(-2 m E) - L)."""
    turning_points(energy, angular_momentum, z, c)  # domain validation
    m, e2 = c.mass_electron, c.e_squared
    value = 2.0 * math.pi * (z * m * e2 / math.sqrt(-2.0 * m * energy) - angular_momentum)
    # Non-negative in exact arithmetic for any admissible (E, L); clip the
    # one-ulp negatives the circular case can produce.
    return ActionResult(max(value, 0.0), "closed", 0.0)


def radial_action(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
    method: str = "direct",
    rel_tol: float = DEFAULT_REL_TOL,
) -> ActionResult:
    """Dispatch to one of the five radial-action routes."""
    if method == "direct":
        return radial_action_direct(energy, angular_momentum, z, c, rel_tol)
    if method == "theta":
        return radial_action_theta(energy, angular_momentum, z, c, rel_tol)
    if method == "time":
        return radial_action_time(energy, angular_momentum, z, c, rel_tol)
    if method == "closed":
        return radial_action_closed(energy, angular_momentum, z, c)
    if method == "residue":
        from .residue import radial_action_residue

        return radial_action_residue(energy, angular_momentum, z, c)
    raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")


def all_methods(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
    rel_tol: float = DEFAULT_REL_TOL,
) -> dict[str, ActionResult]:
    """Radial action by every route, keyed by method name.

    The residue route is omitted for circular orbits, where the branch
    cut it integrates around degenerates to a point.
    """
    results = {
        "direct": radial_action_direct(energy, angular_momentum, z, c, rel_tol),
        "theta": radial_action_theta(energy, angular_momentum, z, c, rel_tol),
        "time": radial_action_time(energy, angular_momentum, z, c, rel_tol),
    }
    g = ellipse_from_energy(energy, angular_momentum, z, c)
    if g.eccentricity > 1e-9:
        from .residue import radial_action_residue

        results["residue"] = radial_action_residue(energy, angular_momentum, z, c)
    results["closed"] = radial_action_closed(energy, angular_momentum, z, c)
    return results
