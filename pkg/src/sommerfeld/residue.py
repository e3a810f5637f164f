"""Contour-integration route to the radial action.

The dimensionless integral

    I = 2 int_{r_min}^{r_max} dr sqrt((1/r_min - 1/r)(1/r - 1/r_max))

equals the integral of a branch function f(z) around its cut
[r_min, r_max].  Off the cut f is analytic except at z = 0, so by pushing
the contour outward I reduces to residues at zero and infinity:

    f(z) = i exp(i (phi_min + phi_max) / 2)
             * sqrt(|z - r_min| |z - r_max|) / (z sqrt(r_min r_max)),

with phi_min = arg(z - r_min) and phi_max = arg(z - r_max) each taken in
[0, 2pi).  That phase choice cuts each factor along the positive real
axis from its branch point, which composes to the single cut
[r_min, r_max]: f tends to -sqrt(...) from above the cut and +sqrt(...)
from below.  The residues are

    Res_{z=0} f = -i                    (independent of the geometry),
    Res_{z=inf} f = i (r_min + r_max) / (2 sqrt(r_min r_max)),

and I = -2 pi i (Res_inf + Res_0).  Multiplying by L gives the radial
action, the same value the closed form produces.

Residues are also computed numerically: the trapezoid rule on a circle is
spectrally accurate for analytic periodic integrands, so a few hundred
nodes reach 1e-10 absolute error.  The residue at infinity is evaluated
as Res_{w=0}[-(1/w^2) f(1/w)].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .actions import ActionResult
from .constants import PhysicalConstants
from .errors import DegenerateCutError, DomainError
from .orbit import turning_points

_TWO_PI = 2.0 * math.pi

DEFAULT_N_POINTS = 256

# Orbits rounder than this have no usable cut; callers are pointed at the
# closed form instead.
_MIN_ECCENTRICITY = 1e-9


@dataclass(frozen=True)
class BranchFunctionSpec:
    """Branch-cut geometry: the cut runs along [r_min, r_max], strictly."""

    r_min: float
    r_max: float

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise DomainError(
                f"need 0 < r_min < r_max strictly, got ({self.r_min!r}, {self.r_max!r})"
            )


@dataclass(frozen=True)
class ResidueReport:
    """Residues at zero and infinity plus the resulting cut integral."""

    res_zero: complex
    res_infinity: complex
    cut_integral: float
    method: str

    def __post_init__(self):
        if self.method not in ("numeric", "analytic"):
            raise DomainError(f"method must be 'numeric' or 'analytic', got {self.method!r}")


def _half_phase_factor(z: np.ndarray, spec: BranchFunctionSpec) -> np.ndarray:
    """exp(i (phi_min + phi_max) / 2) with each phase in [0, 2pi)."""
    phi_min = np.mod(np.angle(z - spec.r_min), _TWO_PI)
    phi_max = np.mod(np.angle(z - spec.r_max), _TWO_PI)
    return np.exp(0.5j * (phi_min + phi_max))


def _branch_values(z: np.ndarray, spec: BranchFunctionSpec) -> np.ndarray:
    modulus = np.sqrt(np.abs(z - spec.r_min) * np.abs(z - spec.r_max))
    return 1j * _half_phase_factor(z, spec) * modulus / (z * math.sqrt(spec.r_min * spec.r_max))


def branch_f(z: complex, spec: BranchFunctionSpec) -> complex:
    """The branch function at one point off the cut.

    Raises ``DomainError`` at z = 0 and on the closed segment
    [r_min, r_max] of the real axis, where f is singular or discontinuous.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("f is singular at z = 0")
    if z.imag == 0.0 and spec.r_min <= z.real <= spec.r_max:
        raise DomainError(f"z = {z!r} lies on the cut [{spec.r_min!r}, {spec.r_max!r}]")
    return complex(_branch_values(np.array([z]), spec)[0])


def _validate_n_points(n_points: int) -> int:
    if not isinstance(n_points, int) or n_points < 64:
        raise DomainError(f"n_points must be an integer >= 64, got {n_points!r}")
    return n_points


def _circle_residue(values_times_z: np.ndarray) -> complex:
    # (1/2pi i) * closed contour integral on |z| = rho reduces to the mean
    # of z f(z) over equispaced nodes.
    return complex(np.mean(values_times_z))


def residue_at_zero_numeric(
    spec: BranchFunctionSpec,
    n_points: int = DEFAULT_N_POINTS,
    contour_radius: float | None = None,
) -> complex:
    """Residue of f at zero by the trapezoid rule on |z| = r_min / 2.

    Converges spectrally to the exact value -i; by 256 nodes the error is
    far below 1e-10 for any cut geometry.
    """
    n_points = _validate_n_points(n_points)
    rho = 0.5 * spec.r_min if contour_radius is None else contour_radius
    if not (0.0 < rho < spec.r_min):
        raise DomainError(f"contour radius must lie in (0, r_min), got {rho!r}")
    z = rho * np.exp(2j * math.pi * np.arange(n_points) / n_points)
    return _circle_residue(_branch_values(z, spec) * z)


def residue_at_infinity_numeric(
    spec: BranchFunctionSpec,
    n_points: int = DEFAULT_N_POINTS,
    contour_radius: float | None = None,
) -> complex:
    """Residue of f at infinity, i.e. Res_{w=0}[-(1/w^2) f(1/w)].

    Evaluated on the circle |w| = 1/(10 r_max), well inside the image of
    the cut; the exact value is i (r_min + r_max) / (2 sqrt(r_min r_max)).
    """
    n_points = _validate_n_points(n_points)
    rho = 1.0 / (10.0 * spec.r_max) if contour_radius is None else contour_radius
    if not (0.0 < rho < 1.0 / spec.r_max):
        raise DomainError(f"contour radius must lie in (0, 1/r_max), got {rho!r}")
    w = rho * np.exp(2j * math.pi * np.arange(n_points) / n_points)
    g = -_branch_values(1.0 / w, spec) / (w * w)
    return _circle_residue(g * w)


def residue_at_zero_analytic() -> complex:
    """Exact residue at zero: z f(z) -> i exp(i pi) = -i."""
    return -1j


def residue_at_infinity_analytic(spec: BranchFunctionSpec) -> complex:
    """Exact residue at infinity: i (r_min + r_max) / (2 sqrt(r_min r_max))."""
    return 1j * (spec.r_min + spec.r_max) / (2.0 * math.sqrt(spec.r_min * spec.r_max))


def cut_integral(
    spec: BranchFunctionSpec,
    mode: str = "analytic",
    n_points: int = DEFAULT_N_POINTS,
) -> ResidueReport:
    """The cut integral I = -2 pi i (Res_inf + Res_0).

    Analytic mode applies the closed residues, giving
    I = 2 pi [(r_min + r_max) / (2 sqrt(r_min r_max)) - 1]; numeric mode
    combines the trapezoid-rule residues and keeps the real part (the
    imaginary part vanishes to roundoff because both residues are purely
    imaginary).
    """
    if mode == "analytic":
        res_zero = residue_at_zero_analytic()
        res_infinity = residue_at_infinity_analytic(spec)
    elif mode == "numeric":
        res_zero = residue_at_zero_numeric(spec, n_points)
        res_infinity = residue_at_infinity_numeric(spec, n_points)
    else:
        raise DomainError(f"mode must be 'analytic' or 'numeric', got {mode!r}")
    total = (-2j * math.pi * (res_infinity + res_zero)).real
    return ResidueReport(res_zero, res_infinity, total, mode)


def radial_action_residue(
    energy: float,
    angular_momentum: float,
    z: int,
    c: PhysicalConstants,
    n_points: int = DEFAULT_N_POINTS,
) -> ActionResult:
    """Radial action L * I from the numeric contour residues.

    The error estimate is the change in L * I when the node count is
    halved.  Requires a strictly elliptical orbit; near-circular input
    raises ``DegenerateCutError`` (the closed form handles that limit).
    """
    r_min, r_max = turning_points(energy, angular_momentum, z, c)
    ecc = (r_max - r_min) / (r_max + r_min)
    if ecc <= _MIN_ECCENTRICITY:
        raise DegenerateCutError(
            f"orbit with eccentricity {ecc!r} has a degenerate cut; "
            "use radial_action_closed for (near-)circular orbits"
        )
    spec = BranchFunctionSpec(r_min, r_max)
    full = cut_integral(spec, "numeric", n_points)
    half = cut_integral(spec, "numeric", max(n_points // 2, 64))
    L = angular_momentum
    value = L * full.cut_integral
    error = abs(L * (full.cut_integral - half.cut_integral))
    return ActionResult(value, "residue", error)
