"""Phase-space quantization of hydrogen-like atoms on elliptical orbits.

The radial action integral of a bound Coulomb orbit is evaluated by four
independent routes (direct substitution, polar-angle integration, the
time/virial average, and contour residues), the quantization condition is
inverted for the energy levels, and the spectroscopic quantities built on
them are exposed through a library API and the ``sommerfeld`` CLI.
"""

__version__ = "0.1.0"

from . import errors
from .actions import (
    METHODS,
    ActionResult,
    all_methods,
    angular_action,
    radial_action,
    radial_action_closed,
    radial_action_direct,
    radial_action_theta,
    radial_action_time,
)
from .constants import (
    ATOMIC_SPEED_OF_LIGHT,
    PhysicalConstants,
    fine_structure_constant,
    load_constants_file,
    make_unit_system,
    parse_constants_text,
)
from .orbit import (
    OrbitGeometry,
    TimeSample,
    circular_energy,
    ellipse_from_energy,
    kepler_position,
    orbital_period,
    radial_momentum,
    radius_at_angle,
    sample_trajectory,
    turning_points,
)
from .quadrature import (
    QuadratureResult,
    TrigIntegralParams,
    integrate_adaptive,
    real_line_pole_integral,
    trig_integral_closed,
    trig_integral_numeric,
)
from .quantize import (
    EnergyLevel,
    QuantumNumbers,
    bohr_energy,
    correspondence_ratio,
    degenerate_states,
    energy_closed,
    energy_numeric,
)
from .residue import (
    BranchFunctionSpec,
    ResidueReport,
    branch_f,
    cut_integral,
    radial_action_residue,
    residue_at_infinity_analytic,
    residue_at_infinity_numeric,
    residue_at_zero_analytic,
    residue_at_zero_numeric,
)
from .spectrum import (
    SERIES_BASE,
    SpectralLine,
    bohr_radius,
    check_z_limit,
    rydberg_energy,
    series,
    transition,
)
from .verification import Check, run_verification

__all__ = [
    "ATOMIC_SPEED_OF_LIGHT",
    "ActionResult",
    "BranchFunctionSpec",
    "Check",
    "EnergyLevel",
    "METHODS",
    "OrbitGeometry",
    "PhysicalConstants",
    "QuadratureResult",
    "QuantumNumbers",
    "ResidueReport",
    "SERIES_BASE",
    "SpectralLine",
    "TimeSample",
    "TrigIntegralParams",
    "all_methods",
    "angular_action",
    "bohr_energy",
    "bohr_radius",
    "branch_f",
    "check_z_limit",
    "circular_energy",
    "correspondence_ratio",
    "cut_integral",
    "degenerate_states",
    "ellipse_from_energy",
    "energy_closed",
    "energy_numeric",
    "errors",
    "fine_structure_constant",
    "integrate_adaptive",
    "kepler_position",
    "load_constants_file",
    "make_unit_system",
    "orbital_period",
    "parse_constants_text",
    "radial_action",
    "radial_action_closed",
    "radial_action_direct",
    "radial_action_residue",
    "radial_action_theta",
    "radial_action_time",
    "radial_momentum",
    "radius_at_angle",
    "real_line_pole_integral",
    "residue_at_infinity_analytic",
    "residue_at_infinity_numeric",
    "residue_at_zero_analytic",
    "residue_at_zero_numeric",
    "run_verification",
    "rydberg_energy",
    "sample_trajectory",
    "series",
    "transition",
    "trig_integral_closed",
    "trig_integral_numeric",
    "turning_points",
]
