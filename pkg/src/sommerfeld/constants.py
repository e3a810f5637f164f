"""Unit systems and the physical constants every formula consumes.

Downstream modules are unit-system agnostic: they read hbar, the electron
mass, the Gaussian-convention squared charge (Coulomb energy -Z e^2 / r)
and the speed of light from a :class:`PhysicalConstants` record and hold
no numeric literals of their own.  Hartree atomic units are the
computational default; the SI record exists for presentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ValidationError

# Dimensionless speed of light in hartree atomic units; its reciprocal is
# the fine-structure constant the atomic system is seeded with.
ATOMIC_SPEED_OF_LIGHT = 137.035999

UNIT_SYSTEM_KINDS = ("atomic", "si", "custom")
FIELD_NAMES = ("hbar", "mass_electron", "e_squared", "speed_of_light")

_BUNDLED_SI_FILE = "si_constants.txt"


@dataclass(frozen=True)
class PhysicalConstants:
    """One consistent set of fundamental constants.

    Attributes
    ----------
    hbar : float
        Reduced quantum of action.
    mass_electron : float
        Electron mass (override it to emulate a reduced mass).
    e_squared : float
        Squared elementary charge in the Gaussian convention: it has
        dimensions of energy times length and the Coulomb energy of the
        electron at radius r around Z protons is -Z * e_squared / r.
    speed_of_light : float
        Speed of light in the same unit system.
    planck_h : float
        2 pi hbar, stored for convenience.  Filled in automatically when
        not supplied.
    """

    hbar: float
    mass_electron: float
    e_squared: float
    speed_of_light: float
    planck_h: float = 0.0

    def __post_init__(self):
        if self.planck_h == 0.0:
            object.__setattr__(self, "planck_h", 2.0 * math.pi * self.hbar)
        for name in (*FIELD_NAMES, "planck_h"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
                raise ValidationError(f"{name} must be a positive finite number, got {value!r}")
        if abs(self.planck_h - 2.0 * math.pi * self.hbar) > 1e-15 * self.planck_h:
            raise ValidationError("planck_h must equal 2*pi*hbar")


def parse_constants_text(text: str) -> dict[str, float]:
    """Parse the ``name = value # unit`` constants format.

    Blank lines and lines starting with ``#`` are ignored; anything after
    ``#`` on a data line is a unit annotation.  Unknown or duplicate names
    are rejected.
    """
    record: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, value_text = line.partition("=")
        if not sep:
            raise ValidationError(f"line {lineno}: expected 'name = value', got {raw!r}")
        name = name.strip()
        if name not in FIELD_NAMES:
            raise ValidationError(f"line {lineno}: unknown constant {name!r}")
        if name in record:
            raise ValidationError(f"line {lineno}: duplicate constant {name!r}")
        try:
            record[name] = float(value_text.strip())
        except ValueError as exc:
            raise ValidationError(f"line {lineno}: bad numeric value {value_text.strip()!r}") from exc
    return record


def load_constants_file(path) -> dict[str, float]:
    """Read a constants file and require all four names to be present."""
    with open(path, "r", encoding="utf-8") as handle:
        record = parse_constants_text(handle.read())
    missing = [name for name in FIELD_NAMES if name not in record]
    if missing:
        raise ValidationError(f"constants file {path!s} is missing {', '.join(missing)}")
    return record


@lru_cache(maxsize=1)
def _bundled_si_record() -> dict[str, float]:
    text = resources.files(__package__).joinpath("data", _BUNDLED_SI_FILE).read_text("utf-8")
    record = parse_constants_text(text)
    missing = [name for name in FIELD_NAMES if name not in record]
    if missing:
        raise ValidationError(f"bundled SI constants file is missing {', '.join(missing)}")
    return record


def make_unit_system(kind: str, overrides: dict[str, float] | None = None) -> PhysicalConstants:
    """Build a constants record for one of the supported unit systems.

    ``atomic`` gives hbar = m = e^2 = 1 with the dimensionless speed of
    light; ``si`` reads the bundled constants file; ``custom`` requires a
    complete record in ``overrides``.  For atomic and si, ``overrides``
    may replace individual values (the usual case is a reduced electron
    mass).  Deterministic: equal inputs give bit-identical outputs.
    """
    if kind not in UNIT_SYSTEM_KINDS:
        raise ValidationError(f"unknown unit system {kind!r}; expected one of {UNIT_SYSTEM_KINDS}")
    overrides = dict(overrides) if overrides else {}
    for name, value in overrides.items():
        if name not in FIELD_NAMES:
            raise ValidationError(f"unknown constant {name!r} in overrides")
        if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
            raise ValidationError(f"override {name} must be a positive finite number, got {value!r}")

    if kind == "atomic":
        base = {
            "hbar": 1.0,
            "mass_electron": 1.0,
            "e_squared": 1.0,
            "speed_of_light": ATOMIC_SPEED_OF_LIGHT,
        }
    elif kind == "si":
        base = dict(_bundled_si_record())
    else:
        missing = [name for name in FIELD_NAMES if name not in overrides]
        if missing:
            raise ValidationError(f"custom unit system requires {', '.join(missing)}")
        base = {}

    base.update(overrides)
    return PhysicalConstants(**base)


def fine_structure_constant(c: PhysicalConstants) -> float:
    """Dimensionless e^2 / (hbar c)."""
    return c.e_squared / (c.hbar * c.speed_of_light)
