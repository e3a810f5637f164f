"""Command-line interface: levels, action, orbit, spectrum, verify.

All computation happens in atomic units (or in the record supplied via
``--constants`` / the SOMMERFELD_CONSTANTS environment variable); the
``--units`` flag converts at the presentation layer only.  Output is a
fixed-format table, RFC-style CSV, or a single JSON document with ``meta``
and ``rows``; identical invocations produce byte-identical csv/json.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 domain/physics error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__, actions, quantize, spectrum
from .constants import load_constants_file, make_unit_system
from .errors import SommerfeldError, ValidationError
from .orbit import ellipse_from_energy, sample_trajectory
from .verification import run_verification

# Exact SI definition of the electron volt; presentation only.
_EV_IN_JOULES = 1.602176634e-19

_FORMATS = ("table", "csv", "json")
_UNITS = ("atomic", "si", "ev")


def format_number(x) -> str:
    """12 significant digits; scientific notation outside [1e-3, 1e6)."""
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if not isinstance(x, float):
        return str(x)
    if x != x:
        return "nan"
    if x == 0.0:
        return "0"
    if abs(x) < 1e-3 or abs(x) >= 1e6:
        return f"{x:.11e}"
    return f"{x:.12g}"


def _conversions(units: str) -> dict[str, tuple[float, str]]:
    """Factor and unit label per dimension for one presentation mode."""
    if units == "atomic":
        return {
            "energy": (1.0, "hartree"),
            "length": (1.0, "bohr"),
            "time": (1.0, "au"),
            "frequency": (1.0, "1/au"),
            "velocity": (1.0, "bohr/au"),
            "angular_velocity": (1.0, "rad/au"),
            "action": (1.0, "hbar"),
            "angle": (1.0, "rad"),
            "dimensionless": (1.0, ""),
        }
    si = make_unit_system("si")
    hartree = si.mass_electron * si.e_squared**2 / si.hbar**2
    bohr = si.hbar**2 / (si.mass_electron * si.e_squared)
    atomic_time = si.hbar / hartree
    if units == "si":
        return {
            "energy": (hartree, "J"),
            "length": (bohr, "m"),
            "time": (atomic_time, "s"),
            "frequency": (1.0 / atomic_time, "Hz"),
            "velocity": (bohr / atomic_time, "m/s"),
            "angular_velocity": (1.0 / atomic_time, "rad/s"),
            "action": (si.hbar, "J*s"),
            "angle": (1.0, "rad"),
            "dimensionless": (1.0, ""),
        }
    return {
        "energy": (hartree / _EV_IN_JOULES, "eV"),
        "length": (bohr * 1e9, "nm"),
        "time": (atomic_time, "s"),
        "frequency": (1.0 / atomic_time, "Hz"),
        "velocity": (bohr / atomic_time, "m/s"),
        "angular_velocity": (1.0 / atomic_time, "rad/s"),
        "action": (si.hbar, "J*s"),
        "angle": (1.0, "rad"),
        "dimensionless": (1.0, ""),
    }


def _render(fmt: str, meta: dict, columns: list[str], rows: list[dict], footer: list[str], stream) -> None:
    if fmt == "json":
        json.dump({"meta": meta, "rows": rows}, stream, indent=2)
        stream.write("\n")
        return
    if fmt == "csv":
        for line in meta.get("header_lines", []):
            stream.write(f"# {line}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_number(row.get(col, "")) for col in columns])
        for line in footer:
            stream.write(f"# {line}\n")
        return
    # table
    for line in meta.get("header_lines", []):
        stream.write(line + "\n")
    if rows:
        rendered = [[format_number(row.get(col, "")) for col in columns] for row in rows]
        widths = [max(len(col), *(len(r[i]) for r in rendered)) for i, col in enumerate(columns)]
        stream.write("  ".join(col.rjust(widths[i]) for i, col in enumerate(columns)) + "\n")
        for r in rendered:
            stream.write("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(r)) + "\n")
    else:
        stream.write("(no rows)\n")
    for line in footer:
        stream.write(line + "\n")


def _resolve_constants(args, parser):
    path = getattr(args, "constants", None) or os.environ.get("SOMMERFELD_CONSTANTS")
    if path:
        if args.units != "atomic":
            parser.error("--units conversion assumes atomic-unit computation; "
                         "drop --units or the constants override")
        return make_unit_system("custom", load_constants_file(path))
    return make_unit_system("atomic")


def _base_meta(args, command: str, conv) -> dict:
    return {
        "generator": "sommerfeld",
        "version": __version__,
        "command": command,
        "units": {dim: label for dim, (factor, label) in conv.items() if label},
    }


def cmd_levels(args, parser) -> int:
    if args.n_max < 1:
        parser.error("--n-max must be >= 1")
    c = _resolve_constants(args, parser)
    conv = _conversions(args.units)
    energy_f, _ = conv["energy"]
    length_f, _ = conv["length"]
    action_f, _ = conv["action"]

    columns = ["n_r", "n_theta", "n", "energy_closed", "energy_numeric",
               "rel_deviation", "angular_momentum", "eccentricity", "semi_major"]
    rows = []
    for n in range(1, args.n_max + 1):
        for qn in quantize.degenerate_states(n):
            closed = quantize.energy_closed(qn, args.Z, c)
            numeric = quantize.energy_numeric(qn, args.Z, c)
            g = ellipse_from_energy(closed.energy, closed.angular_momentum, args.Z, c)
            rows.append({
                "n_r": qn.n_r,
                "n_theta": qn.n_theta,
                "n": qn.n,
                "energy_closed": closed.energy * energy_f,
                "energy_numeric": numeric.energy * energy_f,
                "rel_deviation": abs(numeric.energy - closed.energy) / abs(closed.energy),
                "angular_momentum": closed.angular_momentum * action_f,
                "eccentricity": g.eccentricity,
                "semi_major": g.semi_major * length_f,
            })

    meta = _base_meta(args, "levels", conv)
    meta["parameters"] = {"Z": args.Z, "n_max": args.n_max}
    meta["z_diagnostic"] = spectrum.check_z_limit(args.Z, c)
    _render(args.format, meta, columns, rows, [], sys.stdout)
    return 0


def cmd_action(args, parser) -> int:
    c = _resolve_constants(args, parser)
    conv = _conversions(args.units)
    action_f, _ = conv["action"]

    methods = list(actions.METHODS) if args.method == "all" else [args.method]
    columns = ["method", "value", "value_over_h", "error_estimate"]
    rows = []
    results = {}
    for method in methods:
        if args.method == "all":
            computed = actions.all_methods(args.E, args.L, args.Z, c, args.tol)
            for name in actions.METHODS:
                if name in computed:
                    results[name] = computed[name]
            break
        results[method] = actions.radial_action(args.E, args.L, args.Z, c, method, args.tol)
    for name, result in results.items():
        rows.append({
            "method": name,
            "value": result.value * action_f,
            "value_over_h": result.value / c.planck_h,
            "error_estimate": result.error_estimate * action_f,
        })

    footer = []
    meta = _base_meta(args, "action", conv)
    meta["parameters"] = {"Z": args.Z, "E": args.E, "L": args.L,
                          "method": args.method, "tol": args.tol}
    if len(rows) > 1:
        values = [r["value"] for r in rows]
        scale = max(abs(v) for v in values)
        deviation = (max(values) - min(values)) / scale if scale else 0.0
        meta["max_relative_deviation"] = deviation
        if args.format == "csv":
            rows.append({"method": "max-relative-deviation", "value": deviation,
                         "value_over_h": "", "error_estimate": ""})
        else:
            footer.append(f"max relative deviation = {format_number(deviation)}")
    _render(args.format, meta, columns, rows, footer, sys.stdout)
    return 0


def cmd_orbit(args, parser) -> int:
    if args.ntheta < 1 or args.nr < 0:
        parser.error("need --nr >= 0 and --ntheta >= 1")
    if args.samples < 2:
        parser.error("--samples must be >= 2")
    c = _resolve_constants(args, parser)
    conv = _conversions(args.units)
    energy_f, energy_u = conv["energy"]
    length_f, length_u = conv["length"]
    time_f, time_u = conv["time"]
    action_f, action_u = conv["action"]
    velocity_f, _ = conv["velocity"]
    angvel_f, _ = conv["angular_velocity"]

    qn = quantize.QuantumNumbers(args.nr, args.ntheta)
    level = quantize.energy_closed(qn, args.Z, c)
    g = ellipse_from_energy(level.energy, level.angular_momentum, args.Z, c)
    samples = sample_trajectory(g, args.samples, c)

    header_lines = [
        f"E = {format_number(g.energy * energy_f)} {energy_u}".rstrip(),
        f"L = {format_number(g.angular_momentum * action_f)} {action_u}".rstrip(),
        f"a = {format_number(g.semi_major * length_f)} {length_u}".rstrip(),
        f"eccentricity = {format_number(g.eccentricity)}",
        f"r_min = {format_number(g.r_min * length_f)} {length_u}".rstrip(),
        f"r_max = {format_number(g.r_max * length_f)} {length_u}".rstrip(),
        f"T = {format_number(g.period * time_f)} {time_u}".rstrip(),
    ]
    columns = ["t", "r", "theta", "r_dot", "theta_dot", "kinetic", "potential"]
    rows = [{
        "t": s.t * time_f,
        "r": s.r * length_f,
        "theta": s.theta,
        "r_dot": s.r_dot * velocity_f,
        "theta_dot": s.theta_dot * angvel_f,
        "kinetic": s.kinetic * energy_f,
        "potential": s.potential * energy_f,
    } for s in samples]

    meta = _base_meta(args, "orbit", conv)
    meta["parameters"] = {"Z": args.Z, "n_r": args.nr, "n_theta": args.ntheta,
                          "samples": args.samples}
    meta["geometry"] = {
        "energy": g.energy * energy_f,
        "angular_momentum": g.angular_momentum * action_f,
        "semi_major": g.semi_major * length_f,
        "eccentricity": g.eccentricity,
        "r_min": g.r_min * length_f,
        "r_max": g.r_max * length_f,
        "period": g.period * time_f,
    }
    if args.format != "json":
        meta["header_lines"] = header_lines
    _render(args.format, meta, columns, rows, [], sys.stdout)
    meta.pop("header_lines", None)
    return 0


def cmd_spectrum(args, parser) -> int:
    if args.n_upper_max < 1:
        parser.error("--n-upper-max must be >= 1")
    c = _resolve_constants(args, parser)
    conv = _conversions(args.units)
    energy_f, _ = conv["energy"]
    length_f, _ = conv["length"]
    freq_f, _ = conv["frequency"]

    lines = spectrum.series(args.series, args.n_upper_max, args.Z, c)
    columns = ["n_upper", "n_lower", "delta_energy", "frequency", "wavelength"]
    rows = [{
        "n_upper": line.n_upper,
        "n_lower": line.n_lower,
        "delta_energy": line.delta_energy * energy_f,
        "frequency": line.frequency * freq_f,
        "wavelength": line.wavelength * length_f,
    } for line in lines]

    meta = _base_meta(args, "spectrum", conv)
    meta["parameters"] = {"series": args.series, "n_upper_max": args.n_upper_max, "Z": args.Z}
    meta["z_diagnostic"] = spectrum.check_z_limit(args.Z, c)
    _render(args.format, meta, columns, rows, [], sys.stdout)
    return 0


def cmd_verify(args, parser) -> int:
    if not (1e-15 <= args.tol <= 1e-2):
        parser.error("--tol must lie in [1e-15, 1e-2]")
    checks = run_verification(args.tol)
    columns = ["check", "residual", "tolerance", "status"]
    rows = [{
        "check": check.name,
        "residual": check.residual,
        "tolerance": check.tolerance,
        "status": "pass" if check.passed else "FAIL",
    } for check in checks]
    n_failed = sum(1 for check in checks if not check.passed)

    conv = _conversions(args.units)
    meta = _base_meta(args, "verify", conv)
    meta["tolerances"] = {"default": args.tol}
    meta["checks"] = len(checks)
    meta["failed"] = n_failed
    footer = [f"{len(checks)} checks, {n_failed} failed"]
    _render(args.format, meta, columns, rows, footer if args.format == "table" else [], sys.stdout)
    return 0 if n_failed == 0 else 1


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=_FORMATS, default="table")
    sub.add_argument("--units", choices=_UNITS, default="atomic")
    sub.add_argument("--constants", metavar="FILE", default=None,
                     help="constants file overriding the computation units "
                          "(fallback: SOMMERFELD_CONSTANTS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sommerfeld",
        description="Phase-space quantization of hydrogen-like atoms on elliptical orbits.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("levels", help="energy-level table with orbit geometry")
    p.add_argument("--Z", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_levels)

    p = subparsers.add_parser("action", help="radial action of one orbit by any route")
    p.add_argument("--Z", type=int, default=1)
    p.add_argument("--E", type=float, required=True)
    p.add_argument("--L", type=float, required=True)
    p.add_argument("--method", choices=(*actions.METHODS, "all"), default="direct")
    p.add_argument("--tol", type=float, default=1e-10)
    _add_common(p)
    p.set_defaults(func=cmd_action)

    p = subparsers.add_parser("orbit", help="orbit geometry plus a sampled trajectory")
    p.add_argument("--Z", type=int, default=1)
    p.add_argument("--nr", type=int, required=True)
    p.add_argument("--ntheta", type=int, required=True)
    p.add_argument("--samples", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=cmd_orbit)

    p = subparsers.add_parser("spectrum", help="spectral lines of a named series")
    p.add_argument("--series", choices=sorted(spectrum.SERIES_BASE), required=True)
    p.add_argument("--n-upper-max", type=int, required=True)
    p.add_argument("--Z", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = subparsers.add_parser("verify", help="run the full cross-verification suite")
    p.add_argument("--tol", type=float, default=1e-8)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SommerfeldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
