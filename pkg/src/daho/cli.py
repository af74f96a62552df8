"""Command-line front end.

Four commands:

    spectrum      quasi-exact levels over (n, l) sweeps: omega, B0, beta, E
    bfield        quantized magnetic-field values over (n, l)
    wavefunction  sampled radial profile R(r) of one selected level
    validate      cross-validation suite with per-check pass/fail report

Configuration comes from flat ``key = value`` files (--config) with CLI
flags taking precedence; --emit-config writes back the merged effective
configuration, which re-reads to identical outputs. Tables are emitted as
CSV (with a single '#' header line carrying the full parameter set) or as
a JSON array of row objects; floats are printed at 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InconsistencyError, NoRealRootsError
from .heun import HeunParams, as_polynomial, evaluate_R, series_coefficients
from .model import dimensionless_scales, effective_mass, x_of_r
from .oracle import default_grid
from .quantize import frequency_condition, magnetic_field_quantized, solve_levels
from .validate import run_checks

__all__ = ["main", "RunConfig"]

_DEFAULTS = {
    "b0": 0.0,
    "alpha": 1.0,
    "mu": 1.0,
    "k": 0.0,
    "n": "1",
    "l": "0",
    "npts": 8192,
    "refine": True,
    "format": "csv",
    "samples": 512,
}

_CONFIG_KEYS = (
    "m", "mbar", "b0", "alpha", "mu", "omega_rot", "k", "n", "l",
    "rmax", "npts", "refine", "format", "out", "samples", "level",
)


@dataclass(frozen=True)
class RunConfig:
    """Merged configuration for one command invocation."""

    command: str
    m: float | None
    mbar: float | None
    b0: float
    alpha: float
    mu: float
    omega_rot: float | None
    k: float
    n_list: tuple[int, ...]
    l_list: tuple[int, ...]
    r_max: float | None
    n_pts: int
    refine: bool
    fmt: str
    out: str | None
    samples: int
    level: str | None

    def effective_m(self) -> float:
        if self.m is not None:
            return self.m
        return effective_mass(self.mbar, self.alpha, self.b0)

    def check(self) -> None:
        if self.fmt not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.fmt!r}")
        if self.command == "validate":
            return
        if (self.m is None) == (self.mbar is None):
            raise DomainError("exactly one of m (--m) and mbar (--mbar) must be given")
        if self.omega_rot is None:
            raise DomainError("the rotation rate omega_rot (--omega-rot) is required")
        if not self.n_list or not self.l_list:
            raise DomainError("sweep lists n and l must be non-empty")
        if self.samples < 2:
            raise DomainError(f"samples must be at least 2, got {self.samples}")


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise DomainError(f"expected a boolean, got {text!r}")


def _parse_int_list(text: str) -> tuple[int, ...]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    try:
        return tuple(int(piece) for piece in items)
    except ValueError as exc:
        raise DomainError(f"expected a comma-separated integer list, got {text!r}") from exc


def load_config(path: str) -> dict[str, str]:
    """Parse a flat ``key = value`` file; '#' starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = value.strip()
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge CLI flags over config-file values over defaults."""
    file_values = load_config(args.config) if args.config else {}

    def pick(key: str, cast):
        cli_value = getattr(args, key, None)
        if cli_value is not None:
            return cli_value
        if key in file_values:
            return cast(file_values[key])
        return _DEFAULTS.get(key)

    config = RunConfig(
        command=args.command,
        m=pick("m", float),
        mbar=pick("mbar", float),
        b0=pick("b0", float),
        alpha=pick("alpha", float),
        mu=pick("mu", float),
        omega_rot=pick("omega_rot", float),
        k=pick("k", float),
        n_list=_parse_int_list(str(pick("n", str))),
        l_list=_parse_int_list(str(pick("l", str))),
        r_max=pick("rmax", float),
        n_pts=int(pick("npts", int)),
        refine=pick("refine", _parse_bool),
        fmt=str(pick("format", str)),
        out=pick("out", str),
        samples=int(pick("samples", int)),
        level=pick("level", str),
    )
    config.check()
    return config


def emit_config(config: RunConfig) -> str:
    """Flat-text rendering of the effective configuration."""
    values = {
        "m": config.m,
        "mbar": config.mbar,
        "b0": config.b0,
        "alpha": config.alpha,
        "mu": config.mu,
        "omega_rot": config.omega_rot,
        "k": config.k,
        "n": ",".join(str(v) for v in config.n_list),
        "l": ",".join(str(v) for v in config.l_list),
        "rmax": config.r_max,
        "npts": config.n_pts,
        "refine": "true" if config.refine else "false",
        "format": config.fmt,
        "out": config.out,
        "samples": config.samples,
        "level": config.level,
    }
    lines = []
    for key in _CONFIG_KEYS:
        value = values[key]
        if value is None:
            continue
        if isinstance(value, float):
            value = repr(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.12g}"
    return str(value)


def _json_value(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.12g}")
    return value


def render_table(fmt: str, header: dict, columns: list[str], rows: list[tuple]) -> str:
    if fmt == "json":
        payload = [
            {name: _json_value(value) for name, value in zip(columns, row)} for row in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    head = " ".join(f"{key}={_format_value(value)}" for key, value in header.items())
    lines = [f"# {head}", ",".join(columns)]
    lines.extend(",".join(_format_value(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def _physical_header(config: RunConfig) -> dict:
    header = {"command": config.command}
    if config.m is not None:
        header["m"] = config.m
    else:
        header.update({"mbar": config.mbar, "b0": config.b0})
    header.update(
        {
            "alpha": config.alpha,
            "mu": config.mu,
            "omega_rot": config.omega_rot,
            "k": config.k,
            "n": ",".join(str(v) for v in config.n_list),
            "l": ",".join(str(v) for v in config.l_list),
        }
    )
    return header


def cmd_spectrum(config: RunConfig):
    """Rows (n, l, k, omega, B0, beta, branch, nodes, energy), sorted."""
    m = config.effective_m()
    rows = []
    for n in sorted(set(config.n_list)):
        for l in sorted(set(config.l_list)):
            for level in solve_levels(n, l, config.k, config.omega_rot, m, config.alpha, config.mu):
                rows.append(
                    (
                        level.n,
                        level.l,
                        level.k,
                        level.omega_nl,
                        level.B0_nl,
                        level.beta_root,
                        level.branch,
                        level.nodes,
                        level.energy,
                    )
                )
    columns = ["n", "l", "k", "omega", "B0", "beta", "branch", "nodes", "energy"]
    return _physical_header(config), columns, rows


def cmd_bfield(config: RunConfig):
    """Rows (n, l, B0) over the sweep."""
    m = config.effective_m()
    rows = []
    for n in sorted(set(config.n_list)):
        for l in sorted(set(config.l_list)):
            rows.append((n, l, magnetic_field_quantized(n, l, config.omega_rot, m, config.alpha, config.mu)))
    columns = ["n", "l", "B0"]
    return _physical_header(config), columns, rows


def cmd_wavefunction(config: RunConfig):
    """Rows (r, R) for the level picked by --level as 'n,l,branch'."""
    m = config.effective_m()
    available = []
    chosen = None
    for n in sorted(set(config.n_list)):
        for l in sorted(set(config.l_list)):
            for level in solve_levels(n, l, config.k, config.omega_rot, m, config.alpha, config.mu):
                tag = f"{level.n},{level.l},{level.branch}"
                available.append(tag)
                if config.level is not None and tag == config.level.replace(" ", ""):
                    chosen = level
    if chosen is None:
        raise DomainError(
            f"unknown level selector {config.level!r}; available: {' '.join(available)}"
        )
    omega = chosen.omega_nl
    lambda_dim, betabar = dimensionless_scales(config.omega_rot, m, omega, chosen.beta_root)
    params = HeunParams(l=chosen.l, lambda_dim=lambda_dim, betabar=betabar)
    series = series_coefficients(params, N=chosen.n + 3)
    poly = as_polynomial(series)
    if poly is None:
        raise InconsistencyError("selected level does not terminate; cannot sample")
    r_max = config.r_max if config.r_max else default_grid(m, omega).r_max
    radii = np.linspace(0.0, r_max, config.samples)
    rows = []
    for r in radii:
        x = float(x_of_r(r, m, omega))
        rows.append((float(r), evaluate_R(poly, x, lambda_dim, chosen.l).value))
    header = _physical_header(config)
    header.update({"level": f"{chosen.n},{chosen.l},{chosen.branch}", "beta": chosen.beta_root,
                   "omega": omega, "rmax": r_max, "samples": config.samples})
    columns = ["r", "R"]
    return header, columns, rows


def cmd_validate(config: RunConfig, only=None):
    """Cross-validation report rows; returncode 1 when any check fails."""
    results = run_checks(
        n_pts=config.n_pts, r_max=config.r_max, refine=config.refine, only=only
    )
    rows = [
        (res.name, res.measured, res.tolerance, res.passed, res.seconds, res.note)
        for res in results
    ]
    header = {
        "command": "validate",
        "npts": config.n_pts,
        "rmax": config.r_max if config.r_max else "auto",
        "refine": config.refine,
    }
    columns = ["check", "measured", "tolerance", "passed", "seconds", "note"]
    code = 0 if all(res.passed for res in results) else 1
    return header, columns, rows, code


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", help="flat key = value config file")
    shared.add_argument("--emit-config", metavar="PATH", help="write the merged effective config")
    shared.add_argument("--m", type=float, help="effective mass m (exclusive with --mbar)")
    shared.add_argument("--mbar", type=float, help="bare mass; m = mbar + alpha*b0^2")
    shared.add_argument("--b0", type=float, help="field used only for the mass shift with --mbar")
    shared.add_argument("--alpha", type=float, help="polarizability (default 1)")
    shared.add_argument("--mu", type=float, help="charge-density scale (default 1)")
    shared.add_argument("--omega-rot", type=float, dest="omega_rot", help="rotation rate Omega")
    shared.add_argument("--k", type=float, help="axial wavenumber (default 0)")
    shared.add_argument("--n", help="radial mode list, e.g. 1 or 1,2")
    shared.add_argument("--l", help="angular momentum list, e.g. 0 or -2,-1,0 (use --l=-2,... )")
    shared.add_argument("--rmax", type=float, help="grid cutoff (default: auto from m, omega)")
    shared.add_argument("--npts", type=int, help="grid points (default 8192)")
    shared.add_argument(
        "--refine", action=argparse.BooleanOptionalAction, default=None,
        help="Richardson-extrapolate eigenvalues over (h, h/2) (default on)",
    )
    shared.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    shared.add_argument("--out", help="output path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="daho",
        description="Quasi-exact levels of the sextic radial oscillator for a "
        "polarizable neutral particle in crossed fields, with an independent "
        "finite-difference cross-check.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("spectrum", parents=[shared], help="quasi-exact energy levels")
    commands.add_parser("bfield", parents=[shared], help="quantized magnetic-field values")
    wavefunction = commands.add_parser(
        "wavefunction", parents=[shared], help="sampled radial profile of one level"
    )
    wavefunction.add_argument("--level", help="level selector 'n,l,branch', e.g. 1,0,-")
    wavefunction.add_argument("--samples", type=int, help="number of radii (default 512)")
    validate = commands.add_parser("validate", parents=[shared], help="cross-validation suite")
    validate.add_argument("--only", help="comma-separated subset of checks to run")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "level"):
        args.level = None
    if not hasattr(args, "samples"):
        args.samples = None
    try:
        config = resolve_config(args)
        if args.emit_config:
            with open(args.emit_config, "w", encoding="utf-8") as handle:
                handle.write(emit_config(config))
        code = 0
        if config.command == "spectrum":
            header, columns, rows = cmd_spectrum(config)
        elif config.command == "bfield":
            header, columns, rows = cmd_bfield(config)
        elif config.command == "wavefunction":
            header, columns, rows = cmd_wavefunction(config)
        else:
            only = None
            if getattr(args, "only", None):
                only = [piece.strip() for piece in args.only.split(",") if piece.strip()]
            header, columns, rows, code = cmd_validate(config, only=only)
        text = render_table(config.fmt, header, columns, rows)
        if config.out:
            with open(config.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return code
    except (DomainError, InconsistencyError, NoRealRootsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
