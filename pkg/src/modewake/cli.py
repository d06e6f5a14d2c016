"""Parameter-sweep command line front end.

Evaluates the requested field methods on a (y/H, M) grid and writes a
deterministic CSV or JSON table, one row per grid point, numbers with 12
significant digits.  Grid points at M = 1 are physically singular for the
exact and Macdonald routes and are recorded as empty cells rather than
nudged; the Airy column is empty for M <= 1.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 at least one cell
failed to converge (the table is still written).
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass, field as dc_field

import numpy as np

from .dispersion import Mode, SourceGeometry, Stratification, mode_dispersion
from .field import (
    CriticalSpeed,
    FieldRequest,
    eta_airy,
    eta_auto,
    eta_exact,
    eta_macdonald,
)
from .quadrature import QuadratureConfig
from .specfun import DomainError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NOT_CONVERGED = 4

_METHOD_ORDER = ("exact", "macdonald", "airy", "auto")
_M_GAP_TOL = 1e-9


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    N: float
    H: float
    n: int
    z: float
    z0: float
    y_over_h: tuple
    m_min: float
    m_max: float
    points: int
    methods: tuple
    fmt: str
    out: str | None
    rel_tol: float
    compat_k0_arg: bool


@dataclass
class SweepRow:
    y_over_h: float
    M: float
    values: dict = dc_field(default_factory=dict)  # method -> float or None
    exact_err: float | None = None
    failed: bool = False


def _parse_float_list(text: str, flag: str):
    try:
        vals = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"{flag}: expected a comma-separated list of numbers, got {text!r}")
    if not vals:
        raise UsageError(f"{flag}: empty list")
    return vals


def _parse_mach(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--mach: expected min:max:points, got {text!r}")
    try:
        m_min, m_max = float(parts[0]), float(parts[1])
        points = int(parts[2])
    except ValueError:
        raise UsageError(f"--mach: could not parse {text!r}")
    return m_min, m_max, points


def _build_parser():
    p = argparse.ArgumentParser(
        prog="modewake",
        description="Sweep the per-mode traverse elevation over Mach number "
        "and tabulate the exact integral against its asymptotics.",
    )
    p.add_argument("--config", metavar="PATH", help="key=value file mirroring the flags")
    p.add_argument("--n-freq", type=float, default=None, help="buoyancy frequency N (default 1)")
    p.add_argument("--depth", type=float, default=None, help="channel depth H (default pi)")
    p.add_argument("--mode", type=int, default=None, help="mode index n >= 1 (default 1)")
    p.add_argument("--z", type=float, default=None, help="observer depth (default -H/4)")
    p.add_argument("--z0", type=float, default=None, help="source depth (default -H/4)")
    p.add_argument("--y-over-h", default=None, metavar="LIST",
                   help="comma list of traverse offsets in units of H (default 1,2,3)")
    p.add_argument("--mach", default=None, metavar="MIN:MAX:POINTS",
                   help="inclusive Mach grid (default 0.5:3.0:126)")
    p.add_argument("--methods", default=None, metavar="LIST",
                   help="comma subset of exact,macdonald,airy,auto "
                        "(default exact,macdonald,airy)")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--rel-tol", type=float, default=None,
                   help="relative tolerance of the exact quadrature (default 1e-8)")
    p.add_argument("--compat-paper-k0-arg", action="store_true",
                   help="use the alternative K0 argument b*y*eps^2 instead of "
                        "the default y*eps^2/(2b)")
    p.add_argument("--fig1", action="store_true",
                   help="shorthand for the three-panel comparison dataset: "
                        "y/H in {1,2,3}, M from 0.5 to 3")
    return p


def _read_config(path: str):
    """Flat key=value config file; keys are the long flags without dashes
    prefix.  Returns an argv-style token list."""
    tokens = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            flag = "--" + key
            if key in ("compat-paper-k0-arg", "fig1"):
                if value.lower() in ("1", "true", "yes"):
                    tokens.append(flag)
                elif value.lower() not in ("0", "false", "no"):
                    raise UsageError(f"{path}:{lineno}: {key} must be a boolean")
            else:
                tokens.extend([flag, value])
    return tokens


def parse_config(argv) -> SweepSpec:
    """Resolve flags (plus optional config file) into a validated SweepSpec."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.config:
        try:
            config_tokens = _read_config(ns.config)
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}")
        # command-line flags win: parse config first, then argv on top
        ns = parser.parse_args(config_tokens + list(argv))

    H = ns.depth if ns.depth is not None else math.pi
    n = ns.mode if ns.mode is not None else 1
    spec = dict(
        N=ns.n_freq if ns.n_freq is not None else 1.0,
        H=H,
        n=n,
        z=ns.z if ns.z is not None else -H / 4.0,
        z0=ns.z0 if ns.z0 is not None else -H / 4.0,
        rel_tol=ns.rel_tol if ns.rel_tol is not None else 1e-8,
        fmt=ns.fmt,
        out=ns.out,
        compat_k0_arg=ns.compat_paper_k0_arg,
    )

    # --fig1 is the documented name for the default grid; explicit flags win
    y_text = ns.y_over_h if ns.y_over_h is not None else "1,2,3"
    mach_text = ns.mach if ns.mach is not None else "0.5:3.0:126"
    spec["y_over_h"] = _parse_float_list(y_text, "--y-over-h")
    spec["m_min"], spec["m_max"], spec["points"] = _parse_mach(mach_text)

    methods_text = ns.methods if ns.methods is not None else "exact,macdonald,airy"
    methods = tuple(tok.strip() for tok in methods_text.split(","))
    for m in methods:
        if m not in _METHOD_ORDER:
            raise UsageError(f"--methods: unknown method {m!r}")
    spec["methods"] = tuple(m for m in _METHOD_ORDER if m in methods)

    # validation
    if spec["N"] <= 0:
        raise UsageError("--n-freq must be positive")
    if spec["H"] <= 0:
        raise UsageError("--depth must be positive")
    if spec["n"] < 1:
        raise UsageError("--mode must be >= 1")
    if not (-spec["H"] < spec["z"] < 0) or not (-spec["H"] < spec["z0"] < 0):
        raise UsageError("--z and --z0 must lie strictly inside (-H, 0)")
    if any(y <= 0 for y in spec["y_over_h"]):
        raise UsageError("--y-over-h values must be positive")
    if spec["m_min"] <= 0:
        raise UsageError("--mach: minimum must be positive")
    if spec["m_max"] <= spec["m_min"]:
        raise UsageError("--mach: maximum must exceed minimum")
    if spec["points"] < 2:
        raise UsageError("--mach: need at least 2 points")
    if spec["rel_tol"] <= 0:
        raise UsageError("--rel-tol must be positive")
    return SweepSpec(**spec)


def _evaluate_cell(spec: SweepSpec, method: str, y: float, M: float, c: float,
                   cfg: QuadratureConfig):
    """Returns (value or None, error_estimate or None, failed)."""
    if method in ("exact", "macdonald", "auto") and abs(M - 1.0) < _M_GAP_TOL:
        return None, None, False
    if method == "airy" and M <= 1.0 + _M_GAP_TOL:
        return None, None, False
    geometry = SourceGeometry(V=M * c, z0=spec.z0, z=spec.z, y=y)
    req = FieldRequest(
        strat=Stratification(N=spec.N, H=spec.H),
        mode=Mode(spec.n),
        geometry=geometry,
        method=method,
        quad_cfg=cfg,
        compat_k0_arg=spec.compat_k0_arg,
    )
    evaluator = {
        "exact": eta_exact,
        "macdonald": eta_macdonald,
        "airy": eta_airy,
        "auto": eta_auto,
    }[method]
    try:
        ev = evaluator(req)
    except (CriticalSpeed, DomainError):
        return None, None, False
    if not ev.converged:
        return None, None, True
    return ev.value, ev.error_estimate, False


def run_sweep(spec: SweepSpec):
    """Evaluate every requested method at every grid point, ordered by
    (y_over_H, M)."""
    md = mode_dispersion(Stratification(N=spec.N, H=spec.H), Mode(spec.n))
    cfg = QuadratureConfig(rel_tol=spec.rel_tol)
    grid = np.linspace(spec.m_min, spec.m_max, spec.points)
    rows = []
    for y_over_h in spec.y_over_h:
        y = y_over_h * spec.H
        for M in grid:
            row = SweepRow(y_over_h=y_over_h, M=float(M))
            for method in spec.methods:
                value, err, failed = _evaluate_cell(spec, method, y, float(M), md.c, cfg)
                row.values[method] = value
                if method == "exact":
                    row.exact_err = err
                row.failed = row.failed or failed
            rows.append(row)
    return rows


def _fmt(v):
    return format(v, ".12g")


def _columns(spec: SweepSpec):
    cols = ["y_over_H", "M"]
    cols += [f"eta_{m}" for m in spec.methods]
    if "exact" in spec.methods:
        cols.append("exact_err")
    return cols


def _render_csv(rows, spec: SweepSpec) -> str:
    lines = [",".join(_columns(spec))]
    for row in rows:
        cells = [_fmt(row.y_over_h), _fmt(row.M)]
        for m in spec.methods:
            v = row.values.get(m)
            cells.append("" if v is None else _fmt(v))
        if "exact" in spec.methods:
            cells.append("" if row.exact_err is None else _fmt(row.exact_err))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _render_json(rows, spec: SweepSpec) -> str:
    cols = _columns(spec)
    out = []
    for row in rows:
        rec = {"y_over_H": float(_fmt(row.y_over_h)), "M": float(_fmt(row.M))}
        for m in spec.methods:
            v = row.values.get(m)
            rec[f"eta_{m}"] = None if v is None else float(_fmt(v))
        if "exact" in spec.methods:
            rec["exact_err"] = None if row.exact_err is None else float(_fmt(row.exact_err))
        out.append({k: rec[k] for k in cols})
    return json.dumps(out, indent=2) + "\n"


def write_output(rows, spec: SweepSpec):
    text = _render_csv(rows, spec) if spec.fmt == "csv" else _render_json(rows, spec)
    if spec.out is None:
        sys.stdout.write(text)
    else:
        with open(spec.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        spec = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = run_sweep(spec)
    try:
        write_output(rows, spec)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if any(row.failed for row in rows):
        return EXIT_NOT_CONVERGED
    return EXIT_OK
