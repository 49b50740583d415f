"""Scenario runner: every computation as a ``nonstatic`` subcommand.

Writes CSV or JSON datasets plus a manifest JSON recording all resolved
inputs, so any output can be regenerated byte-identically from its
manifest via ``--config``.  Exit codes: 0 success, 2 usage error,
3 validation-suite failure, 4 numerical-accuracy failure.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__, core, observables, validation, wavefunctions, wigner
from .errors import AccuracyError, CapabilityError, ParameterError, UndefinedStatisticsError

SUBJECTS = (
    "density-q",
    "density-p",
    "fock-density",
    "energies",
    "fluctuations",
    "wigner",
    "ellipse",
    "mandel-q",
    "nonstaticity",
    "validate",
)

CSV_HEADERS = {
    "density-q": ("t", "q", "density"),
    "density-p": ("t", "p", "density"),
    "fock-density": ("t", "q", "density"),
    "energies": ("t", "Ek", "Ep", "Etot"),
    "fluctuations": ("t", "dq", "dp", "product"),
    "wigner": ("t", "q", "p", "W"),
    "ellipse": ("t", "center_q", "center_p", "angle", "r_major", "r_minor"),
    "mandel-q": ("t", "Q"),
    "nonstaticity": ("t", "f", "fdot", "zeta", "T"),
}

_FLAG_OF = {
    "c1": "--c1", "c2": "--c2", "c3_sign": "--c3-sign", "omega": "--omega",
    "epsilon": "--epsilon", "hbar": "--hbar", "a0": "--a0", "theta": "--theta",
    "phi": "--phi", "t0": "--t0", "t_from": "--t-from", "t_to": "--t-to",
    "nt": "--nt", "qmin": "--qmin", "qmax": "--qmax", "nq": "--nq",
    "pmin": "--pmin", "pmax": "--pmax", "np": "--np", "fock_n": "--fock-n",
    "out": "--out", "format": "--format", "tol_scale": "--tol-scale",
    "Q0": "--a0", "theta0": "--theta",
}


class UsageError(Exception):
    def __init__(self, message, flag=None):
        super().__init__(message)
        self.flag = flag


@dataclass
class Scenario:
    """Fully resolved inputs for one run."""

    subject: str
    params: core.ModelParams
    a0: float
    theta: float
    t_from: float
    t_to: float
    nt: int
    qmin: float
    qmax: float
    nq: int
    pmin: float
    pmax: float
    np: int
    fock_n: int
    out: str
    format: str
    tol_scale: float

    @property
    def times(self):
        return np.linspace(self.t_from, self.t_to, self.nt)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        match = re.search(r"argument ([^\s:]+)", message) or re.search(r"(--[\w-]+)", message)
        raise UsageError(message, flag=match.group(1) if match else None)


def build_parser():
    parser = _Parser(prog="nonstatic", description=__doc__, add_help=True)
    parser.add_argument("subject", choices=SUBJECTS)
    parser.add_argument("--config", help="JSON config (or a previous manifest); flags override it")
    parser.add_argument("--c1", type=float)
    parser.add_argument("--c2", type=float)
    parser.add_argument("--c3-sign", dest="c3_sign", choices=("+", "-"))
    parser.add_argument("--omega", type=float)
    parser.add_argument("--epsilon", type=float)
    parser.add_argument("--hbar", type=float)
    parser.add_argument("--a0", type=float)
    parser.add_argument("--theta", type=float)
    parser.add_argument("--phi", type=float)
    parser.add_argument("--t0", type=float)
    parser.add_argument("--t-from", dest="t_from", type=float)
    parser.add_argument("--t-to", dest="t_to", type=float)
    parser.add_argument("--nt", type=int)
    parser.add_argument("--qmin", type=float)
    parser.add_argument("--qmax", type=float)
    parser.add_argument("--nq", type=int)
    parser.add_argument("--pmin", type=float)
    parser.add_argument("--pmax", type=float)
    parser.add_argument("--np", type=int)
    parser.add_argument("--fock-n", dest="fock_n", type=int)
    parser.add_argument("--out")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--tol-scale", dest="tol_scale", type=float)
    return parser


def _load_config(path):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}", flag="--config")
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object", flag="--config")
    if "scenario" in data and isinstance(data["scenario"], dict):
        data = data["scenario"]
    known = set(_FLAG_OF) | {"subject"}
    for key in data:
        if key not in known:
            raise UsageError(f"unknown config key {key!r}", flag="--config")
    return data


def parse_scenario(argv):
    """Parse flags plus optional config file into a resolved Scenario.

    Flags override the config file; anything left unresolved takes the
    figure-style defaults (omega = a0 = hbar = epsilon = 1, t0 = 0,
    phi = theta = 0, positive c3, static envelope).
    """
    args = build_parser().parse_args(argv)
    merged = {}
    if args.config:
        merged.update(_load_config(args.config))
    for key in _FLAG_OF:
        if key in ("Q0", "theta0"):
            continue
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value

    def pick(key, default):
        return merged.get(key, default)

    sign_token = pick("c3_sign", "+")
    if sign_token not in ("+", "-", 1, -1):
        raise UsageError(f"--c3-sign must be '+' or '-', got {sign_token!r}", flag="--c3-sign")
    try:
        params = core.ModelParams(
            epsilon=float(pick("epsilon", 1.0)),
            omega=float(pick("omega", 1.0)),
            hbar=float(pick("hbar", 1.0)),
            c1=float(pick("c1", 1.0)),
            c2=float(pick("c2", 1.0)),
            c3_sign=1 if sign_token in ("+", 1) else -1,
            phi=float(pick("phi", 0.0)),
            t0=float(pick("t0", 0.0)),
        )
    except ParameterError as exc:
        raise UsageError(str(exc), flag=_FLAG_OF.get(exc.field, exc.field))

    a0 = float(pick("a0", 1.0))
    if a0 < 0:
        raise UsageError("--a0 must be >= 0", flag="--a0")
    theta = float(pick("theta", 0.0))
    t_from = float(pick("t_from", params.t0))
    t_to = float(pick("t_to", params.t0 + 2.0 * params.wave_period))
    subject = args.subject
    nt = int(pick("nt", 8 if subject == "wigner" else 201))
    if nt < 2:
        raise UsageError("--nt must be >= 2", flag="--nt")
    if not t_to > t_from:
        raise UsageError("--t-to must exceed --t-from", flag="--t-to")
    if t_from < params.t0:
        raise UsageError("--t-from must be >= t0 (the phase integral starts there)", flag="--t-from")

    fock_n = int(pick("fock_n", 0))
    if fock_n < 0:
        raise UsageError("--fock-n must be >= 0", flag="--fock-n")
    tol_scale = float(pick("tol_scale", 1.0))
    if tol_scale <= 0:
        raise UsageError("--tol-scale must be > 0", flag="--tol-scale")

    qmin, qmax = _axis_bounds(params, a0, "q", pick("qmin", None), pick("qmax", None),
                              subject, fock_n)
    pmin, pmax = _axis_bounds(params, a0, "p", pick("pmin", None), pick("pmax", None),
                              subject, fock_n)
    default_n = 301 if subject == "wigner" else 1601
    nq = int(pick("nq", default_n))
    npts = int(pick("np", default_n))
    if nq < 3 or npts < 3:
        raise UsageError("grid sample counts must be >= 3", flag="--nq")

    fmt = pick("format", "csv")
    if fmt not in ("csv", "json"):
        raise UsageError(f"--format must be csv or json, got {fmt!r}", flag="--format")
    default_out = "validate.json" if subject == "validate" else f"{subject}.{fmt}"
    out = str(pick("out", default_out))

    return Scenario(subject=subject, params=params, a0=a0, theta=theta,
                    t_from=t_from, t_to=t_to, nt=nt,
                    qmin=qmin, qmax=qmax, nq=nq, pmin=pmin, pmax=pmax, np=npts,
                    fock_n=fock_n, out=out, format=fmt, tol_scale=tol_scale)


def _axis_bounds(params, a0, axis, lo, hi, subject, fock_n):
    """Figure-style defaults +/-12, widened automatically for wide envelopes."""
    if lo is not None and hi is not None:
        lo, hi = float(lo), float(hi)
        if not hi > lo:
            raise UsageError(f"--{axis}max must exceed --{axis}min", flag=f"--{axis}max")
        return lo, hi
    if (lo is None) != (hi is None):
        raise UsageError(f"give both or neither of --{axis}min/--{axis}max", flag=f"--{axis}min")
    fmin, fmax = params.f_extrema()
    ew = params.epsilon * params.omega
    if axis == "q":
        centre = math.sqrt(2.0 * params.hbar * fmax / ew) * a0
        sigma = math.sqrt(params.hbar * fmax / (2.0 * ew))
        if subject == "fock-density":
            centre = math.sqrt((2.0 * fock_n + 1.0) * params.hbar * fmax / ew)
    else:
        centre = math.sqrt(2.0 * params.hbar * ew * fmax) * a0
        sigma = math.sqrt(params.hbar * ew * fmax / 2.0)
        if subject == "fock-density":
            centre = math.sqrt((2.0 * fock_n + 1.0) * params.hbar * ew * fmax)
    if subject == "wigner":
        half = centre + 6.0 * sigma
    else:
        half = max(12.0, centre + 8.0 * sigma)
    return -half, half


def _g17(x):
    return format(float(x), ".17g")


def _cell(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return _g17(x)


def _compute_rows(scenario):
    s = scenario
    params = s.params
    amp = core.amplitude(params, s.a0, s.theta, params.t0)
    rows = []
    if s.subject in ("density-q", "fock-density"):
        grid = wavefunctions.QuadratureGrid("q", s.qmin, s.qmax, s.nq)
        for t in s.times:
            if s.subject == "density-q":
                fld = wavefunctions.coherent_q(params, amp, grid, t)
            else:
                fld = wavefunctions.fock_q(params, s.fock_n, grid, t)
            dens = np.abs(fld.values) ** 2
            rows.extend((t, x, d) for x, d in zip(grid.points, dens))
    elif s.subject == "density-p":
        grid = wavefunctions.QuadratureGrid("p", s.pmin, s.pmax, s.np)
        for t in s.times:
            fld = wavefunctions.coherent_p(params, amp, grid, t)
            dens = np.abs(fld.values) ** 2
            rows.extend((t, x, d) for x, d in zip(grid.points, dens))
    elif s.subject == "energies":
        ek, ep, etot = observables.energies(params, amp, s.times)
        rows = list(zip(s.times, ek, ep, etot))
    elif s.subject == "fluctuations":
        dq, dp, product = observables.fluctuations(params, s.times)
        rows = list(zip(s.times, dq, dp, product))
    elif s.subject == "wigner":
        for t in s.times:
            grid = wigner.PhaseSpaceGrid(s.qmin, s.qmax, s.nq, s.pmin, s.pmax, s.np, t=t)
            result = wigner.wigner_closed(params, amp, grid)
            qpts, ppts = grid.q, grid.p
            for iq, qv in enumerate(qpts):
                rows.extend((t, qv, pv, result.values[iq, ip]) for ip, pv in enumerate(ppts))
    elif s.subject == "ellipse":
        for t, summary in zip(s.times, wigner.ellipse_track(params, amp, s.times)):
            rows.append((t, summary.center[0], summary.center[1], summary.angle,
                         summary.radii[0], summary.radii[1]))
    elif s.subject == "mandel-q":
        q = observables.mandel_q(params, amp, s.times)
        rows = list(zip(s.times, np.broadcast_to(q, s.times.shape)))
    elif s.subject == "nonstaticity":
        f = core.f_of_t(params, s.times)
        fd = core.fdot_of_t(params, s.times)
        zeta = core.zeta_of_t(params, s.times)
        phase = core.phase_integral(params, s.times)
        rows = list(zip(s.times, f, fd, zeta, phase))
    else:  # pragma: no cover - guarded by argparse choices
        raise UsageError(f"unknown subject {s.subject!r}")
    return CSV_HEADERS[s.subject], rows


def _write_rows(path, header, rows, fmt, subject):
    if fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_cell(x) for x in row) + "\n")
    else:
        payload = {
            "schema_version": 1,
            "subject": subject,
            "columns": list(header),
            "rows": [[None if x is None else (x if isinstance(x, str) else float(x))
                      for x in row] for row in rows],
        }
        _write_json(path, payload)


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _manifest(scenario):
    s = scenario
    p = s.params
    return {
        "schema_version": 1,
        "library_version": __version__,
        "subject": s.subject,
        "scenario": {
            "c1": p.c1, "c2": p.c2,
            "c3_sign": "+" if p.c3_sign == 1 else "-",
            "omega": p.omega, "epsilon": p.epsilon, "hbar": p.hbar,
            "phi": p.phi, "t0": p.t0,
            "a0": s.a0, "theta": s.theta,
            "t_from": s.t_from, "t_to": s.t_to, "nt": s.nt,
            "qmin": s.qmin, "qmax": s.qmax, "nq": s.nq,
            "pmin": s.pmin, "pmax": s.pmax, "np": s.np,
            "fock_n": s.fock_n, "format": s.format, "tol_scale": s.tol_scale,
        },
        "resolved_c3": p.c3,
        "nonstaticity_measure": core.nonstaticity_measure(p),
        "outputs": [Path(s.out).name],
    }


def manifest_path(out):
    return str(Path(out).with_suffix("")) + ".manifest.json"


def run(scenario):
    """Execute one scenario; returns the process exit status."""
    try:
        if scenario.subject == "validate":
            report = validation.run_invariant_suite(
                scenario.params, A0=scenario.a0, theta=scenario.theta,
                tol_scale=scenario.tol_scale)
            _write_json(scenario.out, report)
            _write_json(manifest_path(scenario.out), _manifest(scenario))
            return 0 if report["passed"] else 3
        header, rows = _compute_rows(scenario)
        _write_rows(scenario.out, header, rows, scenario.format, scenario.subject)
        _write_json(manifest_path(scenario.out), _manifest(scenario))
        return 0
    except AccuracyError as exc:
        _emit_error(str(exc), None)
        return 4
    except (CapabilityError, UndefinedStatisticsError) as exc:
        flag = "--fock-n" if isinstance(exc, CapabilityError) else "--a0"
        _emit_error(str(exc), flag)
        return 2


def _emit_error(message, flag):
    json.dump({"error": message, "flag": flag}, sys.stderr)
    sys.stderr.write("\n")


def main(argv=None):
    try:
        scenario = parse_scenario(argv)
    except UsageError as exc:
        _emit_error(str(exc), exc.flag)
        return 2
    return run(scenario)


if __name__ == "__main__":
    raise SystemExit(main())
