"""Command-line front end.

Each subcommand builds one object, writes the requested artifacts and a JSON
report that echoes every parameter and tolerance used. Relative output
paths are resolved against ``$H2R_SOLITONS_OUT`` (default: the working
directory).

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure (a JSON
diagnostic goes to stderr and to the report path when one was given).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import asymptotics as asy
from .builders import build_bowl, build_catenoid, c1_distance_to_bowl, solve_rotational_dirichlet, tau
from .config import DEFAULT_CONFIG, R_BUILD_MAX, IntegratorConfig
from .export import (read_profile_csv, to_jsonable, write_columns_csv, write_json, write_obj,
                     write_portrait_csv, write_profile_csv)
from .mesh import mesh_revolution
from .phase import equilibrium_scan, portrait
from .profile_ode import IntegrationError
from .verification import verify_profile

OUT_DIR_ENV = "H2R_SOLITONS_OUT"

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    params: dict
    integrator: IntegratorConfig
    outputs: dict = field(default_factory=dict)
    out_dir: Path = Path(".")

    def path(self, key) -> Optional[Path]:
        p = self.outputs.get(key)
        if p is None:
            return None
        p = Path(p)
        return p if p.is_absolute() else self.out_dir / p

    def validate(self) -> "RunConfig":
        p = self.params
        positive = {"rmax", "neck", "R", "phi0", "rend", "eps0", "radius", "n_theta", "grid"}
        for k in positive & p.keys():
            if not p[k] > 0:
                raise UsageError(f"--{k.replace('_', '-')} must be positive")
        if "rmax" in p and p["rmax"] > R_BUILD_MAX:
            raise UsageError(f"--rmax must not exceed {R_BUILD_MAX}")
        if "neck" in p and p["neck"] >= p["rmax"]:
            raise UsageError("--neck must be smaller than --rmax")
        if "n_theta" in p and p["n_theta"] < 8:
            raise UsageError("--n-theta must be at least 8")
        if "eps" in p and p["eps"] not in (1, -1):
            raise UsageError("--eps must be 1 or -1")
        if "rend" in p and p["rend"] <= p["R"]:
            raise UsageError("--rend must exceed --R")
        if "sigma" in p and any(not 0 <= s <= R_BUILD_MAX for s in p["sigma"]):
            raise UsageError(f"--sigma values must lie in [0, {R_BUILD_MAX}]")
        return self

    def echo(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "parameters": self.params,
            "integrator": self.integrator.to_dict(),
            "outputs": {k: str(self.path(k)) for k in self.outputs if self.outputs[k] is not None},
        }


def _add_tolerances(p):
    d = DEFAULT_CONFIG
    p.add_argument("--abs-tol", type=float, default=d.abs_tol)
    p.add_argument("--rel-tol", type=float, default=d.rel_tol)
    p.add_argument("--r-min-axis", type=float, default=d.r_min_axis)


def _add_outputs(p, *names):
    for n in names:
        p.add_argument(f"--{n}", default=None, help=f"{n} file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="h2r-solitons",
                                 description="Rotational translating solitons of mean curvature flow in H^2 x R.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("bowl", help="rotational graph through the axis")
    p.add_argument("--rmax", type=float, default=12.0)
    p.add_argument("--n-theta", type=int, default=64)
    _add_tolerances(p)
    _add_outputs(p, "out", "mesh", "report")

    p = sub.add_parser("catenoid", help="two-ended rotational soliton with a given neck")
    p.add_argument("--neck", type=float, required=True)
    p.add_argument("--rmax", type=float, default=12.0)
    p.add_argument("--n-theta", type=int, default=64)
    _add_tolerances(p)
    _add_outputs(p, "out", "mesh", "report")

    p = sub.add_parser("phase-portrait", help="direction field, regions and the Gamma curve")
    p.add_argument("--eps", type=int, default=1)
    p.add_argument("--grid", type=int, default=40)
    p.add_argument("--rmax", type=float, default=5.0)
    _add_outputs(p, "out", "report")

    p = sub.add_parser("asymptotics", help="slope equation, bounds and thresholds")
    p.add_argument("--R", type=float, default=1.0)
    p.add_argument("--phi0", type=float, default=1.0)
    p.add_argument("--rend", type=float, default=20.0)
    p.add_argument("--eps0", type=float, default=1e-3)
    _add_outputs(p, "out", "report")

    p = sub.add_parser("dirichlet", help="rotational graph with constant boundary values on a disk")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--c", type=float, default=0.0)
    _add_outputs(p, "out", "report")

    p = sub.add_parser("verify", help="re-verify a profile CSV")
    p.add_argument("profile")
    _add_outputs(p, "report")

    p = sub.add_parser("tau", help="cap height of the bowl over a circle of radius sigma")
    p.add_argument("--sigma", type=float, nargs="+", required=True)
    _add_tolerances(p)
    _add_outputs(p, "report")
    return ap


_OUTPUT_KEYS = ("out", "mesh", "report")
_TOL_KEYS = ("abs_tol", "rel_tol", "r_min_axis")


def make_run_config(ns: argparse.Namespace) -> RunConfig:
    d = vars(ns).copy()
    sub = d.pop("subcommand")
    outputs = {k: d.pop(k) for k in _OUTPUT_KEYS if k in d}
    tol = {k: d.pop(k) for k in _TOL_KEYS if k in d}
    try:
        cfg = DEFAULT_CONFIG.with_(
            abs_tol=tol.get("abs_tol", DEFAULT_CONFIG.abs_tol),
            rel_tol=tol.get("rel_tol", DEFAULT_CONFIG.rel_tol),
            r_min_axis=tol.get("r_min_axis", DEFAULT_CONFIG.r_min_axis),
            event_tol=min(DEFAULT_CONFIG.event_tol, tol.get("abs_tol", DEFAULT_CONFIG.abs_tol)),
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    out_dir = Path(os.environ.get(OUT_DIR_ENV, "."))
    return RunConfig(sub, d, cfg, outputs, out_dir).validate()


def _profile_outputs(rc: RunConfig, profile, report: dict):
    if rc.path("out"):
        write_profile_csv(profile, rc.path("out"))
    if rc.path("mesh"):
        m = mesh_revolution(profile, rc.params["n_theta"], "poincare")
        write_obj(m, rc.path("mesh"))
        report["mesh"] = {"vertices": int(m.vertices.shape[0]), "faces": int(m.faces.shape[0]),
                          "n_theta": m.n_theta, "model": m.model}


def run_bowl(rc: RunConfig) -> dict:
    prof = build_bowl(rc.params["rmax"], rc.integrator)
    rep = verify_profile(prof, "bowl").to_dict()
    y = prof.y
    rep["angle_limit"] = {
        "y_end": float(y[-1]),
        "y_end_minus_inv_sqrt5": float(y[-1] - 1 / np.sqrt(5)),
        "y_strictly_decreasing": bool(np.all(np.diff(y) < 0)),
    }
    if rc.params["rmax"] >= 12.0:
        off = asy.asymptotic_offset(lambda r: prof.graph(r)[0])
        rep["asymptote"] = {"k": off.k, "variation": off.variation, "window": list(off.window)}
    _profile_outputs(rc, prof, rep)
    return rep


def run_catenoid(rc: RunConfig) -> dict:
    cat = build_catenoid(rc.params["neck"], rc.params["rmax"], rc.integrator)
    prof = cat.glued()
    rep = verify_profile(prof, f"catenoid_r0={rc.params['neck']:g}").to_dict()
    ev = cat.turning_event
    rep["neck_radius"] = cat.neck_radius
    rep["turning_radius"] = cat.turning_radius
    rep["turning_event_residual"] = ev.residual
    rep["min_radius"] = float(min(cat.upper.r.min(), cat.lower.r.min()))
    rep["gamma_crossings_upper"] = [c.state.r for c in cat.upper.crossings]
    if rc.params["rmax"] >= 12.0:
        up = c1_distance_to_bowl(cat.upper, segment=0)
        lo = c1_distance_to_bowl(cat.lower, segment=len(cat.lower.segments) - 1)
        rep["c1_distance_to_bowl"] = {"upper": up, "lower": lo, "window": [8.0, 12.0]}
    _profile_outputs(rc, prof, rep)
    return rep


def run_portrait(rc: RunConfig) -> dict:
    p = portrait(rc.params["eps"], rc.params["grid"], r_range=(0.05, rc.params["rmax"]))
    if rc.path("out"):
        write_portrait_csv(p, rc.path("out"))
    scan = equilibrium_scan(eps=rc.params["eps"])
    counts = {}
    for reg in p.regions:
        counts[reg.value] = counts.get(reg.value, 0) + 1
    return {"eps": p.eps, "n_field": int(p.r.size), "n_gamma": int(p.gamma_r.size),
            "asymptotes": list(p.asymptotes), "region_counts": counts,
            "equilibrium_scan": {"min_norm": scan.min_norm, "argmin": list(scan.argmin),
                                 "grid": [500, 500], "r_range": [0.05, 10.0],
                                 "y_range": [-0.999, 0.999]}}


def run_asymptotics(rc: RunConfig) -> dict:
    q = rc.params
    sol = asy.solve_phi(q["R"], q["phi0"], q["rend"])
    if rc.path("out"):
        write_columns_csv(asy.bounds_table(sol, q["eps0"]), rc.path("out"))
    phi_end = float(sol.phi(q["rend"]))
    return {
        "phi_end": phi_end,
        "phi_end_minus_2": phi_end - 2.0,
        "psi_end": float(sol.psi(q["rend"])),
        "thresholds": asy.measured_thresholds(sol, eps0=q["eps0"]),
        "lower_bound_violations": int(asy.lower_bound_violations(sol).size),
        "model_offset": {"closed_form": asy.MODEL_OFFSET,
                         "extracted": asy.asymptotic_offset(asy.model_f).k},
    }


def run_dirichlet(rc: RunConfig) -> dict:
    R, c = rc.params["radius"], rc.params["c"]
    sol = solve_rotational_dirichlet(R, c)
    r = np.linspace(0.0, R, 201)
    if rc.path("out"):
        write_columns_csv({"r": r, "u": sol.u(r), "du": sol.du(r)}, rc.path("out"))
    rr = np.linspace(R / 20, R, 50)
    return {"boundary_value": float(sol.u(R)), "boundary_error": float(abs(sol.u(R) - c)),
            "center_value": float(sol.u(0.0)),
            "max_pde_residual": float(np.max(np.abs(sol.residual(rr))))}


def run_verify(rc: RunConfig) -> dict:
    path = Path(rc.params["profile"])
    if not path.exists():
        raise UsageError(f"no such profile file: {path}")
    prof = read_profile_csv(path)
    return verify_profile(prof, path.stem).to_dict()


def run_tau(rc: RunConfig) -> dict:
    s = np.asarray(rc.params["sigma"], dtype=float)
    return {"sigma": s, "tau": tau(s, rc.integrator)}


RUNNERS = {"bowl": run_bowl, "catenoid": run_catenoid, "phase-portrait": run_portrait,
           "asymptotics": run_asymptotics, "dirichlet": run_dirichlet, "verify": run_verify,
           "tau": run_tau}


def _emit(rc: Optional[RunConfig], payload: dict, stream) -> None:
    text = json.dumps(to_jsonable(payload), indent=2)
    if rc is not None and rc.path("report"):
        write_json(payload, rc.path("report"))
    print(text, file=stream)


def cli_run(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    rc = None
    try:
        rc = make_run_config(ns)
        result = RUNNERS[rc.subcommand](rc)
    except (UsageError, ValueError) as e:
        print(json.dumps({"status": "usage_error", "error": str(e)}), file=sys.stderr)
        return EXIT_USAGE
    except (IntegrationError, FloatingPointError, OverflowError, ArithmeticError) as e:
        diag = {"status": "numerical_failure", "error_type": type(e).__name__, "error": str(e)}
        state = getattr(e, "state", None)
        if state is not None:
            diag["state"] = state
        if rc is not None:
            diag.update(rc.echo())
        _emit(rc, diag, sys.stderr)
        return EXIT_NUMERIC
    _emit(rc, {"status": "ok", **rc.echo(), **result}, sys.stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
