"""Plain-text exporters: profile CSV, OBJ meshes, phase-portrait CSV and JSON reports.

Every file is written to a temporary sibling first and renamed into place.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .mesh import RevolutionMesh
from .phase import Portrait
from .profile_ode import ContractError, SolitonProfile, profile_from_samples, theta_prime
from .verification import principal_curvatures

PROFILE_COLUMNS = ("t", "r", "w", "theta", "y", "eps", "kappa1", "kappa2", "H", "residual")
PORTRAIT_COLUMNS = ("kind", "r", "y", "d_r", "d_y", "region")


def atomic_write_text(path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def _fmt(x) -> str:
    return format(float(x), ".17g")


def profile_table(profile: SolitonProfile) -> dict:
    """Sample columns in :data:`PROFILE_COLUMNS` order."""
    t, r, w, th, eps = profile.t, profile.r, profile.w, profile.theta, profile.eps
    k1, k2 = principal_curvatures(r, th, theta_prime(r, th))
    H = 0.5 * (k1 + k2)
    y = np.cos(th)
    return dict(zip(PROFILE_COLUMNS, (t, r, w, th, y, eps, k1, k2, H, H - y)))


def write_profile_csv(profile: SolitonProfile, path) -> Path:
    cols = profile_table(profile)
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(PROFILE_COLUMNS)
    for k in range(cols["t"].size):
        wr.writerow([str(int(cols[c][k])) if c == "eps" else _fmt(cols[c][k]) for c in PROFILE_COLUMNS])
    return atomic_write_text(path, buf.getvalue())


def read_profile_csv(path, kind: str = "Generic") -> SolitonProfile:
    with open(path, newline="") as fh:
        rd = csv.reader(fh)
        header = tuple(next(rd))
        if header != PROFILE_COLUMNS:
            raise ContractError(f"unexpected profile columns {header}")
        rows = np.array([[float(v) for v in row] for row in rd])
    c = {name: rows[:, k] for k, name in enumerate(PROFILE_COLUMNS)}
    return profile_from_samples(c["t"], c["r"], c["w"], c["theta"], c["eps"].astype(int), kind)


def write_obj(mesh: RevolutionMesh, path) -> Path:
    """Wavefront OBJ of a disk-model mesh (vertices ``u1 u2 z``, quad faces)."""
    if mesh.model != "poincare":
        raise ContractError("OBJ export needs three coordinates; build the mesh in the disk model")
    lines = [f"# rotational surface, {mesh.n_samples} x {mesh.n_theta} vertices"]
    lines += [f"v {_fmt(a)} {_fmt(b)} {_fmt(c)}" for a, b, c in mesh.vertices]
    lines += ["f " + " ".join(str(int(i) + 1) for i in f) for f in mesh.faces]
    return atomic_write_text(path, "\n".join(lines) + "\n")


def read_obj(path):
    """``(vertices, faces)`` with zero-based face indices."""
    verts, faces = [], []
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "v":
                verts.append([float(v) for v in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(v.split("/")[0]) - 1 for v in parts[1:]])
    return np.array(verts), np.array(faces, dtype=int)


def write_portrait_csv(p: Portrait, path) -> Path:
    """Direction field rows (``kind=field``) followed by the ``Gamma`` polyline (``kind=gamma``)."""
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(PORTRAIT_COLUMNS)
    for r, y, dr, dy, region in p.field_rows():
        wr.writerow(["field", _fmt(r), _fmt(y), _fmt(dr), _fmt(dy), region])
    for r, y in zip(p.gamma_r, p.gamma_y):
        wr.writerow(["gamma", _fmt(r), _fmt(y), "", "", "OnGamma"])
    return atomic_write_text(path, buf.getvalue())


def write_columns_csv(columns: dict, path) -> Path:
    names = list(columns)
    data = [np.asarray(columns[k], dtype=float) for k in names]
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(names)
    for row in zip(*data):
        wr.writerow([_fmt(v) for v in row])
    return atomic_write_text(path, buf.getvalue())


def to_jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_jsonable(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if np.isfinite(x) else None
    if isinstance(obj, Path):
        return str(obj)
    return obj


def write_json(obj, path) -> Path:
    return atomic_write_text(path, json.dumps(to_jsonable(obj), indent=2, sort_keys=False) + "\n")
