"""Surfaces of revolution generated by sampled profiles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .hyperbolic import from_polar, poincare_from_polar
from .profile_ode import ContractError, SolitonProfile, theta_prime
from .verification import principal_curvatures

MODELS = ("poincare", "hyperboloid")


@dataclass
class RevolutionMesh:
    """Quad mesh of a rotational surface.

    ``vertices`` has shape (n_samples * n_theta, 3) in the disk model
    ``(u1, u2, z)`` or (n, 4) on the hyperboloid ``(x1, x2, x3, z)``. Vertex
    ``i * n_theta + j`` lies over profile sample ``i`` at rotation angle ``j``.
    """

    vertices: np.ndarray
    faces: np.ndarray  # (m, 4) vertex indices, counter-clockwise in (t, angle)
    model: str
    n_samples: int
    n_theta: int
    r: np.ndarray
    t: np.ndarray
    angle: np.ndarray
    nu: np.ndarray
    H: np.ndarray
    residual: np.ndarray

    def edge_counts(self) -> Counter:
        c = Counter()
        for f in self.faces:
            for a, b in zip(f, np.roll(f, -1)):
                c[(min(a, b), max(a, b))] += 1
        return c

    def is_manifold(self) -> bool:
        """Every edge bounds one or two faces; only the end circles have one."""
        counts = self.edge_counts()
        if any(v > 2 for v in counts.values()):
            return False
        ends = {0, self.n_samples - 1}
        for (a, b), v in counts.items():
            if v == 1 and not (a // self.n_theta == b // self.n_theta and a // self.n_theta in ends):
                return False
        return True


def mesh_revolution(profile: SolitonProfile, n_theta: int = 64, model: str = "poincare") -> RevolutionMesh:
    """Rotate the profile samples about the axis, closing the mesh in the angle."""
    if n_theta < 8:
        raise ContractError("n_theta must be at least 8")
    if model not in MODELS:
        raise ContractError(f"model must be one of {MODELS}")
    t, r, w, th = profile.t, profile.r, profile.w, profile.theta
    if np.any(r <= 0):
        raise ContractError("profile samples must stay off the rotation axis")
    n = t.size
    a = np.linspace(0.0, 2 * np.pi, n_theta, endpoint=False)
    R, A = np.meshgrid(r, a, indexing="ij")
    Z = np.repeat(w[:, None], n_theta, axis=1)
    if model == "poincare":
        p = poincare_from_polar(R, A, Z)
        verts = np.column_stack([p.u1.ravel(), p.u2.ravel(), p.z.ravel()])
    else:
        p = from_polar(R, A, Z)
        verts = np.column_stack([p.x1.ravel(), p.x2.ravel(), p.x3.ravel(), p.z.ravel()])

    i = np.arange(n - 1)[:, None]
    j = np.arange(n_theta)[None, :]
    jn = (j + 1) % n_theta
    faces = np.stack([i * n_theta + j, (i + 1) * n_theta + j,
                      (i + 1) * n_theta + jn, i * n_theta + jn], axis=-1).reshape(-1, 4)

    k1, k2 = principal_curvatures(r, th, theta_prime(r, th))
    H = 0.5 * (k1 + k2)
    nu = np.cos(th)
    rep = lambda v: np.repeat(v, n_theta)
    return RevolutionMesh(verts, faces, model, n, n_theta, rep(r), rep(t), np.tile(a, n),
                          rep(nu), rep(H), rep(H - nu))
