"""Identities that every soliton satisfies, checked on built profiles.

* H = nu, the weighted and conformal forms of the same equation
* the Laplacian of the height equals 2 H nu
* solitons are critical for the weighted area e^{2h} dA: compactly
  supported normal variations leave it unchanged to first order
"""
import numpy as np

from h2r_solitons import build_bowl, build_catenoid, verify_profile
from h2r_solitons.verification import (Bump, Patch, plane_variation_reference,
                                       weighted_area_first_variation)


def main():
    bowl = build_bowl(12.0)
    cat = build_catenoid(1.0).glued()
    for name, p in (("bowl", bowl), ("catenoid r0=1", cat)):
        rep = verify_profile(p, name)
        print(name, {k: f"{v:.1e}" for k, v in rep.max_residuals.items()})
    patch = Patch.from_profile(bowl, 1.0, 5.0)
    bump = Bump(3.0, 1.0, modulation=0.5, k=2)
    for lam in (2.0, 1.0):
        fv = weighted_area_first_variation(patch, bump, density_scale=lam)
        print(f"density e^({lam:g} h): d/de A = {fv.derivative:.6e}, formula {fv.predicted:.6e}")
    plane = Patch.horizontal_plane(0.3, 0.2, 3.0)
    b = Bump(1.5, 1.0, modulation=0.3, k=1)
    fv = weighted_area_first_variation(plane, b, density_scale=1.0)
    print(f"horizontal plane: {fv.derivative:.10f} vs {plane_variation_reference(plane, b):.10f}")


if __name__ == "__main__":
    main()
