"""Rotational Dirichlet problem on a disk and the graph reparametrisation tau.

The radial solution attains its boundary value exactly and changing the
boundary value only shifts it by a constant.
"""
import numpy as np

from h2r_solitons import reintegration_check, solve_rotational_dirichlet, tau


def main():
    for R in (1.0, 5.0):
        a = solve_rotational_dirichlet(R, 0.0)
        b = solve_rotational_dirichlet(R, 3.0)
        r = np.linspace(R / 100, R, 50)
        print(f"R = {R}: u(0) = {a.u(0.0):.6f}, shift error {np.max(np.abs(b.u(r) - a.u(r) - 3)):.1e},",
              f"residual {np.max(np.abs(a.residual(r))):.1e}")
    for s, t in zip((1.0, 5.0, 10.0), tau([1.0, 5.0, 10.0])):
        print(f"tau({s:g}) = {t:.4f}")
    # integrating the bowl back towards the axis amplifies rounding
    for R in (1.0, 3.0, 10.0):
        fb = reintegration_check(R)
        print(f"back from r = {R}: {fb.event}, stopped at r = {fb.r_stop:.3f}, discrepancy {fb.discrepancy:.1e}")


if __name__ == "__main__":
    main()
