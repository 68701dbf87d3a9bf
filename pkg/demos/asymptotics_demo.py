"""Slope of graphical solitons at infinity.

The slope phi tends to 2 and is squeezed between 2(1 - eps) tanh r and
2 tanh r. The closed-form comparison function has the linear asymptote
2r + k with k = -2 log 2 - log(10) / 4.
"""
import numpy as np

from h2r_solitons import MODEL_OFFSET, asymptotic_offset, bowl_graph, model_f, solve_phi
from h2r_solitons.asymptotics import measured_thresholds


def main():
    for phi0 in (0.2, 1.0, 5.0):
        sol = solve_phi(1.0, phi0, 20.0)
        th = measured_thresholds(sol)
        print(f"phi(1) = {phi0}: phi(20) - 2 = {sol.phi(20.0) - 2:.1e}")
        for k, v in th.items():
            print(f"    {k:<24} from r = {v}")
    m = asymptotic_offset(model_f)
    b = asymptotic_offset(bowl_graph())
    print(f"model offset k = {m.k:.8f} (closed form {MODEL_OFFSET:.8f})")
    print(f"bowl offset    = {b.k:.8f}, variation over the window {b.variation:.1e}")
    r = np.array([8.0, 10.0, 12.0])
    print("bowl height minus 2r:", bowl_graph().f(r) - 2 * r)


if __name__ == "__main__":
    main()
