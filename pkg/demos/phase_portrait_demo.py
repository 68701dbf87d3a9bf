"""The (r, nu) phase plane of rotational solitons.

Prints the curve Gamma where orbits turn, checks there are no equilibria
and writes the sampled direction field as CSV.
"""
import sys
from pathlib import Path

import numpy as np

from h2r_solitons import equilibrium_scan, gamma, portrait
from h2r_solitons.export import write_portrait_csv


def main(out=Path("demo_out")):
    for y in (0.95, 0.9, 0.7, 0.5, 1 / np.sqrt(5) + 1e-3):
        print(f"Gamma_1({y:.4f}) = {float(gamma(y, 1)):.6f}")
    for e in (1, -1):
        s = equilibrium_scan(eps=e)
        print(f"eps = {e:+d}: min |F| = {s.min_norm:.4f} at {s.argmin}")
    p = portrait(1, grid=60)
    print("portrait:", write_portrait_csv(p, out / "portrait_eps1.csv"))


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_out"))
