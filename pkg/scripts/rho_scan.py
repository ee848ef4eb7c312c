"""Scan the Bessel ratio rho_k(z) near 1.

Prints where rho_0.05 crosses 1 and where rho_1/4 and tanh(2z) first round
to exactly 1.0 in float64.
"""

import argparse
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from su11osc import specfun


@dataclass(frozen=True)
class ScanConfig:
    small_k: float = 0.05
    z_lo: float = 1e-3
    z_hi: float = 10.0
    points: int = 20001


def first_at_one(f, zs):
    hits = [z for z in zs if f(z) >= 1.0]
    return hits[0] if hits else None


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--small-k", type=float, default=ScanConfig.small_k)
    p.add_argument("--points", type=int, default=ScanConfig.points)
    a = p.parse_args(argv)
    cfg = ScanConfig(small_k=a.small_k, points=a.points)

    k = cfg.small_k
    print(f"rho_{k}(z) near its crossing of 1")
    for z in (0.05, 0.1, 0.11, 0.12, 0.2, 0.5, 1.0, 10.0):
        print(f"  z={z:<6} rho={specfun.rho_k(k, z):.12f}")
    zc = brentq(lambda z: specfun.rho_k(k, z) - 1, 1e-3, 1.0, xtol=1e-14)
    print(f"  crossing at z = {zc:.10f}")

    zs = np.linspace(cfg.z_lo, cfg.z_hi, cfg.points)
    t = first_at_one(lambda z: math.tanh(2 * z), zs)
    r = first_at_one(lambda z: specfun.rho_k(0.25, z), zs)
    print("float64 rounding of rho_1/4 = tanh(2z) to 1.0")
    print(f"  tanh(2z) == 1.0 from z = {t}")
    print(f"  rho_1/4(z) == 1.0 from z = {r}")
    d = max(abs(specfun.rho_k(0.25, z) - math.tanh(2 * z)) for z in zs)
    print(f"  max |rho_1/4 - tanh 2z| on the scan = {d:.3e}")


if __name__ == "__main__":
    main()
