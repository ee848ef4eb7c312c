"""Interior commutator residuals of truncated representations, float64 matmul vs exact products.

The exact column converts every stored entry to a Fraction before
multiplying, so it isolates the storage rounding of the entries.
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from su11osc import repcore


@dataclass(frozen=True)
class ResidualConfig:
    dim: int = 64
    ks: tuple = (0.1, 0.25, 1 / 3, 0.5, 1.0, 2.5)


def exact_kpkm_residual(rep, m):
    """max |[K+,K-] + 2 K0| over the leading m x m block, products in exact arithmetic."""
    kp = np.diag(rep.Kplus, -1).real
    k0 = np.diag(rep.K0).real
    # K+ K- and K- K+ are diagonal: (K+K-)_nn = kp[n-1]^2, (K-K+)_nn = kp[n]^2
    worst = 0.0
    for n in range(m):
        a = Fraction(float(kp[n - 1])) ** 2 if n > 0 else Fraction(0)
        b = Fraction(float(kp[n])) ** 2
        worst = max(worst, abs(float(a - b + 2 * Fraction(float(k0[n])))))
    return worst


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dim", type=int, default=ResidualConfig.dim)
    a = p.parse_args(argv)
    cfg = ResidualConfig(dim=a.dim)
    m = cfg.dim - 2
    print(f"{'k':>8} {'float64 matmul':>15} {'exact products':>15}")
    for k in cfg.ks:
        rep = repcore.build_rep(k, cfg.dim)
        c = repcore.commutator(rep.Kplus, rep.Kminus) + 2 * rep.K0
        f64 = np.abs(repcore.interior(c)).max()
        print(f"{k:8.4f} {f64:15.3e} {exact_kpkm_residual(rep, m):15.3e}")


if __name__ == "__main__":
    main()
