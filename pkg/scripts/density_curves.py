"""Write coherent-state densities on the half line as CSV, one column per family."""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from su11osc import hilbert
from su11osc.coherent import CoherentFamily


@dataclass(frozen=True)
class CurveConfig:
    k: float = 0.75
    bg: complex = 2.0
    perelomov: complex = 0.5
    sg: complex = 1.2
    u_max: float = 20.0
    points: int = 201


def families(cfg: CurveConfig):
    return ((CoherentFamily.BG, cfg.bg), (CoherentFamily.PERELOMOV, cfg.perelomov), (CoherentFamily.SG, cfg.sg))


def curves(cfg: CurveConfig):
    u = np.linspace(cfg.u_max / cfg.points, cfg.u_max, cfg.points)
    cols = {"u": u}
    for fam, param in families(cfg):
        cols[fam.value] = hilbert.density_curve(hilbert.Space.HALFLINE, fam, cfg.k, param, u)[:, 1]
    return cols


def total_mass(cfg: CurveConfig, fam, param):
    dens = np.vectorize(lambda x: hilbert.coherent_density(hilbert.Space.HALFLINE, fam, cfg.k, param, x))
    return hilbert.halfline_integral(dens, cfg.k).real


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=float, default=CurveConfig.k)
    p.add_argument("--points", type=int, default=CurveConfig.points)
    p.add_argument("--u-max", type=float, default=CurveConfig.u_max)
    a = p.parse_args(argv)
    cfg = CurveConfig(k=a.k, points=a.points, u_max=a.u_max)
    cols = curves(cfg)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(list(cols))
    for row in zip(*cols.values()):
        w.writerow([f"{x:.10g}" for x in row])
    for fam, param in families(cfg):
        print(f"# {fam.value}: total mass (Gauss-Laguerre) = {total_mass(cfg, fam, param):.12f}", file=sys.stderr)


if __name__ == "__main__":
    main()
