"""Compare closed-form perturbed orbits with RK4 integration and report energy drift."""

import argparse
from dataclasses import dataclass

import numpy as np

from su11osc import actionangle as aa


@dataclass(frozen=True)
class OrbitConfig:
    phi0: float = 0.7
    I0: float = 1.2
    t_end: float = 10.0
    step: float = 1e-3
    gammas: tuple = (-0.6, 0.3, 0.9)


def run(cfg: OrbitConfig):
    s0 = aa.AngleAction(cfg.phi0, cfg.I0)
    rows = []
    for kind in ("h1", "h2"):
        for g in cfg.gammas:
            closed = aa.perturbed_orbit(kind, g, cfg.t_end, s0)
            y = aa._rk4(aa.orbit_rhs(kind, g), [s0.phi_unwrapped, s0.I], cfg.t_end, cfg.step)
            tr = aa.orbit_trace(kind, g, np.linspace(0, cfg.t_end, 501), s0)
            E = [aa.perturbed_energy(kind, g, phi, I) for phi, I in tr[:, 1:3]]
            rows.append((kind, g, abs(closed.phi_unwrapped - y[0]), abs(closed.I - y[1]), float(np.ptp(E))))
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--t-end", type=float, default=OrbitConfig.t_end)
    p.add_argument("--step", type=float, default=OrbitConfig.step)
    a = p.parse_args(argv)
    print(f"{'kind':5} {'gamma':>6} {'|dphi|':>10} {'|dI|':>10} {'energy drift':>13}")
    for kind, g, dphi, dI, drift in run(OrbitConfig(t_end=a.t_end, step=a.step)):
        print(f"{kind:5} {g:6.2f} {dphi:10.2e} {dI:10.2e} {drift:13.2e}")


if __name__ == "__main__":
    main()
