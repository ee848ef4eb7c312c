"""Command-line table generator: ``su11osc <command> [--flags]``.

Every command prints one document (JSON by default, CSV with
``--format csv``).  Exit codes: 0 success, 2 usage or domain error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from fractions import Fraction

import numpy as np

from . import __version__, actionangle, coherent, hilbert, physapp, repcore, specfun
from .errors import ConvergenceError, DomainError, TruncationError

SCHEMA = "su11-oscillator/1"

DEFAULT_CONFIG = {
    "tail_target": coherent.TAIL_TARGET,
    "n_dim": 64,
    "circle_points": hilbert.DEFAULT.circle_points,
    "laguerre_nodes": hilbert.DEFAULT.laguerre_nodes,
    "kernel_eps": hilbert.DEFAULT.kernel_eps,
    "action_tol": 1e-10,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(t)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _choice(enum_cls):
    def conv(text: str) -> str:
        for m in enum_cls:
            if text.lower() in (m.value.lower(), m.name.lower()):
                return m.value
        raise argparse.ArgumentTypeError(
            f"invalid choice {text!r} (choose from {', '.join(x.value for x in enum_cls)})")
    return conv


def parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from exc


def load_config(path: str | None) -> dict:
    cfg = dict(DEFAULT_CONFIG)
    if path is None:
        return cfg
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in cfg:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            cfg[key] = type(DEFAULT_CONFIG[key])(float(value)) if isinstance(DEFAULT_CONFIG[key], int) else float(value)
    return cfg


# ---------------------------------------------------------------------------
# documents


def _num(x):
    if isinstance(x, (complex, np.complexfloating)):
        raise TypeError("complex values must be split into real columns")
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    return x if math.isfinite(x) else None


def make_document(command: str, params: dict, columns: dict, cfg: dict, extra: dict | None = None) -> dict:
    cols = {name: [_num(v) for v in np.asarray(vals).ravel().tolist()] for name, vals in columns.items()}
    doc = {
        "schema": SCHEMA,
        "command": command,
        "params": {k: (str(v) if isinstance(v, complex) else v) for k, v in params.items()},
        "columns": cols,
        "metadata": {"version": __version__, "tolerances": dict(cfg)},
    }
    if extra:
        doc["metadata"]["results"] = extra
    validate_document(doc)
    return doc


def validate_document(doc: dict) -> None:
    """Raise ValueError unless ``doc`` follows the output schema."""
    for key in ("schema", "command", "params", "columns", "metadata"):
        if key not in doc:
            raise ValueError(f"missing field {key!r}")
    if doc["schema"] != SCHEMA:
        raise ValueError("wrong schema tag")
    if not isinstance(doc["columns"], dict):
        raise ValueError("columns must be a mapping")
    lengths = {len(v) for v in doc["columns"].values()}
    if len(lengths) > 1:
        raise ValueError("column lengths differ")
    for name, vals in doc["columns"].items():
        for v in vals:
            if v is not None and not isinstance(v, (int, float, bool)):
                raise ValueError(f"column {name!r} holds a non-numeric value")
    md = doc["metadata"]
    if "version" not in md or "tolerances" not in md:
        raise ValueError("metadata needs version and tolerances")


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, allow_nan=False, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# schema={doc['schema']} command={doc['command']} version={doc['metadata']['version']}\n")
    for k, v in doc["params"].items():
        buf.write(f"# {k}={v}\n")
    w = csv.writer(buf, lineterminator="\n")
    names = list(doc["columns"])
    w.writerow(names)
    n = len(doc["columns"][names[0]]) if names else 0
    for i in range(n):
        w.writerow(["" if doc["columns"][c][i] is None else repr(doc["columns"][c][i]) for c in names])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def cmd_spectrum(a, cfg):
    sp_ = repcore.spectrum(a.k, a.n, a.omega, a.hbar)
    n = np.arange(a.n + 1)
    return {"k": a.k, "n": a.n, "omega": a.omega, "hbar": a.hbar}, {"n": n, "energy": np.array(sp_.levels)}, None


def cmd_rep_check(a, cfg):
    N = a.dim or cfg["n_dim"]
    rep = repcore.build_rep(a.k, N)
    m = N - 2
    eye = np.eye(m)
    c = repcore.commutator
    inner = repcore.interior
    checks = {
        "[K0,K+]-K+": np.abs(inner(c(rep.K0, rep.Kplus) - rep.Kplus)).max(),
        "[K0,K-]+K-": np.abs(inner(c(rep.K0, rep.Kminus) + rep.Kminus)).max(),
        "[K+,K-]+2K0": np.abs(inner(c(rep.Kplus, rep.Kminus) + 2 * rep.K0)).max(),
        "[A,Adag]-1": np.abs(inner(c(rep.A, rep.Adag)) - eye).max(),
        "[Q,P]-i": np.abs(inner(c(rep.Q, rep.P)) - 1j * eye).max(),
        "casimir-k(1-k)": np.abs(inner(rep.casimir) - a.k * (1 - a.k) * eye).max(),
    }
    return ({"k": a.k, "dim": N}, {"check": np.arange(len(checks)), "residual": np.array(list(checks.values()))},
            {"check_names": list(checks)})


def cmd_coherent(a, cfg):
    fam = coherent._family(a.family)
    st = coherent.make_state(fam, a.k, a.param, tail_target=cfg["tail_target"])
    rep = coherent.expectations(fam, a.k, a.param)
    probs = np.abs(st.amplitudes) ** 2
    extra = {name: float(v) for name, v in zip(
        ("mean_K0", "mean_K1", "mean_K2", "mean_N", "var_K0", "var_K1", "var_K2"), rep.as_array())}
    extra["tail_bound"] = st.tail_bound
    return ({"family": fam.value, "k": a.k, "param": a.param, "dim": st.dim},
            {"n": np.arange(st.dim), "amp_re": st.amplitudes.real, "amp_im": st.amplitudes.imag, "prob": probs}, extra)


def cmd_rho(a, cfg):
    z = np.array(a.z)
    vals = np.array([specfun.rho_k(a.k, float(x)) for x in z])
    return {"k": a.k, "z": a.z}, {"z": z, "rho": vals}, None


def cmd_action(a, cfg):
    pot = actionangle.PotentialSpec(a.potential, a.V0, a.a, a.M)
    E = np.array(a.energy)
    quad = np.array([actionangle.action_quadrature(pot, e, cfg["action_tol"]) for e in E])
    closed = np.array([actionangle.action_closed_form(pot, e) for e in E])
    extra = {"omega0": pot.omega0}
    if a.levels is not None:
        qs = actionangle.quantized_spectrum(pot, a.k, a.levels, a.hbar)
        extra["levels"] = list(qs.energies)
        extra["valid"] = list(qs.valid)
    return ({"potential": pot.kind.value, "V0": a.V0, "a": a.a, "M": a.M},
            {"E": E, "I_quadrature": quad, "I_closed_form": closed}, extra)


def cmd_density(a, cfg):
    hc = hilbert.HilbertConfig(cfg["circle_points"], cfg["laguerre_nodes"], cfg["kernel_eps"])
    pts = np.linspace(a.start, a.stop, a.num)
    vals = np.array([hilbert.coherent_density(a.space, a.family, a.k, a.param, p, hc) for p in pts])
    return ({"space": a.space, "family": a.family, "k": a.k, "param": a.param},
            {"point": pts, "density": vals}, None)


def cmd_thermo(a, cfg):
    r = physapp.thermo(a.beta_hw, a.k, a.hbar_omega)
    lnZ = physapp.log_partition(a.beta_hw, a.k)
    d2 = physapp.log_partition_d2_fd(a.beta_hw, a.k)
    extra = {
        "entropy_identity_residual": r.S_over_kB - (lnZ + a.beta_hw * r.U / a.hbar_omega),
        "fluctuation_fd_residual": r.dE2 / a.hbar_omega ** 2 - d2,
    }
    cols = {k: np.array([v]) for k, v in r.to_json().items()}
    return {"beta_hw": a.beta_hw, "k": a.k, "hbar_omega": a.hbar_omega}, cols, extra


def cmd_landau(a, cfg):
    E = physapp.landau_levels(a.q, a.B, a.mass, a.k, a.n, a.hbar)
    return ({"q": a.q, "B": a.B, "mass": a.mass, "k": a.k, "hbar": a.hbar},
            {"n": np.arange(a.n + 1), "energy": E}, None)


def cmd_stark(a, cfg):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r = physapp.stark_effective_k(a.k, a.Z, a.E0, a.nu, a.Mc2)
    return ({"k": a.k, "Z": a.Z, "E0": a.E0, "nu": a.nu, "Mc2": a.Mc2},
            {"delta": [r.delta], "k_eff": [r.k_eff], "nonpositive": [r.nonpositive]}, None)


def cmd_vacuum(a, cfg):
    if a.target_kev_cm3 is not None:
        if a.ell is None:
            raise DomainError("solving for k needs --ell")
        target = a.target_kev_cm3 * physapp.CONSTANTS["keV"] / 1e-6
        k = physapp.solve_k_for_density(target, a.ell)
        return {"ell": a.ell, "target_kev_cm3": a.target_kev_cm3}, {"k": [k]}, None
    u = physapp.vacuum_energy_density(a.k, omega_hat=a.omega_hat, ell=a.ell)
    kev = u * 1e-6 / physapp.CONSTANTS["keV"]
    return ({"k": a.k, "omega_hat": a.omega_hat, "ell": a.ell},
            {"density_J_m3": [u], "density_keV_cm3": [kev]}, None)


def cmd_mulliken(a, cfg):
    k = physapp.mulliken_extract_k(a.Ea, a.Eb, a.omega1, a.omega2, a.omega_a1, a.omega_b2, a.hbar)
    return ({"Ea": a.Ea, "Eb": a.Eb, "omega1": a.omega1, "omega2": a.omega2,
             "omega_a1": a.omega_a1, "omega_b2": a.omega_b2, "hbar": a.hbar}, {"k": [k]}, None)


def cmd_cover(a, cfg):
    g1 = repcore.CoverElement(a.gamma1, a.omega1)
    g2 = repcore.CoverElement(a.gamma2, a.omega2)
    g3 = repcore.cover_compose(g2, g1)
    M = repcore.cover_to_su11(g3)
    extra = None
    if a.m is not None:
        s = repcore.admissible_k(a.m)
        extra = {"m": a.m, "minimum_k": str(s.minimum), "first_k": [str(Fraction(x)) for x in s.first_values]}
    cols = {
        "gamma_re": [g3.gamma.real], "gamma_im": [g3.gamma.imag], "omega": [g3.omega],
        "alpha_re": [M[0, 0].real], "alpha_im": [M[0, 0].imag], "beta_re": [M[0, 1].real], "beta_im": [M[0, 1].imag],
    }
    return ({"gamma1": a.gamma1, "omega1": a.omega1, "gamma2": a.gamma2, "omega2": a.omega2}, cols, extra)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="su11osc", description="Tables for the oscillator with Bargmann index k.")
    p.add_argument("--version", action="version", version=__version__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--config", default=None, help="key=value file with tolerances and truncation defaults")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=func)
        return s

    s = add("spectrum", cmd_spectrum, "levels hbar omega (n + k)")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--omega", type=float, default=1.0)
    s.add_argument("--hbar", type=float, default=1.0)

    s = add("rep-check", cmd_rep_check, "algebra residuals of a truncated representation")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--dim", type=int, default=None)

    s = add("coherent", cmd_coherent, "coherent-state amplitudes and moments")
    s.add_argument("--family", type=_choice(coherent.CoherentFamily), required=True)
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--param", type=parse_complex, required=True)

    s = add("rho", cmd_rho, "Bessel ratio I_2k(2z)/I_2k-1(2z)")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--z", type=parse_floats, required=True)

    s = add("action", cmd_action, "action variable of an integrable potential")
    s.add_argument("--potential", type=_choice(actionangle.PotentialKind), required=True)
    s.add_argument("--energy", type=parse_floats, required=True, help="reduced energies E/V0")
    s.add_argument("--V0", type=float, default=1.0)
    s.add_argument("--a", type=float, default=1.0)
    s.add_argument("--M", type=float, default=1.0)
    s.add_argument("--k", type=float, default=0.5)
    s.add_argument("--hbar", type=float, default=1.0)
    s.add_argument("--levels", type=int, default=None, help="also list quantized levels up to this n")

    s = add("density", cmd_density, "coherent-state probability density on a grid")
    s.add_argument("--space", type=_choice(hilbert.Space), required=True)
    s.add_argument("--family", type=_choice(coherent.CoherentFamily), required=True)
    s.add_argument("--k", type=float, default=0.5)
    s.add_argument("--param", type=parse_complex, required=True)
    s.add_argument("--start", type=float, required=True)
    s.add_argument("--stop", type=float, required=True)
    s.add_argument("--num", type=int, default=101)

    s = add("thermo", cmd_thermo, "canonical thermodynamics")
    s.add_argument("--beta-hw", dest="beta_hw", type=float, required=True)
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--hbar-omega", dest="hbar_omega", type=float, default=1.0)

    s = add("landau", cmd_landau, "Landau levels hbar |qB|/m (n + k)")
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--B", type=float, required=True)
    s.add_argument("--mass", type=float, required=True)
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--hbar", type=float, default=physapp.HBAR)

    s = add("stark", cmd_stark, "effective index in a static electric field (SI inputs)")
    s.add_argument("--k", type=float, default=0.5)
    s.add_argument("--Z", type=int, default=1)
    s.add_argument("--E0", type=float, required=True, help="field in V/m")
    s.add_argument("--nu", type=float, required=True, help="frequency in Hz")
    s.add_argument("--Mc2", type=float, required=True, help="rest energy in J")

    s = add("vacuum", cmd_vacuum, "cutoff vacuum energy density, or k for a target density")
    s.add_argument("--k", type=float, default=0.5)
    s.add_argument("--omega-hat", dest="omega_hat", type=float, default=None)
    s.add_argument("--ell", type=float, default=None, help="length in m")
    s.add_argument("--target-kev-cm3", dest="target_kev_cm3", type=float, default=None)

    s = add("mulliken", cmd_mulliken, "k from two transition frequencies")
    for name in ("Ea", "Eb", "omega1", "omega2"):
        s.add_argument(f"--{name}", type=float, required=True)
    s.add_argument("--omega-a1", dest="omega_a1", type=float, required=True)
    s.add_argument("--omega-b2", dest="omega_b2", type=float, required=True)
    s.add_argument("--hbar", type=float, default=1.0)

    s = add("cover", cmd_cover, "compose two universal-cover elements")
    s.add_argument("--gamma1", type=parse_complex, default=0j)
    s.add_argument("--omega1", type=float, default=0.0)
    s.add_argument("--gamma2", type=parse_complex, default=0j)
    s.add_argument("--omega2", type=float, default=0.0)
    s.add_argument("--m", type=int, default=None, help="list admissible k for the m-fold cover")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        cfg = load_config(args.config)
        params, cols, extra = args.func(args, cfg)
        doc = make_document(args.command, params, cols, cfg, extra)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (UsageError, DomainError, argparse.ArgumentTypeError, OSError) as exc:
        err.write(f"su11osc: error: {exc}\n")
        return 2
    except (ConvergenceError, TruncationError, FloatingPointError, OverflowError, ZeroDivisionError) as exc:
        err.write(f"su11osc: numerical failure: {exc}\n")
        return 3
    out.write(render(doc, args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
