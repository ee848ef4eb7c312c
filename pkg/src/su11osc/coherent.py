"""Barut-Girardello, Perelomov and Schroedinger-Glauber coherent states.

Parameters carry e^{-i phi} phases:  z = |z| e^{-i phi} (BG),
lambda = |lambda| e^{-i theta} (Perelomov), alpha = |alpha| e^{-i beta} (SG).

Number-basis amplitudes

    BG:        c_n = z^n / sqrt((2k)_n n! g_k(|z|^2))
    Perelomov: c_n = (1 - |lambda|^2)^k sqrt((2k)_n / n!) lambda^n
    SG:        c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!)

The three are eigenstates of K-, (K0 + k)^(-1) K- and A respectively.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import special as sp
from scipy.linalg import expm

from . import specfun
from .errors import DomainError, TruncationError
from .repcore import TruncatedRep, as_k, build_rep, expectation, variance

TAIL_TARGET = 1e-12
TAIL_ACCEPT = 1e-10
N_CAP = 1024


class CoherentFamily(str, enum.Enum):
    BG = "BG"
    PERELOMOV = "Perelomov"
    SG = "SG"


def _family(f) -> CoherentFamily:
    if isinstance(f, CoherentFamily):
        return f
    key = str(f).lower()
    for fam in CoherentFamily:
        if fam.value.lower() == key or fam.name.lower() == key:
            return fam
    raise DomainError(f"unknown coherent family {f!r}")


@dataclass(frozen=True, eq=False)
class CoherentState:
    family: CoherentFamily
    k: float
    param: complex
    amplitudes: np.ndarray
    tail_bound: float
    phase: complex = 1.0

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def padded(self, N: int) -> np.ndarray:
        v = np.zeros(N, dtype=complex)
        v[: self.dim] = self.amplitudes
        return v

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "param": [self.param.real, self.param.imag],
            "phase": [complex(self.phase).real, complex(self.phase).imag],
            "tail_bound": self.tail_bound,
            "amplitudes": [[float(c.real), float(c.imag)] for c in self.amplitudes],
        }


@dataclass(frozen=True)
class ExpectationReport:
    mean_K0: float
    mean_K1: float
    mean_K2: float
    mean_N: float
    var_K0: float
    var_K1: float
    var_K2: float

    def __post_init__(self):
        for v in (self.var_K0, self.var_K1, self.var_K2):
            if v < -1e-9:
                raise DomainError("negative variance")

    def as_array(self) -> np.ndarray:
        return np.array([self.mean_K0, self.mean_K1, self.mean_K2, self.mean_N,
                         self.var_K0, self.var_K1, self.var_K2])


def _check_param(fam: CoherentFamily, param: complex) -> complex:
    param = complex(param)
    if fam is CoherentFamily.PERELOMOV and not abs(param) < 1:
        raise DomainError("Perelomov parameter must satisfy |lambda| < 1")
    return param


# ---------------------------------------------------------------------------
# probabilities and tails


def _log_weights(fam, k, param, n):
    """log |c_n|^2 for integer array n (unnormalised families normalised here)."""
    r = abs(param)
    n = np.asarray(n, dtype=float)
    if fam is CoherentFamily.BG:
        if r == 0:
            return np.where(n == 0, 0.0, -np.inf)
        return (2 * n * math.log(r) - specfun.log_pochhammer(2 * k, n)
                - sp.gammaln(n + 1) - specfun.log_g_k(r * r, k))
    if fam is CoherentFamily.PERELOMOV:
        if r == 0:
            return np.where(n == 0, 0.0, -np.inf)
        return (2 * k * math.log1p(-r * r) + specfun.log_pochhammer(2 * k, n)
                - sp.gammaln(n + 1) + 2 * n * math.log(r))
    x = r * r
    if x == 0:
        return np.where(n == 0, 0.0, -np.inf)
    return -x + n * math.log(x) - sp.gammaln(n + 1)


def tail_probability(family, k, param, N: int) -> float:
    """Probability mass on n >= N."""
    fam = _family(family)
    kk = as_k(k)
    r2 = abs(param) ** 2
    if r2 == 0:
        return 0.0 if N >= 1 else 1.0
    if fam is CoherentFamily.SG:
        return float(sp.gammainc(N, r2))
    if fam is CoherentFamily.PERELOMOV:
        return float(sp.betainc(N, 2 * kk, r2))
    # BG: weights peak near n ~ |z| and decay past it; sum well beyond the peak
    r = math.sqrt(r2)
    n = np.arange(N, max(N, int(r + 50 * math.sqrt(r + 1))) + 400)
    lw = _log_weights(fam, kk, param, n)
    return float(np.exp(lw).sum())


def auto_dim(family, k, param, target: float = TAIL_TARGET, cap: int = N_CAP) -> int:
    """Smallest N whose tail probability is below ``target``."""
    fam = _family(family)
    lo = 1
    if tail_probability(fam, k, param, cap) >= target:
        raise TruncationError(f"{fam.value} state with |param|={abs(param):.4g} needs more than {cap} levels")
    hi = cap
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_probability(fam, k, param, mid) < target:
            hi = mid
        else:
            lo = mid + 1
    return max(lo, 2)


def number_distribution(family, k, param, n_max: int) -> np.ndarray:
    """p_n, n = 0..n_max, from the closed-form laws."""
    fam = _family(family)
    kk = as_k(k)
    param = _check_param(fam, param)
    n = np.arange(int(n_max) + 1)
    return np.exp(_log_weights(fam, kk, param, n))


# ---------------------------------------------------------------------------
# states


def amplitudes(family, k, param, N: int) -> np.ndarray:
    fam = _family(family)
    kk = as_k(k)
    param = _check_param(fam, param)
    n = np.arange(N)
    mod = np.exp(0.5 * _log_weights(fam, kk, param, n))
    return mod * np.exp(1j * n * cmath.phase(param)) if param != 0 else mod.astype(complex)


def make_state(family, k, param, N: int | None = None, tail_target: float = TAIL_TARGET) -> CoherentState:
    """Truncated coherent state with an analytic tail bound.

    With ``N=None`` the dimension is chosen so that the tail is below
    ``tail_target`` (default 1e-12, cap 1024).  An explicit N must give a
    tail below 1e-10.  The amplitude at the cutoff is of order
    sqrt(tail), so full-vector eigen-residuals need a tighter target.
    """
    fam = _family(family)
    kk = as_k(k)
    param = _check_param(fam, param)
    if N is None:
        N = auto_dim(fam, kk, param, tail_target)
    tail = tail_probability(fam, kk, param, N)
    if tail > TAIL_ACCEPT:
        raise TruncationError(f"tail {tail:.3g} exceeds {TAIL_ACCEPT} at N={N}")
    return CoherentState(fam, kk, param, amplitudes(fam, kk, param, N), tail)


def evolve(state: CoherentState, t: float) -> CoherentState:
    """Free evolution exp(-i K0 t): parameter rotates by e^{-it}, phase e^{-ikt}."""
    new_param = state.param * cmath.exp(-1j * t)
    phase = state.phase * cmath.exp(-1j * state.k * t)
    amps = phase * amplitudes(state.family, state.k, new_param, state.dim)
    return replace(state, param=new_param, amplitudes=amps, phase=phase)


# ---------------------------------------------------------------------------
# expectation values


def _sg_h(k: float, x: float, shift: int) -> float:
    """e^{-x} sum_n prod_{j<shift} sqrt(2k+n+j) x^n/n!."""
    n = np.arange(0, int(x + 40 * math.sqrt(x + 1) + 60))
    logw = -x + n * math.log(x) - sp.gammaln(n + 1) if x > 0 else np.where(n == 0, 0.0, -np.inf)
    f = np.ones_like(n, dtype=float)
    for j in range(shift):
        f = f * np.sqrt(2 * k + n + j)
    return float(np.sum(f * np.exp(logw)))


def expectations(family, k, param) -> ExpectationReport:
    """Closed-form means and variances of K0, K1, K2 (and the mean of N)."""
    fam = _family(family)
    kk = as_k(k)
    param = _check_param(fam, param)
    r = abs(param)
    if fam is CoherentFamily.BG:
        rho = specfun.rho_k(kk, r)
        m0 = kk + r * rho
        v0 = r * r * (1 - rho * rho) + (1 - 2 * kk) * r * rho
        return ExpectationReport(m0, param.real, -param.imag, r * rho, v0, m0 / 2, m0 / 2)
    if fam is CoherentFamily.PERELOMOV:
        l2 = r * r
        d = 1 - l2
        theta = -cmath.phase(param) if r > 0 else 0.0
        m0 = kk * (1 + l2) / d
        c2 = math.cos(2 * theta)
        v1 = 0.5 * kk * (1 + 2 * c2 * l2 + l2 * l2) / d ** 2
        v2 = 0.5 * kk * (1 - 2 * c2 * l2 + l2 * l2) / d ** 2
        return ExpectationReport(
            m0,
            2 * kk * r * math.cos(theta) / d,
            2 * kk * r * math.sin(theta) / d,
            m0 - kk,
            2 * kk * l2 / d ** 2,
            v1,
            v2,
        )
    # SG
    x = r * r
    h1 = _sg_h(kk, x, 1)
    h2 = _sg_h(kk, x, 2)
    mminus = param * h1              # <K->
    mminus2 = param * param * h2     # <K-^2>
    kpkm = x * x + 2 * kk * x        # <K+ K-> = <N(N + 2k - 1)>
    m0 = x + kk
    # K1^2 = (K+^2 + K-^2 + K+K- + K-K+)/4 with K-K+ = K+K- + 2K0
    k1sq = (2 * mminus2.real + 2 * kpkm + 2 * m0) / 4
    k2sq = (-2 * mminus2.real + 2 * kpkm + 2 * m0) / 4
    m1 = mminus.real
    m2 = -mminus.imag
    return ExpectationReport(m0, m1, m2, x, x, k1sq - m1 * m1, k2sq - m2 * m2)


def expectations_numeric(state: CoherentState, rep: TruncatedRep | None = None) -> ExpectationReport:
    """Same quantities from matrix sandwiches in a truncated representation."""
    N = state.dim + 8
    if rep is None or rep.dim < N:
        rep = build_rep(state.k, N)
    psi = state.padded(rep.dim)
    return ExpectationReport(
        expectation(rep.K0, psi).real,
        expectation(rep.K1, psi).real,
        expectation(rep.K2, psi).real,
        expectation(rep.Nop, psi).real,
        variance(rep.K0, psi),
        variance(rep.K1, psi),
        variance(rep.K2, psi),
    )


def perelomov_mean_number_to_modulus(nbar: float, k) -> float:
    """|lambda| from the mean quantum number: |lambda|^2 = nbar/(nbar + 2k)."""
    kk = as_k(k)
    return math.sqrt(nbar / (nbar + 2 * kk))


def eigen_residual(state: CoherentState) -> float:
    """Norm of (X - param)|state> for the family's defining operator X."""
    rep = build_rep(state.k, state.dim + 2)
    psi = state.padded(rep.dim)
    if state.family is CoherentFamily.BG:
        X = rep.Kminus
    elif state.family is CoherentFamily.PERELOMOV:
        X = np.diag(1.0 / (np.arange(rep.dim) + 2 * state.k)) @ rep.Kminus
    else:
        X = rep.A
    return float(np.linalg.norm(X @ psi - state.param * psi))


# ---------------------------------------------------------------------------
# overlaps


def overlap(state_b: CoherentState, state_a: CoherentState) -> complex:
    """<b|a>, closed form where available, otherwise the truncated sum."""
    if abs(state_a.k - state_b.k) > 1e-15:
        raise DomainError("overlap needs equal Bargmann index")
    k = state_a.k
    fa, fb = state_a.family, state_b.family
    a, b = state_a.param, state_b.param
    ph = complex(state_b.phase).conjugate() * complex(state_a.phase)
    if fa is fb is CoherentFamily.BG:
        num = specfun.g_k_series(b.conjugate() * a, k)
        return ph * num / math.sqrt(specfun.g_k(abs(a) ** 2, k) * specfun.g_k(abs(b) ** 2, k))
    if fa is fb is CoherentFamily.PERELOMOV:
        return ph * ((1 - abs(a) ** 2) * (1 - abs(b) ** 2)) ** k * (1 - b.conjugate() * a) ** (-2 * k)
    if fa is fb is CoherentFamily.SG:
        return ph * cmath.exp(-(abs(a) ** 2 + abs(b) ** 2) / 2 + b.conjugate() * a)
    if {fa, fb} == {CoherentFamily.BG, CoherentFamily.PERELOMOV}:
        lam, z = (b, a) if fb is CoherentFamily.PERELOMOV else (a, b)
        val = (1 - abs(lam) ** 2) ** k * cmath.exp(lam.conjugate() * z) / math.sqrt(specfun.g_k(abs(z) ** 2, k))
        return ph * (val if fb is CoherentFamily.PERELOMOV else val.conjugate())
    return overlap_numeric(state_b, state_a)


def overlap_numeric(state_b: CoherentState, state_a: CoherentState) -> complex:
    N = max(state_a.dim, state_b.dim)
    return complex(np.vdot(state_b.padded(N), state_a.padded(N)))


def transition_probability_bg_perelomov(k, lam: complex, z: complex) -> float:
    """|<lambda|z>|^2 = (1-|lambda|^2)^{2k} exp(2 Re(lambda* z)) / g_k(|z|^2)."""
    kk = as_k(k)
    return (1 - abs(lam) ** 2) ** (2 * kk) * math.exp(2 * (lam.conjugate() * z).real) / specfun.g_k(abs(z) ** 2, kk)


def bg_perelomov_gaussian(k, lam: complex, z: complex) -> float:
    """Large-|z| form of the BG-Perelomov transition probability."""
    kk = as_k(k)
    r = abs(z)
    phi = -cmath.phase(z)
    theta = -cmath.phase(lam)
    pre = (1 - abs(lam) ** 2) ** (2 * kk) * 2 * math.sqrt(math.pi) * r ** (2 * kk - 0.5) / math.gamma(2 * kk)
    return pre * math.exp(2 * abs(lam) * r * math.cos(phi - theta) - 2 * r)


# ---------------------------------------------------------------------------
# generating operators


def displacement_unitary(alpha: complex, rep: TruncatedRep) -> np.ndarray:
    """U_SG = exp(alpha A^dag - alpha* A)."""
    if abs(alpha) ** 2 > rep.dim / 4:
        raise TruncationError("|alpha|^2 too large for this truncation")
    return expm(alpha * rep.Adag - np.conj(alpha) * rep.A)


def perelomov_unitary(w: complex, rep: TruncatedRep) -> np.ndarray:
    """U_P = exp((w/2) K+ - (w*/2) K-); maps |k,0> to |k, tanh(|w|/2) e^{i arg w}>."""
    lam = math.tanh(abs(w) / 2)
    if tail_probability(CoherentFamily.PERELOMOV, rep.k, lam, rep.dim // 2) > 1e-10:
        raise TruncationError("boost too large for this truncation")
    return expm(0.5 * w * rep.Kplus - 0.5 * np.conj(w) * rep.Kminus)


def perelomov_lambda(w: complex) -> complex:
    return math.tanh(abs(w) / 2) * cmath.exp(1j * cmath.phase(w)) if w != 0 else 0j


def e_plus(rep: TruncatedRep) -> np.ndarray:
    """E_{k,+} = K+ (K0 + k)^(-1)."""
    return rep.Kplus @ np.diag(1.0 / (np.arange(rep.dim) + 2 * rep.k))


def e_minus(rep: TruncatedRep) -> np.ndarray:
    """E_{k,-} = (K0 + k)^(-1) K-."""
    return np.diag(1.0 / (np.arange(rep.dim) + 2 * rep.k)) @ rep.Kminus


def bg_generator(z: complex, rep: TruncatedRep) -> np.ndarray:
    """F_k(z) = exp(z E_{k,+}); F|k,0> = sqrt(g_k(|z|^2)) |k,z> (not unitary)."""
    return expm(z * e_plus(rep))


def linear_interaction(theta: float, rep: TruncatedRep) -> np.ndarray:
    """W(theta) = (e^{-i theta} K+ + e^{i theta} K-)/2."""
    return 0.5 * (cmath.exp(-1j * theta) * rep.Kplus + cmath.exp(1j * theta) * rep.Kminus)


# ---------------------------------------------------------------------------
# classical correspondence


def _wrap(phi: float) -> float:
    w = math.remainder(phi, 2 * math.pi)
    return math.pi if w == -math.pi else w


def classical_params(family, k, param):
    """(phi, I) encoded by the coherent-state parameter."""
    fam = _family(family)
    param = _check_param(fam, param)
    r = abs(param)
    phi = _wrap(-cmath.phase(param)) if r > 0 else 0.0
    if fam is CoherentFamily.BG:
        return phi, r
    if fam is CoherentFamily.PERELOMOV:
        w = math.log((1 + r) / (1 - r))
        return phi, math.sinh(w)
    return phi, r * r


def param_from_classical(family, phi: float, I: float) -> complex:
    """Inverse of ``classical_params``."""
    fam = _family(family)
    if I < 0:
        raise DomainError("action must be nonnegative")
    if fam is CoherentFamily.BG:
        mod = I
    elif fam is CoherentFamily.PERELOMOV:
        mod = I / (1 + math.sqrt(I * I + 1))
    else:
        mod = math.sqrt(I)
    return mod * cmath.exp(-1j * phi)
