"""Truncated matrix realisations of the positive discrete series D_k^(+).

Basis vectors |k, n>, n = 0..N-1, with

    K0 |n> = (n + k) |n>
    K+ |n> = sqrt((2k + n)(n + 1)) |n + 1>
    K- |n> = sqrt((2k + n - 1) n) |n - 1>

The composite ladder pair A = (K0 + k)^(-1/2) K-, A^dag = K+ (K0 + k)^(-1/2)
acts like the canonical one for every k.  Truncation breaks closure at the
last basis vector, so algebraic identities only hold on the leading
(N-2) x (N-2) block; ``interior`` extracts that block.

Units are dimensionless (hbar = omega = M = 1) unless a physical scale is
supplied explicitly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import expm

from .errors import DomainError

MAX_DIM = 1024


@dataclass(frozen=True)
class BargmannIndex:
    k: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k > 0):
            raise DomainError(f"Bargmann index must be positive, got {self.k}")

    def __float__(self):
        return float(self.k)


def as_k(k) -> float:
    """Accept a float or BargmannIndex and return a validated float."""
    if isinstance(k, BargmannIndex):
        return k.k
    return BargmannIndex(float(k)).k


@dataclass(frozen=True, eq=False)
class TruncatedRep:
    k: float
    dim: int
    K0: np.ndarray
    Kplus: np.ndarray
    Kminus: np.ndarray
    K1: np.ndarray
    K2: np.ndarray
    A: np.ndarray
    Adag: np.ndarray
    Nop: np.ndarray
    Q: np.ndarray
    P: np.ndarray
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("K0", "Kplus", "Kminus", "K1", "K2", "A", "Adag", "Nop", "Q", "P"):
            getattr(self, name).setflags(write=False)

    def basis(self, n: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[n] = 1.0
        return v

    @property
    def hamiltonian_QP(self) -> np.ndarray:
        """(Q^2 + P^2)/2 in units of hbar*omega."""
        return 0.5 * (self.Q @ self.Q + self.P @ self.P)

    @property
    def casimir(self) -> np.ndarray:
        return self.K1 @ self.K1 + self.K2 @ self.K2 - self.K0 @ self.K0

    def physical_QP(self, mass: float = 1.0):
        """Q and P scaled by lambda0 = sqrt(hbar/(M omega))."""
        lam0 = math.sqrt(self.hbar / (mass * self.omega))
        return lam0 * self.Q, self.hbar / lam0 * self.P


def interior(M: np.ndarray, margin: int = 2) -> np.ndarray:
    """Leading block with ``margin`` rows/columns removed at the cutoff."""
    n = M.shape[0] - margin
    return M[:n, :n]


def commutator(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    return X @ Y - Y @ X


def _rep_from_ladder(k: float, K0: np.ndarray, Kplus: np.ndarray, omega=1.0, hbar=1.0) -> TruncatedRep:
    K0 = np.asarray(K0, dtype=complex)
    Kplus = np.asarray(Kplus, dtype=complex)
    Kminus = Kplus.conj().T
    K1 = 0.5 * (Kplus + Kminus)
    K2 = (Kplus - Kminus) / 2j
    Bk = np.diag(1.0 / np.sqrt(np.real(np.diag(K0)) + k))
    A = Bk @ Kminus
    Adag = Kplus @ Bk
    Nop = Adag @ A
    Q = (A + Adag) / math.sqrt(2)
    P = 1j * (Adag - A) / math.sqrt(2)
    return TruncatedRep(k, K0.shape[0], K0, Kplus, Kminus, K1, K2, A, Adag, Nop, Q, P, omega, hbar)


def kplus_entries(k: float, N: int) -> np.ndarray:
    n = np.arange(N - 1)
    return np.sqrt((2 * k + n) * (n + 1))


def build_rep(k, N: int = 64, omega: float = 1.0, hbar: float = 1.0) -> TruncatedRep:
    """N-dimensional cutoff of D_k^(+) with all derived operators."""
    kk = as_k(k)
    N = int(N)
    if N < 2:
        raise DomainError("truncation dimension must be at least 2")
    if N > MAX_DIM:
        raise DomainError(f"truncation dimension capped at {MAX_DIM}")
    if not (omega > 0 and hbar > 0):
        raise DomainError("omega and hbar must be positive")
    K0 = np.diag(np.arange(N) + kk)
    Kplus = np.diag(kplus_entries(kk, N), -1)
    return _rep_from_ladder(kk, K0, Kplus, omega, hbar)


def holstein_primakoff_kplus(k, N: int) -> np.ndarray:
    """a^dag sqrt(N + 2k) from a canonical truncated ladder a."""
    kk = as_k(k)
    a = np.diag(np.sqrt(np.arange(1, N)), 1)
    return a.T @ np.diag(np.sqrt(np.arange(N) + 2 * kk))


# ---------------------------------------------------------------------------
# spectra


@dataclass(frozen=True)
class EnergySpectrum:
    k: float
    omega: float
    levels: tuple

    def __post_init__(self):
        lv = np.asarray(self.levels)
        if lv.size > 1 and not np.all(np.diff(lv) > 0):
            raise DomainError("levels must increase")


def spectrum(k, n_max: int, omega: float = 1.0, hbar: float = 1.0) -> EnergySpectrum:
    """Levels hbar*omega*(n + k), n = 0..n_max."""
    kk = as_k(k)
    if n_max < 0:
        raise DomainError("n_max must be nonnegative")
    levels = tuple(hbar * omega * (n + kk) for n in range(int(n_max) + 1))
    return EnergySpectrum(kk, omega, levels)


# ---------------------------------------------------------------------------
# one-mode and two-mode constructions


def fock_annihilation(N: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, N, dtype=float)), 1)


def metaplectic_split(N: int):
    """Even/odd parity sectors of the one-mode quadratic algebra.

    K0 = (2 a^dag a + 1)/4, K+ = a^dag^2/2, K- = a^2/2 on an N-dimensional
    Fock block; the even sector carries k = 1/4 and the odd one k = 3/4.
    Returns the pair of TruncatedRep objects (each of dimension N/2).
    """
    N = int(N)
    if N % 2 or N < 4:
        raise DomainError("metaplectic_split needs an even N >= 4")
    a = fock_annihilation(N)
    ad = a.T
    K0 = (2 * ad @ a + np.eye(N)) / 4
    Kp = ad @ ad / 2
    even = np.arange(0, N, 2)
    odd = np.arange(1, N, 2)
    reps = []
    for idx, k in ((even, 0.25), (odd, 0.75)):
        sub = np.ix_(idx, idx)
        reps.append(_rep_from_ladder(k, K0[sub], Kp[sub]))
    return tuple(reps)


def metaplectic_full(N: int):
    """Full one-mode (K0, K+, K-) matrices before the parity split."""
    a = fock_annihilation(N)
    ad = a.T
    return (2 * ad @ a + np.eye(N)) / 4, ad @ ad / 2, a @ a / 2


def two_mode_rep(d: int, N: int) -> TruncatedRep:
    """K+ = a1^dag a2^dag on the subspace n1 - n2 = d, giving k = (1 + d)/2.

    Two truncated Fock modes are tensored and the fixed-difference states
    |n + d, n>, n = 0..N-1, are projected out.
    """
    d = int(d)
    if d < 0:
        raise DomainError("d must be nonnegative")
    n1dim, n2dim = N + d + 1, N + 1
    a1 = np.kron(fock_annihilation(n1dim), np.eye(n2dim))
    a2 = np.kron(np.eye(n1dim), fock_annihilation(n2dim))
    Kp = a1.T @ a2.T
    K0 = (a1.T @ a1 + a2.T @ a2 + np.eye(n1dim * n2dim)) / 2
    idx = np.array([(n + d) * n2dim + n for n in range(N)])
    sub = np.ix_(idx, idx)
    return _rep_from_ladder((1 + d) / 2, K0[sub], Kp[sub])


def two_mode_k0_eigenvalue(n1: int, n2: int) -> float:
    return (n1 + n2 + 1) / 2


# ---------------------------------------------------------------------------
# admissible k on m-fold covers


@dataclass(frozen=True)
class AdmissibleSet:
    m: int
    minimum: Fraction
    first_values: tuple

    def contains(self, k: float, tol: float = 1e-12) -> bool:
        x = k * self.m
        return x > 0.5 and abs(x - round(x)) < tol * max(1.0, abs(x))


def admissible_k(m: int) -> AdmissibleSet:
    """k = mu/m, mu = 1, 2, ... for the m-fold cover; first 16 values listed."""
    m = int(m)
    if m < 1:
        raise DomainError("m must be a positive integer")
    vals = tuple(Fraction(mu, m) for mu in range(1, 17))
    return AdmissibleSet(m, Fraction(1, m), vals)


# ---------------------------------------------------------------------------
# universal cover (gamma, omega)


@dataclass(frozen=True)
class CoverElement:
    gamma: complex
    omega: float

    def __post_init__(self):
        if not abs(self.gamma) < 1:
            raise DomainError("|gamma| must be < 1")
        object.__setattr__(self, "gamma", complex(self.gamma))
        object.__setattr__(self, "omega", float(self.omega))


IDENTITY = CoverElement(0j, 0.0)


def cover_compose(g2: CoverElement, g1: CoverElement) -> CoverElement:
    """Group law (gamma3, omega3) = g2 o g1 on the universal cover."""
    e = cmath.exp(-2j * g1.omega)
    X = g1.gamma.conjugate() * g2.gamma * e
    gamma3 = (g1.gamma + g2.gamma * e) / (1 + X)
    # principal branch, Im log in (-pi, pi]
    omega3 = g1.omega + g2.omega + (cmath.log((1 + X) / (1 + X.conjugate())) / 2j).real
    return CoverElement(gamma3, omega3)


def cover_inverse(g: CoverElement) -> CoverElement:
    alpha, beta = _alpha_beta(g)
    # inverse SU(1,1) element has alpha* and -beta
    return CoverElement(-beta / alpha.conjugate(), -g.omega)


def _alpha_beta(g: CoverElement):
    alpha = cmath.exp(1j * g.omega) / math.sqrt(1 - abs(g.gamma) ** 2)
    return alpha, g.gamma * alpha


def cover_to_su11(g: CoverElement) -> np.ndarray:
    """Projection onto SU(1,1): [[alpha, beta], [beta*, alpha*]]."""
    alpha, beta = _alpha_beta(g)
    return np.array([[alpha, beta], [beta.conjugate(), alpha.conjugate()]])


def su11_to_cover(M: np.ndarray, winding: int = 0) -> CoverElement:
    """Lift an SU(1,1) matrix; ``winding`` selects the sheet (omega += 2 pi winding)."""
    alpha, beta = M[0, 0], M[0, 1]
    return CoverElement(beta / alpha, cmath.phase(alpha) + 2 * math.pi * winding)


def rotation_element(theta: float) -> CoverElement:
    return CoverElement(0j, theta / 2)


def boost_a_element(tau: float) -> CoverElement:
    return CoverElement(1j * math.tanh(tau / 2), 0.0)


def boost_b_element(s: float) -> CoverElement:
    return CoverElement(math.tanh(s / 2), 0.0)


def null_element(xi: float) -> CoverElement:
    w = math.atan(xi / 2)
    return CoverElement(xi / math.sqrt(xi * xi + 4) * cmath.exp(-1j * w), w)


# ---------------------------------------------------------------------------
# dynamics


def time_evolution(rep: TruncatedRep, t: float) -> np.ndarray:
    """U(t) = exp(-i K0 t), diagonal in the number basis."""
    return np.diag(np.exp(-1j * (np.arange(rep.dim) + rep.k) * t))


def parity(rep: TruncatedRep) -> np.ndarray:
    """Pi = U(-pi) = exp(i pi (N + k)), including its k-dependent global phase."""
    return time_evolution(rep, -math.pi)


def squeeze(rep: TruncatedRep, gamma: float) -> np.ndarray:
    """S = exp(gamma/2 (A^2 - A^dag^2)); S Q S^dag ~ e^gamma Q on the interior."""
    G = 0.5 * gamma * (rep.A @ rep.A - rep.Adag @ rep.Adag)
    return expm(G)


def expectation(op: np.ndarray, psi: np.ndarray) -> complex:
    return complex(np.vdot(psi, op @ psi))


def variance(op: np.ndarray, psi: np.ndarray) -> float:
    m = expectation(op, psi)
    return float(np.real(expectation(op @ op, psi) - m * m))


def number_state_uncertainties(rep: TruncatedRep, n: int):
    """((Delta K1)(Delta K2), (Delta Q)(Delta P)) in |k, n>."""
    v = rep.basis(n)
    dk = math.sqrt(variance(rep.K1, v) * variance(rep.K2, v))
    dq = math.sqrt(variance(rep.Q, v) * variance(rep.P, v))
    return dk, dq


def rep_to_json(rep: TruncatedRep, which=("K0", "Kplus", "Kminus", "K1", "K2", "A", "Adag", "Q", "P")) -> dict:
    """Serialisable document: matrices row-major as [re, im] pairs."""
    def enc(M):
        return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M, dtype=complex)]

    return {"k": rep.k, "N": rep.dim, "matrices": {name: enc(getattr(rep, name)) for name in which}}


def rep_from_json(doc: dict) -> dict:
    return {
        name: np.array([[complex(re, im) for re, im in row] for row in rows])
        for name, rows in doc["matrices"].items()
    }
