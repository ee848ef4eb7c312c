"""Physics applications with a free Bargmann index k.

Physical inputs are SI unless a function says otherwise; thermodynamics
works with x = beta hbar omega and reports energies in units of
``hbar_omega``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass

import numpy as np
from scipy import constants as sc

from .errors import DomainError
from .repcore import as_k

# CODATA values, one table
CONSTANTS = {
    "hbar": sc.hbar,
    "c": sc.c,
    "epsilon0": sc.epsilon_0,
    "e": sc.e,
    "alpha": sc.fine_structure,
    "keV": sc.kilo * sc.electron_volt,
}
HBAR = CONSTANTS["hbar"]
C_LIGHT = CONSTANTS["c"]

# observed dark-energy density c^2 rho_Lambda ~ 4 keV / cm^3, in J/m^3
DARK_ENERGY_DENSITY = 4 * CONSTANTS["keV"] / 1e-6


# ---------------------------------------------------------------------------
# thermodynamics


@dataclass(frozen=True)
class ThermoReport:
    Z: float
    F: float
    U: float
    dE2: float
    S_over_kB: float
    beta_hw: float

    def to_json(self) -> dict:
        return asdict(self)


def _check_x(beta_hw: float):
    if not beta_hw > 0:
        raise DomainError("beta hbar omega must be positive")


def log_partition(beta_hw: float, k) -> float:
    """ln Z = -x k - ln(1 - e^{-x})."""
    _check_x(beta_hw)
    return -beta_hw * as_k(k) - math.log(-math.expm1(-beta_hw))


def log_partition_d2_fd(beta_hw: float, k, rel: float = 5e-3) -> float:
    """d^2 ln Z / d x^2 by central differences with step rel*x and one Richardson step."""
    _check_x(beta_hw)
    x = beta_hw

    def d2(h):
        return (log_partition(x + h, k) - 2 * log_partition(x, k) + log_partition(x - h, k)) / (h * h)

    h = rel * x
    return (4 * d2(h / 2) - d2(h)) / 3


def thermo(beta_hw: float, k, hbar_omega: float = 1.0) -> ThermoReport:
    """Canonical ensemble of the oscillator with spectrum hbar omega (n + k).

    Z = e^{-xk}/(1 - e^{-x}),  F = -ln Z / beta,  U = hbar w (k + 1/(e^x - 1)),
    dE^2 = (hbar w)^2 e^x/(e^x - 1)^2,  S/kB = -ln(1 - e^{-x}) + x/(e^x - 1).
    """
    _check_x(beta_hw)
    kk = as_k(k)
    x = beta_hw
    lnZ = log_partition(x, kk)
    bose = 1 / math.expm1(x)
    U = hbar_omega * (kk + bose)
    dE2 = hbar_omega ** 2 * bose * (1 + bose)
    S = -math.log(-math.expm1(-x)) + x * bose
    return ThermoReport(math.exp(lnZ), -hbar_omega * lnZ / x, U, dE2, S, x)


def state_probabilities(beta_hw: float, n_max: int) -> np.ndarray:
    """p_n = e^{-xn}(1 - e^{-x}); the factor e^{-xk} cancels against Z."""
    _check_x(beta_hw)
    n = np.arange(int(n_max) + 1)
    return np.exp(-beta_hw * n) * -math.expm1(-beta_hw)


def state_probabilities_from_levels(beta_hw: float, k, n_max: int) -> np.ndarray:
    """exp(-x(n+k))/Z evaluated literally, as an independent route."""
    kk = as_k(k)
    n = np.arange(int(n_max) + 1)
    return np.exp(-beta_hw * (n + kk) - log_partition(beta_hw, kk))


# ---------------------------------------------------------------------------
# cavity modes and vacuum energy


@dataclass(frozen=True)
class CavitySpec:
    L: float
    epsilon: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        if not (self.L > 0 and self.epsilon > 0 and self.mu > 0):
            raise DomainError("L, epsilon and mu must be positive")

    @property
    def refractive_index(self) -> float:
        return math.sqrt(self.epsilon * self.mu)


def cavity_mode(spec: CavitySpec, m) -> float:
    """omega = (c/n)|l|, l = 2 pi m / L."""
    m = np.asarray(m, dtype=float)
    if m.shape != (3,):
        raise DomainError("mode index must have three components")
    l = 2 * math.pi * np.linalg.norm(m) / spec.L
    return C_LIGHT / spec.refractive_index * l


def ground_sum(spec: CavitySpec, k, modes, hbar: float = HBAR) -> float:
    """Ground-state energy 2 k hbar sum omega over a finite mode list (two polarisations)."""
    kk = as_k(k)
    return 2 * kk * hbar * sum(cavity_mode(spec, m) for m in modes)


def vacuum_energy_density(k, omega_hat: float | None = None, ell: float | None = None) -> float:
    """k hbar omega_hat^4 / (4 pi^2 c^3) = 4 pi^2 k hbar c / ell^4  (J/m^3).

    k = 0 is accepted here and gives zero.
    """
    kk = float(getattr(k, "k", k))
    if kk < 0:
        raise DomainError("k must be nonnegative")
    if (omega_hat is None) == (ell is None):
        raise DomainError("give exactly one of omega_hat or ell")
    if ell is not None:
        if not ell > 0:
            raise DomainError("ell must be positive")
        omega_hat = 2 * math.pi * C_LIGHT / ell
    if not omega_hat > 0:
        raise DomainError("omega_hat must be positive")
    return kk * HBAR * omega_hat ** 4 / (4 * math.pi ** 2 * C_LIGHT ** 3)


def solve_k_for_density(target: float, ell: float) -> float:
    """k such that the cutoff density at length ell equals target (J/m^3)."""
    if not (target > 0 and ell > 0):
        raise DomainError("target and ell must be positive")
    return target * ell ** 4 / (4 * math.pi ** 2 * HBAR * C_LIGHT)


# ---------------------------------------------------------------------------
# charged oscillator in a static field


@dataclass(frozen=True)
class StarkResult:
    k_eff: float
    delta: float
    nonpositive: bool


def stark_delta(Z: int, E0: float, nu: float, Mc2: float) -> float:
    """delta = alpha Z^2 eps0 E0^2 lambda^3 / (4 pi^2 M c^2), lambda = c/nu."""
    if not (nu > 0 and Mc2 > 0):
        raise DomainError("frequency and rest energy must be positive")
    lam = C_LIGHT / nu
    return CONSTANTS["alpha"] * Z * Z * CONSTANTS["epsilon0"] * E0 ** 2 * lam ** 3 / (4 * math.pi ** 2 * Mc2)


def stark_delta_from_shift(Z: int, E0: float, nu: float, Mc2: float) -> float:
    """Same quantity from the completed square: Z^2 e^2 E0^2 / (2 w^2 M) / (hbar w)."""
    w = 2 * math.pi * nu
    M = Mc2 / C_LIGHT ** 2
    V0 = (Z * CONSTANTS["e"] * E0) ** 2 / (2 * w * w * M)
    return V0 / (HBAR * w)


def stark_effective_k(k, Z: int, E0: float, nu: float, Mc2: float) -> StarkResult:
    """k_eff = k - delta; ``nonpositive`` flags a physically inadmissible index."""
    kk = as_k(k)
    d = stark_delta(Z, E0, nu, Mc2)
    res = StarkResult(kk - d, d, kk - d <= 0)
    if res.nonpositive:
        warnings.warn(f"effective Bargmann index {res.k_eff:.4g} is not positive", RuntimeWarning, stacklevel=2)
    return res


# ---------------------------------------------------------------------------
# Landau levels


def landau_levels(q: float, B: float, mass: float, k, n_max: int, hbar: float = HBAR) -> np.ndarray:
    """E_n = hbar (|qB|/m)(n + k)."""
    kk = as_k(k)
    if q * B == 0:
        raise DomainError("Landau levels need a nonzero field and charge")
    if not mass > 0:
        raise DomainError("mass must be positive")
    w = abs(q * B) / mass
    return hbar * w * (np.arange(int(n_max) + 1) + kk)


# ---------------------------------------------------------------------------
# k from two transition frequencies


def mulliken_synthesize(k, E_a: float, E_b: float, omega1: float, omega2: float, hbar: float = 1.0):
    """Transition frequencies E_a -> hbar w1 k and E_b -> hbar w2 k."""
    kk = as_k(k)
    return (E_a - hbar * omega1 * kk) / hbar, (E_b - hbar * omega2 * kk) / hbar


def mulliken_extract_k(E_a: float, E_b: float, omega1: float, omega2: float,
                       omega_a1: float, omega_b2: float, hbar: float = 1.0) -> float:
    """Solve w_a1 - w_b2 = (E_a - E_b)/hbar - k (w1 - w2) for k."""
    if omega1 == omega2:
        raise DomainError("the two oscillator frequencies must differ")
    return ((E_a - E_b) / hbar - (omega_a1 - omega_b2)) / (omega1 - omega2)
