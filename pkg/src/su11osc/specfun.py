"""Special-function kernels: Pochhammer symbols, modified Bessel functions,
the Bessel ratio rho_k, Laguerre polynomials and hypergeometric series.

Everything here is a pure function of its arguments.  Scalars in, scalars
out, except where noted (``rho_k`` and ``laguerre`` accept arrays).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .errors import ConvergenceError, DomainError

_LOG_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class SpecFunConfig:
    series_tol: float = 1e-15
    max_terms: int = 10_000
    asymptotic_switch: float = 30.0

    def __post_init__(self):
        if not self.series_tol > 0:
            raise DomainError("series_tol must be positive")
        if self.max_terms < 64:
            raise DomainError("max_terms must be at least 64")
        if not self.asymptotic_switch > 0:
            raise DomainError("asymptotic_switch must be positive")


DEFAULT = SpecFunConfig()


# ---------------------------------------------------------------------------
# Pochhammer


def pochhammer(a: float, n: int) -> float:
    """Rising factorial a(a+1)...(a+n-1), with (a)_0 = 1.

    Short products are multiplied out; long ones go through log-gamma with
    the sign tracked separately.  Raises OverflowError if the result is not
    representable.
    """
    n = int(n)
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return 1.0
    if a <= 0 and float(a).is_integer() and n > -a:
        return 0.0
    if n <= 64:
        out = 1.0
        for j in range(n):
            out *= a + j
        if not math.isfinite(out):
            raise OverflowError(f"pochhammer({a}, {n}) overflows")
        return out
    logmag = sp.gammaln(a + n) - sp.gammaln(a)
    if logmag > _LOG_MAX:
        raise OverflowError(f"pochhammer({a}, {n}) overflows")
    sign = sp.gammasgn(a + n) * sp.gammasgn(a)
    return float(sign * math.exp(logmag))


def log_pochhammer(a: float, n):
    """log((a)_n) for a > 0; vectorised over n."""
    if a <= 0:
        raise DomainError("log_pochhammer needs a > 0")
    n = np.asarray(n, dtype=float)
    return sp.gammaln(a + n) - sp.gammaln(a)


def pochhammer_ratio_seq(a: float, b: float, N: int) -> np.ndarray:
    """Array of (a)_n / (b)_n for n = 0..N-1, built by running products."""
    n = np.arange(N - 1, dtype=float)
    factors = (a + n) / (b + n)
    return np.concatenate(([1.0], np.cumprod(factors)))


# ---------------------------------------------------------------------------
# Modified Bessel functions


def _bessel_i_series(nu: float, x: float, cfg: SpecFunConfig) -> float:
    h2 = 0.25 * x * x
    term = 1.0
    total = 1.0
    m = 0
    while True:
        m += 1
        term *= h2 / (m * (nu + m))
        total += term
        if term < cfg.series_tol * total:
            break
        if m >= cfg.max_terms:
            raise ConvergenceError(f"I_{nu}({x}) power series did not converge")
    logpre = nu * math.log(0.5 * x) - sp.gammaln(nu + 1.0)
    return math.exp(logpre) * total if logpre < _LOG_MAX else math.exp(logpre + math.log(total))


def _bessel_i_asymptotic(nu: float, x: float, cfg: SpecFunConfig):
    """Hankel expansion e^x/sqrt(2 pi x) * sum (-1)^m a_m(nu)/x^m.

    Returns None when the divergent series cannot reach the tolerance.
    """
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    prev = math.inf
    for m in range(1, 200):
        term *= -(mu - (2 * m - 1) ** 2) / (m * 8.0 * x)
        if abs(term) > prev:
            return None
        total += term
        if abs(term) < cfg.series_tol * abs(total):
            return math.exp(x) / math.sqrt(2.0 * math.pi * x) * total
        prev = abs(term)
    return None


def bessel_i(nu: float, x: float, cfg: SpecFunConfig = DEFAULT) -> float:
    """Modified Bessel function of the first kind I_nu(x), nu > -1, x >= 0."""
    if nu <= -1:
        raise DomainError("bessel_i requires nu > -1")
    if x < 0 or not math.isfinite(x):
        raise DomainError("bessel_i requires finite x >= 0")
    if x == 0.0:
        if nu == 0:
            return 1.0
        return 0.0 if nu > 0 else math.inf
    if x > cfg.asymptotic_switch:
        val = _bessel_i_asymptotic(nu, x, cfg)
        if val is not None:
            return val
    return _bessel_i_series(nu, x, cfg)


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel function of the second kind K_nu(x), x > 0.

    Symmetric in the order: K_{-nu} = K_nu.
    """
    if not x > 0:
        raise DomainError("bessel_k requires x > 0")
    nu = abs(nu)
    # K_nu = K_0 + O(nu^2); scipy returns nan for subnormal orders
    if nu < 1e-150:
        nu = 0.0
    return float(sp.kv(nu, x))


def bessel_k_small(nu: float, x: float) -> float:
    """Leading small-argument behaviour of K_nu(x)."""
    nu = abs(nu)
    if nu == 0:
        return math.log(2.0 / x) - np.euler_gamma
    return 0.5 * math.gamma(nu) * (0.5 * x) ** (-nu)


# ---------------------------------------------------------------------------
# Barut-Girardello normalisation g_k


def _kval(k) -> float:
    kk = float(getattr(k, "k", k))
    if not kk > 0:
        raise DomainError("Bargmann index must be positive")
    return kk


def g_k_series(x, k, cfg: SpecFunConfig = DEFAULT):
    """sum_n x^n / ((2k)_n n!) by direct summation; x may be complex."""
    kk = _kval(k)
    term = 1.0 + 0j if isinstance(x, complex) else 1.0
    total = term
    n = 0
    while True:
        term = term * x / ((2 * kk + n) * (n + 1))
        n += 1
        total += term
        if abs(term) < cfg.series_tol * abs(total) and n > abs(x) ** 0.5:
            break
        if n >= cfg.max_terms:
            raise ConvergenceError("g_k series did not converge")
    return total


def g_k_bessel(x: float, k, cfg: SpecFunConfig = DEFAULT) -> float:
    """Gamma(2k) |z|^{1-2k} I_{2k-1}(2|z|) with |z| = sqrt(x)."""
    kk = _kval(k)
    if x == 0:
        return 1.0
    z = math.sqrt(x)
    return math.gamma(2 * kk) * z ** (1 - 2 * kk) * bessel_i(2 * kk - 1, 2 * z, cfg)


def g_k_asymptotic(x: float, k) -> float:
    kk = _kval(k)
    z = math.sqrt(x)
    return math.gamma(2 * kk) * math.exp(2 * z) / (2 * math.sqrt(math.pi) * z ** (2 * kk - 0.5))


def g_k(x: float, k, cfg: SpecFunConfig = DEFAULT) -> float:
    """Barut-Girardello normalisation g_k(x), x = |z|^2 >= 0."""
    if x < 0:
        raise DomainError("g_k takes x = |z|^2 >= 0")
    return float(g_k_series(float(x), k, cfg))


def log_g_k(x: float, k, cfg: SpecFunConfig = DEFAULT) -> float:
    """log g_k(x), usable far beyond the overflow point of g_k itself."""
    kk = _kval(k)
    if x < 0:
        raise DomainError("log_g_k takes x >= 0")
    if x == 0:
        return 0.0
    # log terms: n log x - log (2k)_n - log n!; sum relative to the largest
    nmax = int(4 * math.sqrt(x) + 60)
    while True:
        n = np.arange(nmax + 1)
        lt = n * math.log(x) - log_pochhammer(2 * kk, n) - sp.gammaln(n + 1.0)
        top = lt.max()
        if lt[-1] < top + math.log(cfg.series_tol) - 5:
            break
        nmax *= 2
        if nmax > cfg.max_terms * 10:
            raise ConvergenceError("log_g_k did not converge")
    return float(top + math.log(np.exp(lt - top).sum()))


# ---------------------------------------------------------------------------
# rho_k


def rho_k_asymptotic(k, z):
    """Large-|z| expansion 1 - (4k-1)/(4z) + (16(k^2-k)+3)/(32 z^2)."""
    kk = _kval(k)
    z = np.asarray(z, dtype=float)
    return 1 - (4 * kk - 1) / (4 * z) + (16 * (kk * kk - kk) + 3) / (32 * z * z)


def rho_k_small(k, z):
    """Small-|z| form |z|/(2k) (1 - |z|^2/(2k(2k+1)))."""
    kk = _kval(k)
    z = np.asarray(z, dtype=float)
    return z / (2 * kk) * (1 - z * z / (2 * kk * (2 * kk + 1)))


def rho_k(k, z, cfg: SpecFunConfig = DEFAULT):
    """Bessel ratio I_{2k}(2z)/I_{2k-1}(2z).

    Evaluated by the downward recurrence rho_k = z/(2k + z rho_{k+1/2}),
    started from a half-integer shift k + J/2 with 2(k + J/2) > 2z + 40 and
    seeded with the large-order ratio estimate.  Accepts scalar or array z.
    """
    kk = _kval(k)
    zarr = np.asarray(z, dtype=float)
    if np.any(zarr < 0) or not np.all(np.isfinite(zarr)):
        raise DomainError("rho_k needs finite z >= 0")
    zmax = float(zarr.max()) if zarr.size else 0.0
    J = max(int(math.ceil(2 * zmax + 40 - 2 * kk)) + 20, 40)
    ktop = kk + 0.5 * J
    nu = 2 * ktop - 0.5
    rho = zarr / (0.5 * nu + np.sqrt(0.25 * nu * nu + zarr * zarr))
    for j in range(J, 0, -1):
        kj = kk + 0.5 * (j - 1)
        rho = zarr / (2 * kj + zarr * rho)
    if kk >= 0.25:
        # exact value is below 1; the last division can round one ulp above
        rho = np.minimum(rho, 1.0)
    if np.ndim(z) == 0:
        return float(rho)
    return rho


def rho_k_quotient(k, z: float, cfg: SpecFunConfig = DEFAULT) -> float:
    """Direct quotient of power-series Bessel values (reference path)."""
    kk = _kval(k)
    if z == 0:
        return 0.0
    return bessel_i(2 * kk, 2 * z, cfg) / bessel_i(2 * kk - 1, 2 * z, cfg)


# ---------------------------------------------------------------------------
# Laguerre


def laguerre(n: int, alpha: float, u, method: str = "recurrence"):
    """Generalised Laguerre polynomial L_n^alpha(u).

    ``method="sum"`` evaluates the explicit finite sum
    sum_m binom(n+alpha, n-m) (-u)^m/m!; the default three-term recurrence
    gives the same polynomial without cancellation at moderate u.
    """
    n = int(n)
    if n < 0:
        raise DomainError("n must be nonnegative")
    if alpha <= -1:
        raise DomainError("alpha must exceed -1")
    u = np.asarray(u, dtype=float)
    if method == "sum":
        out = np.zeros_like(u)
        for m in range(n + 1):
            out = out + sp.binom(n + alpha, n - m) * (-u) ** m / math.factorial(m)
    elif method == "recurrence":
        prev = np.ones_like(u)
        if n == 0:
            out = prev
        else:
            cur = 1 + alpha - u
            for j in range(1, n):
                prev, cur = cur, ((2 * j + 1 + alpha - u) * cur - (j + alpha) * prev) / (j + 1)
            out = cur
    else:
        raise DomainError(f"unknown method {method!r}")
    return float(out) if out.ndim == 0 else out


def laguerre_at_zero(n: int, alpha: float) -> float:
    """L_n^alpha(0) = (alpha+1)_n / n!."""
    return pochhammer(alpha + 1, n) / math.factorial(n)


# ---------------------------------------------------------------------------
# Hypergeometric series


def hypergeom_2f1_terminating(a: complex, n: int, c: complex, z: complex) -> complex:
    """F(a, -n; c; z) as its (n+1)-term polynomial."""
    n = int(n)
    if n < 0:
        raise DomainError("n must be nonnegative")
    cc = complex(c)
    if cc.imag == 0 and cc.real <= 0 and float(cc.real).is_integer() and -cc.real < n:
        raise DomainError("c is a forbidden nonpositive integer")
    term = 1 + 0j
    total = term
    for m in range(n):
        term *= (a + m) * (-n + m) / ((c + m) * (m + 1)) * z
        total += term
    return total


def confluent_phi(a: complex, c: complex, z: complex, cfg: SpecFunConfig = DEFAULT) -> complex:
    """Kummer series Phi(a; c; z) = sum (a)_n z^n / ((c)_n n!)."""
    cc = complex(c)
    if cc.imag == 0 and cc.real <= 0 and float(cc.real).is_integer():
        raise DomainError("c must not be a nonpositive integer")
    term = 1 + 0j
    total = term
    for m in range(cfg.max_terms):
        if a + m == 0:
            return total
        term *= (a + m) / ((c + m) * (m + 1)) * z
        total += term
        # the terms decrease monotonically once m exceeds |z| + |a|
        if abs(term) <= cfg.series_tol * abs(total) and m > abs(z) + abs(a):
            return total
    raise ConvergenceError("confluent series did not converge")
