"""Function-space realizations of the positive discrete series.

Spaces:

* ``circle_k_half``   Hardy space on the circle, basis e_n = e^{i n theta},
                      measure d theta / 2 pi, k = 1/2.
* ``circle_weighted`` the same functions with the weighted product
                      sum n!/(2k)_n c2_n* c1_n, basis sqrt((2k)_n/n!) e_n.
* ``disc``            holomorphic functions on the unit disc, basis
                      sqrt((2k)_n/n!) w^n.
* ``halfline``        L^2(R+, du) with Laguerre functions
                      sqrt(n!/(Gamma(2k)(2k)_n)) u^{k-1/2} e^{-u/2} L_n^{2k-1}(u).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from . import specfun
from .coherent import CoherentFamily, _family, amplitudes, auto_dim
from .errors import ConvergenceError, DomainError, SingularPointError
from .repcore import CoverElement, _alpha_beta, as_k, cover_inverse


@dataclass(frozen=True)
class HilbertConfig:
    circle_points: int = 4096
    laguerre_nodes: int = 128
    kernel_eps: float = 1e-8
    series_tail: float = 1e-24

    def __post_init__(self):
        if self.circle_points < 8 or self.laguerre_nodes < 2:
            raise DomainError("quadrature sizes too small")
        if not 0 <= self.kernel_eps < 1:
            raise DomainError("kernel_eps must lie in [0, 1)")


DEFAULT = HilbertConfig()


class Space(str, enum.Enum):
    CIRCLE_K_HALF = "circle_k_half"
    CIRCLE_WEIGHTED = "circle_weighted"
    DISC = "disc"
    HALFLINE = "halfline"


def _norm_factors(k: float, n):
    """sqrt((2k)_n / n!) for integer array n."""
    n = np.asarray(n)
    return np.exp(0.5 * (specfun.log_pochhammer(2 * k, n) - sp.gammaln(n + 1)))


# ---------------------------------------------------------------------------
# function containers


@dataclass(frozen=True)
class CircleFunction:
    """sum_n c_n e^{i n theta}; ``k_weight`` selects the weighted product."""

    fourier_coeffs: np.ndarray
    k_weight: float | None = None

    def __post_init__(self):
        c = np.array(self.fourier_coeffs, dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, "fourier_coeffs", c)
        if self.k_weight is not None:
            object.__setattr__(self, "k_weight", as_k(self.k_weight))

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        n = np.arange(len(self.fourier_coeffs))
        return np.exp(1j * np.multiply.outer(theta, n)) @ self.fourier_coeffs

    def inner(self, other: "CircleFunction") -> complex:
        """(self, other) under the active product (self conjugated)."""
        m = min(len(self.fourier_coeffs), len(other.fourier_coeffs))
        a, b = self.fourier_coeffs[:m], other.fourier_coeffs[:m]
        if self.k_weight is None:
            return complex(np.vdot(a, b))
        w = 1.0 / _norm_factors(self.k_weight, np.arange(m)) ** 2
        return complex(np.vdot(a, w * b))

    def norm(self) -> float:
        return math.sqrt(self.inner(self).real)


@dataclass(frozen=True)
class DiscFunction:
    """sum_n b_n w^n with the product sum n!/(2k)_n b2_n* b1_n."""

    taylor_coeffs: np.ndarray
    k: float

    def __post_init__(self):
        b = np.array(self.taylor_coeffs, dtype=complex)
        b.setflags(write=False)
        object.__setattr__(self, "taylor_coeffs", b)
        object.__setattr__(self, "k", as_k(self.k))

    def __call__(self, w):
        w = np.asarray(w, dtype=complex)
        return np.polynomial.polynomial.polyval(w, self.taylor_coeffs)

    def inner(self, other: "DiscFunction") -> complex:
        m = min(len(self.taylor_coeffs), len(other.taylor_coeffs))
        w = 1.0 / _norm_factors(self.k, np.arange(m)) ** 2
        return complex(np.vdot(self.taylor_coeffs[:m], w * other.taylor_coeffs[:m]))

    def norm(self) -> float:
        return math.sqrt(self.inner(self).real)


@dataclass(frozen=True)
class HalfLineFunction:
    """sum_n a_n times the n-th Laguerre function of index k."""

    coeffs: np.ndarray
    k: float

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=complex)
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)
        object.__setattr__(self, "k", as_k(self.k))

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        out = np.zeros(u.shape, dtype=complex)
        for n, a in enumerate(self.coeffs):
            if a != 0:
                out = out + a * halfline_basis(self.k, n, u)
        return out

    def inner(self, other: "HalfLineFunction") -> complex:
        m = min(len(self.coeffs), len(other.coeffs))
        return complex(np.vdot(self.coeffs[:m], other.coeffs[:m]))


# ---------------------------------------------------------------------------
# bases


def hardy_basis(n: int, theta):
    return np.exp(1j * n * np.asarray(theta, dtype=float))


def weighted_hardy_basis(k, n: int, theta):
    kk = as_k(k)
    return float(_norm_factors(kk, n)) * hardy_basis(n, theta)


def shifted_hardy_basis(k, n: int, theta, normalized: bool = False):
    """e^{i(n+k) theta}; quasi-periodic with factor e^{2 pi i k}."""
    kk = as_k(k)
    f = np.exp(1j * (n + kk) * np.asarray(theta, dtype=float))
    return float(_norm_factors(kk, n)) * f if normalized else f


def disc_basis(k, n: int, w):
    kk = as_k(k)
    return float(_norm_factors(kk, n)) * np.asarray(w, dtype=complex) ** n


def _halfline_log_prefactor(k: float, n: int):
    return 0.5 * (sp.gammaln(n + 1) - sp.gammaln(2 * k) - specfun.log_pochhammer(2 * k, n))


def halfline_basis(k, n: int, u):
    kk = as_k(k)
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise DomainError("half-line functions need u >= 0")
    with np.errstate(divide="ignore"):
        logp = _halfline_log_prefactor(kk, n) + (kk - 0.5) * np.log(u) - 0.5 * u
    return np.exp(logp) * specfun.laguerre(n, 2 * kk - 1, u)


# ---------------------------------------------------------------------------
# scalar products by quadrature


def circle_grid(M: int = DEFAULT.circle_points) -> np.ndarray:
    return 2 * math.pi * np.arange(M) / M


def circle_inner(f2, f1, M: int = DEFAULT.circle_points) -> complex:
    """(1/2pi) int f2* f1 d theta by the periodic trapezoid rule."""
    th = circle_grid(M)
    return complex(np.mean(np.conj(f2(th)) * f1(th)))


def circle_fourier(f, n_max: int, M: int = DEFAULT.circle_points) -> np.ndarray:
    """Fourier coefficients c_n, n = 0..n_max, of a periodic callable."""
    th = circle_grid(M)
    c = np.fft.fft(f(th)) / M
    return c[: n_max + 1]


def disc_inner_quadrature(f2, f1, k, n_radial: int = 64, M: int = 256) -> complex:
    """Integral over the disc with the measure ((2k-1)/pi)(1-|w|^2)^{2k-2}, k > 1/2."""
    kk = as_k(k)
    if not kk > 0.5:
        raise DomainError("the disc measure is normalisable only for k > 1/2")
    # t = |w|^2 on [0,1] with Jacobi weight (1-t)^{2k-2}
    t, wt = sp.roots_sh_jacobi(n_radial, 2 * kk - 1, 1.0)
    # roots_sh_jacobi weights integrate (1-t)^{p-q} t^{q-1} with an extra normalisation
    wt = wt / wt.sum() / (2 * kk - 1)
    th = circle_grid(M)
    w = np.sqrt(t)[:, None] * np.exp(1j * th)[None, :]
    vals = np.mean(np.conj(f2(w)) * f1(w), axis=1)
    return complex((2 * kk - 1) * np.sum(wt * vals))


def halfline_inner(f2, f1, k, nodes: int = DEFAULT.laguerre_nodes) -> complex:
    """int_0^inf f2* f1 du by Gauss-Laguerre with weight u^{2k-1} e^{-u}."""
    kk = as_k(k)
    x, w = sp.roots_genlaguerre(nodes, 2 * kk - 1)
    weight = np.exp((2 * kk - 1) * np.log(x) - x)
    return complex(np.sum(w * np.conj(f2(x)) * f1(x) / weight))


def halfline_integral(g, k, nodes: int = DEFAULT.laguerre_nodes) -> complex:
    kk = as_k(k)
    x, w = sp.roots_genlaguerre(nodes, 2 * kk - 1)
    weight = np.exp((2 * kk - 1) * np.log(x) - x)
    return complex(np.sum(w * g(x) / weight))


def weighted_inner(c2, c1, k) -> complex:
    """sum n!/(2k)_n c2_n* c1_n (the weighted circle and disc products)."""
    kk = as_k(k)
    c2, c1 = np.asarray(c2, dtype=complex), np.asarray(c1, dtype=complex)
    m = min(len(c2), len(c1))
    w = 1.0 / _norm_factors(kk, np.arange(m)) ** 2
    return complex(np.vdot(c2[:m], w * c1[:m]))


def geometric_norms_finite(k, r: float):
    """(plain, weighted) finiteness of the norms of a_n = r^n.

    Root test: (n!/(2k)_n)^{1/n} -> 1, so both series have the same radius
    of convergence.  On the boundary r = 1 the weighted terms behave like
    Gamma(2k) n^{1-2k}, summable only for k > 1.
    """
    kk = as_k(k)
    if r < 0:
        raise DomainError("r must be nonnegative")
    if r != 1:
        return r < 1, r < 1
    return False, kk > 1


# ---------------------------------------------------------------------------
# Lie algebra on the circle


def hardy_generator_matrix(k, N: int, which: str, basis: str = "plain") -> np.ndarray:
    """Matrix of K0, K+ or K- acting on coefficient vectors (length N).

    ``basis="plain"`` uses e_n (or the shifted e^{i(n+k)theta}, same
    matrices); ``basis="weighted"`` uses sqrt((2k)_n/n!) e_n, where the
    ladder entries become sqrt((2k+n)(n+1)).
    """
    kk = as_k(k)
    n = np.arange(N, dtype=float)
    if which == "K0":
        M = np.diag(n + kk).astype(complex)
    elif which == "K+":
        M = np.diag(n[:-1] + 2 * kk, -1).astype(complex)
    elif which == "K-":
        M = np.diag(n[1:], 1).astype(complex)
    else:
        raise DomainError(f"unknown generator {which!r}")
    if basis == "weighted":
        s = _norm_factors(kk, np.arange(N))
        M = (M * s[None, :]) / s[:, None]
    elif basis != "plain":
        raise DomainError(f"unknown basis {basis!r}")
    return M


def _d_theta(f, theta, h: float = 1e-5):
    return (f(theta + h) - f(theta - h)) / (2 * h)


def apply_circle_operator(k, which: str, f, theta, shifted: bool = False, h: float = 1e-5):
    """Differential form of K0, K1, K2, K+, K- on the circle at ``theta``."""
    kk = as_k(k)
    th = np.asarray(theta, dtype=float)
    Df = _d_theta(f, th, h) / 1j
    v = f(th)
    if shifted:
        k0 = Df
        kp = np.exp(1j * th) * (Df + kk * v)
        km = np.exp(-1j * th) * (Df - kk * v)
    else:
        k0 = Df + kk * v
        kp = np.exp(1j * th) * (Df + 2 * kk * v)
        km = np.exp(-1j * th) * Df
    out = {"K0": k0, "K+": kp, "K-": km, "K1": 0.5 * (kp + km), "K2": (kp - km) / 2j}
    if which not in out:
        raise DomainError(f"unknown generator {which!r}")
    return out[which]


def hardy_evolve(coeffs, t: float, k=0.5, additive_phase: float = 0.0, scaling_phase: float = 0.0):
    """Evolve coefficients of e_n under K0 with exact perturbation phases.

    H = (1 + g(t)) K0 + f(t): each level picks up
    exp(-i[(n+k)(t + int_0^t g) + int_0^t f]).  ``additive_phase`` is
    int_0^t f, ``scaling_phase`` is int_0^t g.
    """
    kk = as_k(k)
    c = np.asarray(coeffs, dtype=complex)
    n = np.arange(len(c))
    return c * np.exp(-1j * ((n + kk) * (t + scaling_phase) + additive_phase))


def phase_integral_constant(a: float, t: float) -> float:
    """int_0^t a d tau: a constant shift acts like an effective index k + a."""
    return a * t


def phase_integral_periodic(eps: float, sigma: float, t: float) -> float:
    """int_0^t eps cos(sigma tau) d tau."""
    if sigma == 0:
        return eps * t
    return eps / sigma * math.sin(sigma * t)


def hardy_number_state_t(n: int, t, theta):
    """e^{-i t/2} e^{i n (theta - t)} at k = 1/2."""
    t = np.asarray(t, dtype=float)
    return np.exp(-0.5j * t) * np.exp(1j * n * (np.asarray(theta) - t))


# ---------------------------------------------------------------------------
# coherent wavefunctions


def _basis_values(space: Space, k: float, N: int, point):
    n = np.arange(N)
    if space is Space.CIRCLE_K_HALF:
        return np.exp(1j * n * float(point))
    if space is Space.CIRCLE_WEIGHTED:
        return _norm_factors(k, n) * np.exp(1j * n * float(point))
    if space is Space.DISC:
        return _norm_factors(k, n) * complex(point) ** n
    return np.array([halfline_basis(k, j, float(point)) for j in n])


def coherent_wavefunction_series(space, family, k, param, point, cfg: HilbertConfig = DEFAULT) -> complex:
    """Partial sum of amplitudes times basis functions."""
    space = Space(space)
    fam = _family(family)
    kk = 0.5 if space is Space.CIRCLE_K_HALF else as_k(k)
    N = max(auto_dim(fam, kk, param, cfg.series_tail), 4)
    return complex(amplitudes(fam, kk, param, N) @ _basis_values(space, kk, N, point))


def coherent_wavefunction(space, family, k, param, point, cfg: HilbertConfig = DEFAULT) -> complex:
    """Coherent-state wavefunction; closed forms where they exist.

    The Schroedinger-Glauber family on the circle and disc and on the half
    line has no elementary closed form and is summed as a series, with
    TruncationError if the tail cannot be controlled.
    """
    space = Space(space)
    fam = _family(family)
    if space is Space.CIRCLE_K_HALF:
        if k is not None and abs(as_k(k) - 0.5) > 1e-15:
            raise DomainError("circle_k_half is the k = 1/2 space")
        kk = 0.5
    else:
        kk = as_k(k)
    param = complex(param)
    if fam is CoherentFamily.PERELOMOV and not abs(param) < 1:
        raise DomainError("Perelomov parameter must satisfy |lambda| < 1")
    if fam is CoherentFamily.SG:
        return coherent_wavefunction_series(space, fam, kk, param, point, cfg)

    if space in (Space.CIRCLE_K_HALF, Space.CIRCLE_WEIGHTED, Space.DISC):
        w = cmath.exp(1j * float(point)) if space is not Space.DISC else complex(point)
        if space is Space.DISC and not abs(w) < 1:
            raise DomainError("disc point must satisfy |w| < 1")
        if fam is CoherentFamily.BG:
            return cmath.exp(param * w - 0.5 * specfun.log_g_k(abs(param) ** 2, kk))
        return (1 - abs(param) ** 2) ** kk * (1 - param * w) ** (-2 * kk)

    u = float(point)
    if u < 0:
        raise DomainError("half-line point must be >= 0")
    if u == 0:
        return 0j if kk > 0.5 else (complex("nan") if kk < 0.5 else coherent_wavefunction_series(space, fam, kk, param, u, cfg))
    if fam is CoherentFamily.BG:
        z = param
        g = specfun.g_k_series(complex(-u * z), kk)
        logpre = (kk - 0.5) * math.log(u) - 0.5 * u - 0.5 * sp.gammaln(2 * kk) - 0.5 * specfun.log_g_k(abs(z) ** 2, kk)
        return cmath.exp(z + logpre) * g
    lam = param
    pre = (1 - abs(lam) ** 2) ** kk * (1 - lam) ** (-2 * kk) / math.sqrt(math.gamma(2 * kk))
    return pre * u ** (kk - 0.5) * cmath.exp(-0.5 * u * (1 + lam) / (1 - lam))


def halfline_bg_bessel(k, z: complex, u: float) -> complex:
    """Half-line BG wavefunction through the Bessel-J form.

    u^{k-1/2} e^{z-u/2} (u z)^{1/2-k} J_{2k-1}(2 sqrt(u z)) Gamma(2k)^{1/2} / sqrt(g_k(|z|^2)).
    """
    kk = as_k(k)
    z = complex(z)
    if z == 0 or u == 0:
        return coherent_wavefunction(Space.HALFLINE, CoherentFamily.BG, kk, z, u)
    x = u * z
    s = cmath.sqrt(x)
    J = sp.jv(2 * kk - 1, 2 * s)
    val = u ** (kk - 0.5) * cmath.exp(z - 0.5 * u) * x ** (0.5 - kk) * J
    return val * math.sqrt(math.gamma(2 * kk)) * math.exp(-0.5 * specfun.log_g_k(abs(z) ** 2, kk))


def _measure_ok(space: Space, k: float):
    if space is Space.CIRCLE_WEIGHTED:
        raise DomainError("the weighted circle product has no pointwise density")
    if space is Space.DISC and not k > 0.5:
        raise DomainError("the disc measure is normalisable only for k > 1/2")


def coherent_density(space, family, k, param, point, cfg: HilbertConfig = DEFAULT) -> float:
    """|wavefunction|^2 relative to the space's measure.

    circle_k_half: d theta/2pi; disc: ((2k-1)/pi)(1-|w|^2)^{2k-2} d^2w
    (k > 1/2); halfline: du.
    """
    space = Space(space)
    kk = 0.5 if space is Space.CIRCLE_K_HALF else as_k(k)
    _measure_ok(space, kk)
    return abs(coherent_wavefunction(space, family, kk, param, point, cfg)) ** 2


def density_curve(space, family, k, param, points, cfg: HilbertConfig = DEFAULT) -> np.ndarray:
    """Columns (point, density) for CSV export; complex disc points use |w| ordering as given."""
    vals = [coherent_density(space, family, k, param, p, cfg) for p in points]
    return np.column_stack([np.asarray(points), np.asarray(vals)])


# closed-form circle densities (k = 1/2)


def circle_bg_density(z: complex, theta):
    """exp(2|z| cos(theta - phi)) / I0(2|z|), phi = -arg z."""
    r, phi = abs(z), -cmath.phase(z)
    logI0 = specfun.log_g_k(r * r, 0.5)
    return np.exp(2 * r * np.cos(np.asarray(theta) - phi) - logI0)


def circle_bg_gaussian(z: complex, theta):
    """Large-|z| form 2 sqrt(pi|z|) exp(-|z|(theta - phi)^2)."""
    r, phi = abs(z), -cmath.phase(z)
    d = np.asarray(theta) - phi
    return 2 * math.sqrt(math.pi * r) * np.exp(-r * d * d)


def circle_bg_fourier(z: complex, n_max: int) -> np.ndarray:
    """Cosine-series coefficients I_n(2|z|)/I_0(2|z|), n = 0..n_max."""
    x = 2 * abs(z)
    return np.array([specfun.bessel_i(n, x) for n in range(n_max + 1)]) / specfun.bessel_i(0, x)


def poisson_kernel(lam: complex, theta):
    """(1-|l|^2)/(1 - 2|l| cos(theta - theta0) + |l|^2), theta0 = -arg lambda."""
    r, t0 = abs(lam), -cmath.phase(lam)
    if not r < 1:
        raise DomainError("|lambda| must be < 1")
    return (1 - r * r) / (1 - 2 * r * np.cos(np.asarray(theta) - t0) + r * r)


def poisson_fourier(lam: complex, n_max: int) -> np.ndarray:
    return abs(lam) ** np.arange(n_max + 1)


def circle_sg_asymptotic(alpha: complex, theta):
    """2 sqrt(2pi)|a| exp(-|a|^2 (1 - cos 2(theta - beta))), beta = -arg alpha."""
    r, b = abs(alpha), -cmath.phase(alpha)
    return 2 * math.sqrt(2 * math.pi) * r * np.exp(-r * r * (1 - np.cos(2 * (np.asarray(theta) - b))))


def circle_sg_gaussian(alpha: complex, theta):
    r, b = abs(alpha), -cmath.phase(alpha)
    d = np.asarray(theta) - b
    return 2 * math.sqrt(2 * math.pi) * r * np.exp(-2 * r * r * d * d)


def number_state_density_circle(n: int, theta):
    return np.ones_like(np.asarray(theta, dtype=float))


def halfline_number_density(k, n: int, u):
    return np.abs(halfline_basis(k, n, u)) ** 2


def halfline_small_u_density(k, n: int, u):
    """Leading small-u behaviour (2k)_n/(n! Gamma(2k)) u^{2k-1}."""
    kk = as_k(k)
    return specfun.pochhammer(2 * kk, n) / math.factorial(n) / math.gamma(2 * kk) * np.asarray(u) ** (2 * kk - 1)


# ---------------------------------------------------------------------------
# K1 / K2 generalised eigenfunctions


def k2_eigenfunction_circle(h2: float, theta):
    """K2 eigenfunction in the k = 1/2 Hardy space, delta-normalised in h2.

    Boundary value of c0 (1-w)^{-1/2+i h2}(1+w)^{-1/2-i h2}, w = e^{i theta},
    with c0 = e^{-i pi/4} e^{-pi h2/2}.  On (0, pi) this is
    (1/2) e^{-i theta/2} sin(theta/2)^{i h2 - 1/2} cos(theta/2)^{-i h2 - 1/2};
    on (pi, 2pi) the same with |cos| times e^{i pi/2} e^{-pi h2}.
    """
    th = np.mod(np.asarray(theta, dtype=float), 2 * math.pi)
    s = np.sin(0.5 * th)
    c = np.cos(0.5 * th)
    if np.any(np.abs(s) < 1e-15) or np.any(np.abs(c) < 1e-15):
        raise SingularPointError("K2 eigenfunctions are singular at theta = 0, pi")
    base = 0.5 * np.exp(-0.5j * th) * np.abs(s) ** (1j * h2 - 0.5) * np.abs(c) ** (-1j * h2 - 0.5)
    upper = th > math.pi
    return np.where(upper, base * 1j * math.exp(-math.pi * h2), base)


def k1_eigenfunction_circle(h1: float, theta):
    """K1 eigenfunction obtained from the K2 one by a quarter-turn shift."""
    return k2_eigenfunction_circle(h1, np.asarray(theta, dtype=float) + 0.5 * math.pi)


def k2_circle_coefficient(h2: float, n: int) -> complex:
    """Fourier coefficient c_n of the circle K2 eigenfunction.

    c_n = (-1)^n c0 / n! sum_m (-1)^m Gamma(1/2+i h2+m)(-n)_m / (Gamma(1/2+i h2-n+m) m!),
    c0 = e^{-i pi/4} e^{-pi h2/2}.
    """
    a = 0.5 + 1j * h2
    c0 = cmath.exp(-0.25j * math.pi - 0.5 * math.pi * h2)
    total = 0j
    for m in range(n + 1):
        # Gamma(a+m)/Gamma(a-n+m) = (a-n+m)_{n}
        ratio = 1 + 0j
        for j in range(n):
            ratio *= a - n + m + j
        total += (-1) ** m * ratio * sp.poch(-n, m) / math.factorial(m)
    return (-1) ** n * c0 * total / math.factorial(n)


def k2_eigenfunction_halfline(h2: float, u):
    """u^{i h2 - 1/2}/sqrt(2 pi); independent of k, Mellin kernel."""
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0):
        raise SingularPointError("half-line K2 eigenfunctions need u > 0")
    return np.exp((1j * h2 - 0.5) * np.log(u)) / math.sqrt(2 * math.pi)


def k1_eigenfunction_halfline(k, h1: float, u) -> complex:
    """Unnormalised u^{k-1/2} e^{-iu/2} Phi(k + i h1; 2k; i u), K1 f = h1 f.

    The overall constant is left at 1; it is not fixed by the eigenequation.
    """
    kk = as_k(k)
    if u <= 0:
        raise SingularPointError("half-line K1 eigenfunctions need u > 0")
    return u ** (kk - 0.5) * cmath.exp(-0.5j * u) * specfun.confluent_phi(kk + 1j * h1, 2 * kk, 1j * u)


def apply_halfline_operator(k, which: str, f, u, h: float | None = None):
    """K0, K1 or K2 applied to callable f at u > 0 by central differences."""
    kk = as_k(k)
    u = float(u)
    if u <= 0:
        raise DomainError("grid must exclude u = 0")
    h = 1e-4 * max(1.0, u) if h is None else h
    h = min(h, 0.5 * u)
    fp, f0, fm = f(u + h), f(u), f(u - h)
    d1 = (fp - fm) / (2 * h)
    d2 = (fp - 2 * f0 + fm) / (h * h)
    if which == "K2":
        return (u * d1 + 0.5 * f0) / 1j
    base = -u * d2 - d1 + (2 * kk - 1) ** 2 / (4 * u) * f0
    if which == "K0":
        return base + 0.25 * u * f0
    if which == "K1":
        return base - 0.25 * u * f0
    raise DomainError(f"unknown generator {which!r}")


def classical_u(phi: float, I: float) -> float:
    """u <-> 4 I sin^2(phi/2), the classical value of 2 (h0 - h1)."""
    return 4 * I * math.sin(0.5 * phi) ** 2


# ---------------------------------------------------------------------------
# reproducing kernels


def hardy_kernel(theta2: float, theta1: float, eps: float = DEFAULT.kernel_eps) -> complex:
    """sum_n (1-eps)^n e^{i n (theta1 - theta2)} = 1/(1 - (1-eps) e^{i(theta1-theta2)})."""
    q = (1 - eps) * cmath.exp(1j * (theta1 - theta2))
    if abs(1 - q) < 1e-300:
        raise SingularPointError("coincident points need eps > 0")
    return 1 / (1 - q)


def weighted_hardy_kernel(k, theta2: float, theta1: float, eps: float = DEFAULT.kernel_eps) -> complex:
    kk = as_k(k)
    q = (1 - eps) * cmath.exp(1j * (theta1 - theta2))
    if abs(1 - q) < 1e-300:
        raise SingularPointError("coincident points need eps > 0")
    return (1 - q) ** (-2 * kk)


def disc_kernel(k, w2: complex, w1: complex) -> complex:
    kk = as_k(k)
    if not (abs(w1) < 1 and abs(w2) < 1):
        raise DomainError("disc points must satisfy |w| < 1")
    return (1 - complex(w2).conjugate() * w1) ** (-2 * kk)


def bg_kernel(k, z2: complex, z1: complex) -> complex:
    return complex(specfun.g_k_series(complex(z2).conjugate() * complex(z1), as_k(k)))


def sg_kernel(a2: complex, a1: complex) -> complex:
    return cmath.exp(complex(a2).conjugate() * a1)


def kernel_partial_sum(space, k, p2, p1, n_terms: int) -> complex:
    """sum_{n<n_terms} e_n(p2)* e_n(p1) for the circle or disc spaces."""
    space = Space(space)
    kk = 0.5 if space is Space.CIRCLE_K_HALF else as_k(k)
    b2 = _basis_values(space, kk, n_terms, p2)
    b1 = _basis_values(space, kk, n_terms, p1)
    return complex(np.vdot(b2, b1))


# ---------------------------------------------------------------------------
# disc <-> half-line


def bk_kernel(k, w: complex, u: float) -> complex:
    """Gamma(2k)^{-1/2} (1-w)^{-2k} u^{k-1/2} exp(-(u/2)(1+w)/(1-w))."""
    kk = as_k(k)
    w = complex(w)
    return (1 - w) ** (-2 * kk) * u ** (kk - 0.5) * cmath.exp(-0.5 * u * (1 + w) / (1 - w)) / math.sqrt(math.gamma(2 * kk))


def bk_kernel_partial_sum(k, w: complex, u: float, n_terms: int = 60) -> complex:
    kk = as_k(k)
    return complex(sum(complex(disc_basis(kk, n, w)) * float(halfline_basis(kk, n, u)) for n in range(n_terms)))


def disc_to_halfline(k, f: DiscFunction) -> HalfLineFunction:
    """Image under the kernel B_k*: b_n w^n -> b_n sqrt(n!/(2k)_n) times the n-th Laguerre function."""
    kk = as_k(k)
    b = f.taylor_coeffs
    return HalfLineFunction(b / _norm_factors(kk, np.arange(len(b))), kk)


def halfline_to_disc_value(k, g, w: complex, nodes: int = DEFAULT.laguerre_nodes) -> complex:
    """int_0^inf B_k(w,u) g(u) du by Gauss-Laguerre quadrature."""
    kk = as_k(k)
    w = complex(w)
    if not abs(w) < 1:
        raise DomainError("|w| must be < 1")
    # B_k g ~ u^{2k-1} exp(-u Re(1/(1-w))) times a smooth factor; rescale u
    s = (1 / (1 - w)).real
    x, wt = sp.roots_genlaguerre(nodes, 2 * kk - 1)
    u = x / s
    integrand = np.array([bk_kernel(kk, w, ui) for ui in u]) * g(u)
    weight = np.exp((2 * kk - 1) * np.log(x) - x)
    val = np.sum(wt * integrand / weight) / s
    if not np.isfinite(val):
        raise ConvergenceError("half-line quadrature did not converge")
    return complex(val)


# ---------------------------------------------------------------------------
# universal-cover action on disc functions


def _disc_fft_coeffs(func, n_out: int) -> np.ndarray:
    M = 1 << int(math.ceil(math.log2(max(2 * n_out, 64))))
    z = np.exp(2j * math.pi * np.arange(M) / M)
    return np.fft.fft(func(z))[:n_out] / M


def covering_multiplier_action(g: CoverElement, k, f: DiscFunction, n_out: int | None = None) -> DiscFunction:
    """[T f](z) = e^{2ik omega}(1-|gamma|^2)^k (1+gamma* z)^{-2k} f((alpha z + beta)/(beta* z + alpha*)).

    Unitary for the series product, but composes in reverse order:
    T(g2) T(g1) = T(g1 o g2).  The image is analytic on |z| < 1/|gamma|,
    so its Taylor coefficients follow from an FFT of samples on the unit
    circle with aliasing error of order |gamma|^M.
    """
    kk = as_k(k)
    alpha, beta = _alpha_beta(g)
    gam = g.gamma
    if n_out is None:
        r = abs(gam)
        extra = int(math.ceil(40 / -math.log(r))) if r > 1e-300 else 0
        n_out = len(f.taylor_coeffs) + extra + 16

    def image(z):
        arg = (alpha * z + beta) / (beta.conjugate() * z + alpha.conjugate())
        pre = cmath.exp(2j * kk * g.omega) * (1 - abs(gam) ** 2) ** kk
        return pre * (1 + gam.conjugate() * z) ** (-2 * kk) * f(arg)

    return DiscFunction(_disc_fft_coeffs(image, n_out), kk)


def covering_unitary_on_disc(g: CoverElement, k, f: DiscFunction, n_out: int | None = None) -> DiscFunction:
    """Representation operator U(g) = T(g^{-1}) with U(g2) U(g1) = U(g2 o g1).

    Rotations act as U((0, w)) e_n = e^{-2iw(n+k)} e_n, i.e. exp(-i 2w K0).
    """
    return covering_multiplier_action(cover_inverse(g), k, f, n_out)
