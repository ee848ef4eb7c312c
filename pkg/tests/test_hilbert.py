import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from su11osc import hilbert as hs
from su11osc import specfun
from su11osc.coherent import CoherentFamily as CF
from su11osc.errors import DomainError, SingularPointError
from su11osc.hilbert import DiscFunction, Space
from su11osc.repcore import CoverElement, cover_compose

NMAX = 12


# orthonormal bases


def test_hardy_basis_orthonormal():
    G = np.array([[hs.circle_inner(lambda t, m=m: hs.hardy_basis(m, t), lambda t, n=n: hs.hardy_basis(n, t), 256)
                   for n in range(NMAX + 1)] for m in range(NMAX + 1)])
    assert np.abs(G - np.eye(NMAX + 1)).max() < 1e-8


@pytest.mark.parametrize("k", [0.2, 0.5, 1.3])
def test_weighted_hardy_basis_orthonormal(k):
    coeffs = [hs.circle_fourier(lambda t, n=n: hs.weighted_hardy_basis(k, n, t), NMAX, 256) for n in range(NMAX + 1)]
    G = np.array([[hs.weighted_inner(a, b, k) for b in coeffs] for a in coeffs])
    assert np.abs(G - np.eye(NMAX + 1)).max() < 1e-8


@pytest.mark.parametrize("k", [0.75, 1.0, 2.5])
def test_disc_basis_orthonormal_by_quadrature(k):
    G = np.array([[hs.disc_inner_quadrature(lambda w, m=m: hs.disc_basis(k, m, w), lambda w, n=n: hs.disc_basis(k, n, w), k)
                   for n in range(NMAX + 1)] for m in range(NMAX + 1)])
    assert np.abs(G - np.eye(NMAX + 1)).max() < 1e-8


@pytest.mark.parametrize("k", [0.25, 0.5])
def test_disc_basis_orthonormal_by_series(k):
    f = [DiscFunction(np.eye(NMAX + 1)[n] * hs.disc_basis(k, n, 1.0), k) for n in range(NMAX + 1)]
    G = np.array([[a.inner(b) for b in f] for a in f])
    assert np.abs(G - np.eye(NMAX + 1)).max() < 1e-12


def test_disc_quadrature_needs_k_above_half():
    with pytest.raises(DomainError):
        hs.disc_inner_quadrature(np.ones_like, np.ones_like, 0.5)


@pytest.mark.parametrize("k", [0.3, 0.5, 1.2, 3.0])
def test_halfline_basis_orthonormal(k):
    G = np.array([[hs.halfline_inner(lambda u, m=m: hs.halfline_basis(k, m, u), lambda u, n=n: hs.halfline_basis(k, n, u), k)
                   for n in range(NMAX + 1)] for m in range(NMAX + 1)])
    assert np.abs(G - np.eye(NMAX + 1)).max() < 1e-8


def test_halfline_basis_against_adaptive_quadrature():
    k = 0.7
    val, _ = integrate.quad(lambda u: hs.halfline_basis(k, 3, u) * hs.halfline_basis(k, 5, u), 0, np.inf, limit=200)
    norm, _ = integrate.quad(lambda u: hs.halfline_basis(k, 4, u) ** 2, 0, np.inf, limit=200)
    assert abs(val) < 1e-8 and norm == pytest.approx(1.0, abs=1e-8)


def test_halfline_domain():
    with pytest.raises(DomainError):
        hs.halfline_basis(0.5, 1, -1.0)


def test_circle_function_containers():
    c = np.array([1.0, 0.5j, -0.25])
    f = hs.CircleFunction(c)
    th = np.array([0.0, 1.0])
    assert f(th) == pytest.approx(c[0] + c[1] * np.exp(1j * th) + c[2] * np.exp(2j * th))
    assert f.norm() == pytest.approx(math.sqrt(1 + 0.25 + 0.0625))
    g = hs.CircleFunction(c, k_weight=0.3)
    assert g.inner(g) == pytest.approx(hs.weighted_inner(c, c, 0.3))
    h = hs.HalfLineFunction([0, 1.0], 0.6)
    assert h(2.0) == pytest.approx(hs.halfline_basis(0.6, 1, 2.0))


def test_norm_finiteness():
    for r in (0.5, 0.9, 0.999, 1.001, 1.5):
        plain, weighted = hs.geometric_norms_finite(0.7, r)
        assert plain == weighted == (r < 1)
    assert hs.geometric_norms_finite(1.5, 1.0) == (False, True)
    assert hs.geometric_norms_finite(0.7, 1.0) == (False, False)
    with pytest.raises(DomainError):
        hs.geometric_norms_finite(0.7, -1.0)


# reproducing kernels


def test_hardy_kernel_partial_sum():
    t2, t1, eps = 0.3, 1.9, 0.05
    q = (1 - eps) * cmath.exp(1j * (t1 - t2))
    partial = sum(q ** n for n in range(800))
    assert hs.hardy_kernel(t2, t1, eps) == pytest.approx(partial, rel=1e-12)
    with pytest.raises(SingularPointError):
        hs.hardy_kernel(1.0, 1.0, 0.0)


def test_hardy_kernel_reproduces():
    f = hs.CircleFunction([0.3, -1.0j, 0.2, 0.1])
    t1 = 0.8
    # (K(t1, .), f) with the eps-regularised kernel equals f at radius 1 - eps
    reg = hs.circle_inner(lambda t: np.array([hs.hardy_kernel(t1, x, 1e-3) for x in t]), f, 1 << 16)
    expect = sum(c * (0.999 * cmath.exp(1j * t1)) ** n for n, c in enumerate(f.fourier_coeffs))
    assert reg == pytest.approx(expect, abs=1e-10)


@pytest.mark.parametrize("k", [0.3, 0.5, 1.7])
def test_weighted_and_disc_kernels_match_series(k):
    w2, w1 = 0.4 - 0.3j, -0.2 + 0.5j
    assert hs.disc_kernel(k, w2, w1) == pytest.approx(hs.kernel_partial_sum(Space.DISC, k, w2, w1, 200), rel=1e-12)
    t2, t1, eps = 0.4, 2.1, 0.3
    direct = hs.weighted_hardy_kernel(k, t2, t1, eps)
    n = np.arange(400)
    series = np.sum(hs._norm_factors(k, n) ** 2 * ((1 - eps) * cmath.exp(1j * (t1 - t2))) ** n)
    assert direct == pytest.approx(series, rel=1e-12)


def test_disc_kernel_reproduces():
    k = 0.8
    f = DiscFunction([0.5, 0.2j, -0.3, 0.1], k)
    w1 = 0.3 + 0.2j
    val = hs.disc_inner_quadrature(lambda w: np.array([hs.disc_kernel(k, w1, x) for x in np.ravel(w)]).reshape(np.shape(w)), f, k, 64, 64)
    assert val == pytest.approx(complex(f(w1)), abs=1e-10)


def test_bg_and_sg_kernels():
    z2, z1 = 0.7 - 0.2j, 1.1 + 0.4j
    n = np.arange(60)
    series = np.sum((z2.conjugate() * z1) ** n / np.exp(specfun.log_pochhammer(0.9, n) + np.array([math.lgamma(m + 1) for m in n])))
    assert hs.bg_kernel(0.45, z2, z1) == pytest.approx(series, rel=1e-12)
    assert hs.sg_kernel(z2, z1) == pytest.approx(cmath.exp(z2.conjugate() * z1))
    with pytest.raises(DomainError):
        hs.disc_kernel(0.5, 1.0, 0.0)


# the disc <-> half-line kernel


@pytest.mark.parametrize("k", [0.3, 0.5, 1.4])
def test_bk_kernel_expansion(k):
    w, u = 0.35 - 0.2j, 1.7
    assert hs.bk_kernel(k, w, u) == pytest.approx(hs.bk_kernel_partial_sum(k, w, u, 120), rel=1e-10)


@pytest.mark.parametrize("k", [0.3, 0.5, 1.4])
def test_bk_maps_basis_to_basis(k):
    for n in range(6):
        for w in (0.0, 0.3 + 0.1j, -0.5j):
            got = hs.halfline_to_disc_value(k, lambda u: hs.halfline_basis(k, n, u), w)
            assert got == pytest.approx(complex(hs.disc_basis(k, n, w)), abs=1e-7)


@pytest.mark.parametrize("k", [0.3, 0.5, 1.4])
def test_bk_unitary_on_low_degree(k):
    f = DiscFunction([0.4, -0.3j, 0.2, 0.1 + 0.1j, -0.05], k)
    g = DiscFunction([0.1j, 0.6, 0.0, 0.3], k)
    F, G = hs.disc_to_halfline(k, f), hs.disc_to_halfline(k, g)
    assert F.inner(G) == pytest.approx(f.inner(g), abs=1e-12)
    # the same product evaluated as an integral over the half line
    quad = hs.halfline_inner(F, G, k)
    assert quad == pytest.approx(f.inner(g), abs=1e-7)
    # and mapping back reproduces f pointwise
    for w in (0.2, -0.1 + 0.4j):
        assert hs.halfline_to_disc_value(k, F, w) == pytest.approx(complex(f(w)), abs=1e-7)


def test_bk_domain():
    with pytest.raises(DomainError):
        hs.halfline_to_disc_value(0.5, np.ones_like, 1.0)


# K2 eigenfunction on the circle


@pytest.mark.parametrize("h2", [-0.7, 0.0, 0.4, 1.3])
def test_k2_circle_coefficients(h2):
    c0, c1 = hs.k2_circle_coefficient(h2, 0), hs.k2_circle_coefficient(h2, 1)
    assert abs(c0) ** 2 == pytest.approx(math.exp(-math.pi * h2), abs=1e-10)
    assert abs(c1) ** 2 == pytest.approx(4 * h2 * h2 * math.exp(-math.pi * h2), abs=1e-10)


def test_k2_circle_coefficients_by_quadrature():
    h2 = 0.7
    f = lambda t: complex(hs.k2_eigenfunction_circle(h2, t))
    for n in range(-2, 4):
        parts = []
        for a, b in ((0, math.pi), (math.pi, 2 * math.pi)):
            re = integrate.quad(lambda t: (f(t) * cmath.exp(-1j * n * t)).real, a, b, limit=400)[0]
            im = integrate.quad(lambda t: (f(t) * cmath.exp(-1j * n * t)).imag, a, b, limit=400)[0]
            parts.append(complex(re, im))
        c = sum(parts) / (2 * math.pi)
        expect = hs.k2_circle_coefficient(h2, n) if n >= 0 else 0
        assert abs(c - expect) < 1e-6


def test_k2_circle_eigen_equation():
    for h2 in (0.5, -1.1):
        f = lambda t: hs.k2_eigenfunction_circle(h2, t)
        th = np.array([0.4, 1.9, 3.7, 5.5])
        assert hs.apply_circle_operator(0.5, "K2", f, th) == pytest.approx(h2 * f(th), rel=1e-7)
        g = lambda t: hs.k1_eigenfunction_circle(h2, t)
        th1 = th + 0.3
        assert hs.apply_circle_operator(0.5, "K1", g, th1) == pytest.approx(h2 * g(th1), rel=1e-7)
    with pytest.raises(SingularPointError):
        hs.k2_eigenfunction_circle(0.5, math.pi)


# half-line densities and the small-u law


@pytest.mark.parametrize("k", [0.3, 0.4, 0.5, 0.8, 1.5])
def test_small_u_law_ground_state(k):
    u = 1e-6
    law = u ** (2 * k - 1) / math.gamma(2 * k)
    assert abs(hs.halfline_number_density(k, 0, u) / law - 1) < 1e-3


@pytest.mark.parametrize("k", [0.3, 0.4, 1.5])
def test_small_u_law_excited_state_prefactor(k):
    u = 1e-6
    got = hs.halfline_number_density(k, 3, u)
    assert abs(got / hs.halfline_small_u_density(k, 3, u) - 1) < 1e-3


def test_small_u_law_n_free_form_misses_excited_states():
    k, u = 0.4, 1e-6
    ratio = hs.halfline_number_density(k, 3, u) / (u ** (2 * k - 1) / math.gamma(2 * k))
    assert ratio == pytest.approx(specfun.pochhammer(2 * k, 3) / 6, rel=1e-3)
    assert ratio == pytest.approx(0.672, abs=1e-3)


@pytest.mark.parametrize("k", [0.3, 0.5, 1.2])
@pytest.mark.parametrize("family,param", [(CF.BG, 0.8 - 0.5j), (CF.PERELOMOV, 0.4 + 0.3j), (CF.SG, 0.9j)])
def test_halfline_density_integrates_to_one(k, family, param):
    total = hs.halfline_integral(lambda u: np.array([hs.coherent_density(Space.HALFLINE, family, k, param, x) for x in u]), k, 96)
    assert total.real == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("family,param", [(CF.BG, 1.3 + 0.2j), (CF.PERELOMOV, -0.6j), (CF.SG, 0.8)])
def test_circle_density_integrates_to_one(family, param):
    th = hs.circle_grid(512)
    dens = [hs.coherent_density(Space.CIRCLE_K_HALF, family, 0.5, param, t) for t in th]
    assert np.mean(dens) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("family,param", [(CF.BG, 0.9 - 0.3j), (CF.PERELOMOV, 0.5 + 0.2j)])
def test_disc_density_integrates_to_one(family, param):
    k = 1.25
    f = lambda w: np.vectorize(lambda x: hs.coherent_wavefunction(Space.DISC, family, k, param, x))(w)
    assert hs.disc_inner_quadrature(f, f, k).real == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("space,point", [(Space.DISC, 0.3 - 0.4j), (Space.CIRCLE_WEIGHTED, 1.1), (Space.HALFLINE, 2.3)])
@pytest.mark.parametrize("family,param", [(CF.BG, 0.7 + 0.6j), (CF.PERELOMOV, -0.3 + 0.5j)])
def test_closed_wavefunctions_match_series(space, point, family, param):
    k = 0.65
    closed = hs.coherent_wavefunction(space, family, k, param, point)
    series = hs.coherent_wavefunction_series(space, family, k, param, point)
    assert closed == pytest.approx(series, rel=1e-10, abs=1e-12)


def test_circle_k_half_matches_series_and_rejects_other_k():
    for fam, p in ((CF.BG, 1.1j), (CF.PERELOMOV, 0.4)):
        a = hs.coherent_wavefunction(Space.CIRCLE_K_HALF, fam, 0.5, p, 0.9)
        b = hs.coherent_wavefunction_series(Space.CIRCLE_K_HALF, fam, 0.5, p, 0.9)
        assert a == pytest.approx(b, rel=1e-10)
    with pytest.raises(DomainError):
        hs.coherent_wavefunction(Space.CIRCLE_K_HALF, CF.BG, 0.7, 1.0, 0.0)


def test_halfline_bg_bessel_form():
    for k in (0.3, 0.75, 2.0):
        for z, u in ((0.8 + 0.3j, 1.4), (2.0, 0.2), (-1.1j, 5.0)):
            closed = hs.coherent_wavefunction(Space.HALFLINE, CF.BG, k, z, u)
            assert hs.halfline_bg_bessel(k, z, u) == pytest.approx(closed, rel=1e-11, abs=1e-14)


def test_wavefunction_domain_errors():
    with pytest.raises(DomainError):
        hs.coherent_wavefunction(Space.DISC, CF.BG, 0.7, 1.0, 1.2)
    with pytest.raises(DomainError):
        hs.coherent_wavefunction(Space.HALFLINE, CF.PERELOMOV, 0.7, 1.0, 1.0)
    with pytest.raises(DomainError):
        hs.coherent_density(Space.CIRCLE_WEIGHTED, CF.BG, 0.7, 1.0, 1.0)
    with pytest.raises(DomainError):
        hs.coherent_density(Space.DISC, CF.BG, 0.5, 1.0, 0.1)
    assert hs.coherent_wavefunction(Space.HALFLINE, CF.BG, 0.8, 1.0, 0.0) == 0


# closed-form circle densities and their limits


def test_circle_bg_density_forms():
    z = 1.7 * cmath.exp(-0.6j)
    th = np.linspace(0, 2 * math.pi, 9)
    direct = [hs.coherent_density(Space.CIRCLE_K_HALF, CF.BG, 0.5, z, t) for t in th]
    assert hs.circle_bg_density(z, th) == pytest.approx(direct, rel=1e-12)
    real_z = 1.7
    c = hs.circle_fourier(lambda t: hs.circle_bg_density(real_z, t), 6, 256)
    assert c.real == pytest.approx(hs.circle_bg_fourier(real_z, 6), abs=1e-13)


def test_circle_bg_gaussian_limit():
    z = 400.0 * cmath.exp(0.3j)
    th = -0.3 + np.linspace(-0.05, 0.05, 11)
    assert hs.circle_bg_density(z, th) == pytest.approx(hs.circle_bg_gaussian(z, th), rel=2e-3)


def test_poisson_kernel_is_perelomov_density():
    lam = 0.6 * cmath.exp(0.9j)
    th = np.linspace(0, 2 * math.pi, 7)
    direct = [hs.coherent_density(Space.CIRCLE_K_HALF, CF.PERELOMOV, 0.5, lam, t) for t in th]
    assert hs.poisson_kernel(lam, th) == pytest.approx(direct, rel=1e-12)
    c = hs.circle_fourier(lambda t: hs.poisson_kernel(0.6, t), 8, 512)
    assert c.real == pytest.approx(hs.poisson_fourier(0.6, 8), abs=1e-12)
    with pytest.raises(DomainError):
        hs.poisson_kernel(1.0, 0.0)


def test_circle_sg_limits():
    a = 6.0 * cmath.exp(-0.4j)
    b = 0.4
    th = b + np.linspace(-0.08, 0.08, 9)
    dens = np.array([hs.coherent_density(Space.CIRCLE_K_HALF, CF.SG, 0.5, a, t) for t in th])
    assert dens == pytest.approx(hs.circle_sg_asymptotic(a, th), rel=0.05)
    assert hs.circle_sg_asymptotic(a, th) == pytest.approx(hs.circle_sg_gaussian(a, th), rel=0.02)


def test_number_state_density_flat():
    assert np.all(hs.number_state_density_circle(3, np.linspace(0, 6, 5)) == 1)


def test_density_curve_columns():
    pts = np.linspace(0.1, 3, 5)
    cur = hs.density_curve(Space.HALFLINE, CF.PERELOMOV, 0.8, 0.3, pts)
    assert cur.shape == (5, 2) and np.all(cur[:, 0] == pts) and np.all(cur[:, 1] >= 0)


# generators as differential operators


@pytest.mark.parametrize("k", [0.3, 0.5, 1.6])
@pytest.mark.parametrize("which", ["K0", "K+", "K-"])
def test_circle_generators_match_matrices(k, which):
    N = 8
    M = hs.hardy_generator_matrix(k, N, which)
    th = np.linspace(0.1, 6.0, 7)
    for shifted in (False, True):
        for n in range(N - 1):
            if shifted:
                f = lambda t, n=n: hs.shifted_hardy_basis(k, n, t)
                basis = lambda m, t: hs.shifted_hardy_basis(k, m, t)
            else:
                f = lambda t, n=n: hs.hardy_basis(n, t)
                basis = lambda m, t: hs.hardy_basis(m, t)
            expect = sum(M[m, n] * basis(m, th) for m in range(N))
            assert hs.apply_circle_operator(k, which, f, th, shifted=shifted) == pytest.approx(expect, abs=1e-8)


@pytest.mark.parametrize("k", [0.3, 1.6])
def test_weighted_generator_matrix(k):
    N = 20
    Kp, Km, K0 = (hs.hardy_generator_matrix(k, N, w, "weighted") for w in ("K+", "K-", "K0"))
    n = np.arange(N - 1)
    assert np.diag(Kp, -1) == pytest.approx(np.sqrt((2 * k + n) * (n + 1)))
    c = (Km @ Kp - Kp @ Km - 2 * K0)[: N - 2, : N - 2]
    assert np.abs(c).max() < 1e-12
    with pytest.raises(DomainError):
        hs.hardy_generator_matrix(k, N, "K3")
    with pytest.raises(DomainError):
        hs.hardy_generator_matrix(k, N, "K0", "other")


@pytest.mark.parametrize("k", [0.3, 0.5, 1.2])
def test_halfline_k0_on_basis(k):
    for n in range(5):
        f = lambda u, n=n: hs.halfline_basis(k, n, u)
        for u in (0.3, 1.7, 6.0):
            assert hs.apply_halfline_operator(k, "K0", f, u) == pytest.approx((n + k) * f(u), abs=1e-6)


def test_halfline_k1_k2_eigenfunctions():
    k = 0.6
    for h in (0.9, -0.4):
        f1 = lambda u: hs.k1_eigenfunction_halfline(k, h, u)
        f2 = lambda u: complex(hs.k2_eigenfunction_halfline(h, u))
        for u in (0.5, 1.7, 4.0):
            assert hs.apply_halfline_operator(k, "K1", f1, u) == pytest.approx(h * f1(u), abs=1e-6)
            assert hs.apply_halfline_operator(k, "K2", f2, u) == pytest.approx(h * f2(u), abs=1e-6)
    with pytest.raises(DomainError):
        hs.apply_halfline_operator(k, "K0", f1, 0.0)
    with pytest.raises(SingularPointError):
        hs.k2_eigenfunction_halfline(0.3, 0.0)


def test_classical_u():
    assert hs.classical_u(math.pi, 2.0) == pytest.approx(8.0)
    assert hs.classical_u(0.0, 2.0) == 0.0


# time evolution in the Hardy space


@given(st.floats(0.05, 3), st.integers(0, 6), st.floats(0, 2 * math.pi))
@settings(max_examples=40)
def test_shifted_basis_quasi_periodic(k, n, th):
    a = hs.shifted_hardy_basis(k, n, th + 2 * math.pi)
    b = hs.shifted_hardy_basis(k, n, th)
    assert a == pytest.approx(cmath.exp(2j * math.pi * k) * b, abs=1e-12)


def test_hardy_schroedinger_equation():
    n, h = 3, 1e-5
    th = np.linspace(0.2, 6.0, 6)
    for t in (0.0, 0.7, 2.4):
        dpsi = (hs.hardy_number_state_t(n, t + h, th) - hs.hardy_number_state_t(n, t - h, th)) / (2 * h)
        K0psi = hs.apply_circle_operator(0.5, "K0", lambda x: hs.hardy_number_state_t(n, t, x), th)
        assert 1j * dpsi == pytest.approx(K0psi, abs=1e-8)


def test_hardy_evolve():
    c = np.array([0.6, 0.8j, 0.0, 0.0])
    t = 1.3
    out = hs.hardy_evolve(c, t)
    f = hs.CircleFunction(out)
    th = np.array([0.5, 2.0])
    expect = 0.6 * hs.hardy_number_state_t(0, t, th) + 0.8j * hs.hardy_number_state_t(1, t, th)
    assert f(th) == pytest.approx(expect)
    # a constant additive term shifts the index: k -> k + a
    a = 0.2
    shifted = hs.hardy_evolve(c, t, 0.5, additive_phase=hs.phase_integral_constant(a, t))
    assert shifted == pytest.approx(hs.hardy_evolve(c, t, 0.5 + a))
    assert hs.phase_integral_periodic(0.3, 2.0, 1.0) == pytest.approx(integrate.quad(lambda s: 0.3 * math.cos(2 * s), 0, 1)[0])
    assert hs.phase_integral_periodic(0.3, 0.0, 2.0) == pytest.approx(0.6)


# covering-group action on disc functions

elements = st.builds(
    lambda r, a, w: CoverElement(r * cmath.exp(1j * a), w),
    st.floats(0, 0.5), st.floats(-math.pi, math.pi), st.floats(-3, 3),
)


@given(elements, elements)
@settings(max_examples=25, deadline=None)
def test_covering_unitary_is_homomorphism(g1, g2):
    k = 0.35
    f = DiscFunction([0.5, -0.2j, 0.3, 0.1], k)
    lhs = hs.covering_unitary_on_disc(g2, k, hs.covering_unitary_on_disc(g1, k, f, 160), 160)
    rhs = hs.covering_unitary_on_disc(cover_compose(g2, g1), k, f, 160)
    w = np.array([0.0, 0.3 + 0.2j, -0.4j])
    assert lhs(w) == pytest.approx(rhs(w), abs=1e-9)


@given(elements)
@settings(max_examples=25, deadline=None)
def test_covering_unitary_preserves_norm(g):
    k = 0.8
    f = DiscFunction([0.5, -0.2j, 0.3, 0.1], k)
    assert hs.covering_unitary_on_disc(g, k, f).norm() == pytest.approx(f.norm(), rel=1e-9)


def test_covering_rotation_phases():
    k, w = 0.3, 0.7
    f = DiscFunction([0.0, 0.0, 1.0], k)
    out = hs.covering_unitary_on_disc(CoverElement(0j, w), k, f, 3)
    assert out.taylor_coeffs[2] == pytest.approx(cmath.exp(-2j * w * (2 + k)))
    full = hs.covering_unitary_on_disc(CoverElement(0j, math.pi), k, f, 3)
    assert full.taylor_coeffs[2] == pytest.approx(cmath.exp(-2j * math.pi * k))


def test_multiplier_action_composes_in_reverse():
    k = 0.6
    f = DiscFunction([0.2, 0.7, -0.1j], k)
    g1, g2 = CoverElement(0.3 - 0.1j, 0.4), CoverElement(-0.2j, -0.9)
    lhs = hs.covering_multiplier_action(g2, k, hs.covering_multiplier_action(g1, k, f, 120), 120)
    rhs = hs.covering_multiplier_action(cover_compose(g1, g2), k, f, 120)
    assert lhs(0.25j) == pytest.approx(rhs(0.25j), abs=1e-10)


def test_config_validation():
    with pytest.raises(DomainError):
        hs.HilbertConfig(circle_points=4)
    with pytest.raises(DomainError):
        hs.HilbertConfig(kernel_eps=1.0)
