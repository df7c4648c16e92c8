import math
import warnings

import mpmath
import numpy as np
import pytest
from scipy import integrate

from nqa.kernel import (
    KernelSingularityError,
    PartialWaveKernel,
    build_grid,
    correction_weights,
    coulomb_log_coefficients,
    coulomb_partial_wave,
    coulomb_partial_waves,
    lande_subtraction,
    legendre_q,
    legendre_q_all,
    partial_wave_kernel,
    reference_integrals,
    sech_profile,
    validate_reference,
    zeta_prime_negative_even,
)

# --- Legendre Q ---------------------------------------------------------------


def test_q0_closed_form():
    assert legendre_q(0, 3.0) == pytest.approx(0.5 * math.log(2.0), rel=1e-15)


def test_q1_closed_form():
    assert legendre_q(1, 3.0) == pytest.approx(1.5 * math.log(2.0) - 1.0, rel=1e-14)


def test_q5_against_quadrature():
    mpmath.mp.dps = 30
    ref = float(mpmath.quad(lambda x: mpmath.legendre(5, x) / (2 * (mpmath.mpf("2.5") - x)), [-1, 1]))
    assert legendre_q(5, 2.5) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("y", [1.0 + 1e-12, 1.0 + 1e-6, 1.01, 1.5, 3.0, 20.0, 1e3, 1e6])
def test_q_all_against_mpmath(y):
    mpmath.mp.dps = 40
    got = legendre_q_all(8, np.array(y))
    for L in range(9):
        ref = float(mpmath.legenq(L, 0, mpmath.mpf(y), type=3).real)
        assert got[L] == pytest.approx(ref, rel=1e-12), (L, y)


def test_q_domain_error():
    with pytest.raises(ValueError):
        legendre_q(0, 1.0)
    with pytest.raises(ValueError):
        legendre_q(2, 0.5)


# --- partial-wave Coulomb kernel ---------------------------------------------------

KERNEL_CASES = [(L, p, q) for L in (0, 1, 2) for p, q in ((1.0, 2.0), (0.3, 0.7), (2.0, 1.0), (0.7, 0.3))]


def direct_partial_wave(L, p, q):
    P = np.polynomial.legendre.Legendre.basis(L)
    f = lambda x: float(P(x)) * math.pi**2 * (-1.0) / (p * p + q * q - 2 * p * q * x)
    val, _ = integrate.quad(f, -1.0, 1.0, limit=400, epsabs=0, epsrel=1e-13)
    return val


@pytest.mark.parametrize("L,p,q", KERNEL_CASES)
def test_partial_wave_against_direct_quadrature(L, p, q):
    assert coulomb_partial_wave(L, p, q) == pytest.approx(direct_partial_wave(L, p, q), rel=1e-11)


def test_partial_wave_symmetry():
    rng = np.random.default_rng(0)
    p, q = rng.uniform(0.01, 10, size=(2, 100))
    v = coulomb_partial_waves(6, p, q)
    vt = coulomb_partial_waves(6, q, p)
    assert np.array_equal(v, vt)


def test_partial_wave_negative_and_decreasing_in_l():
    rng = np.random.default_rng(1)
    p, q = rng.uniform(0.01, 10, size=(2, 100))
    v = coulomb_partial_waves(6, p, q)
    assert np.all(v < 0)
    assert np.all(np.diff(np.abs(v), axis=0) < 0)


def test_partial_wave_log_singularity():
    deltas = np.array([1e-5, 1e-7, 1e-9, 1e-11])
    v = np.array([coulomb_partial_wave(0, 1.0, 1.0 + d) for d in deltas])
    slope = np.diff(np.abs(v)) / np.diff(np.log(1 / deltas))
    # V_0 -> -(pi^2 / (p p')) ln(1/delta) + const
    assert np.allclose(slope, math.pi**2, rtol=1e-3)


def test_partial_wave_singular_point_rejected():
    with pytest.raises(KernelSingularityError):
        coulomb_partial_wave(0, 1.0, 1.0)


def test_partial_wave_completeness():
    p, q = 1.0, 1.7
    thetas = np.linspace(0.3, math.pi, 12)
    v = coulomb_partial_waves(40, p, q)
    for th in thetas:
        x = math.cos(th)
        legs = np.array([float(np.polynomial.legendre.Legendre.basis(L)(x)) for L in range(41)])
        recon = np.sum((2 * np.arange(41) + 1) / 2 * v * legs) / math.pi**2
        exact = -1.0 / (p * p + q * q - 2 * p * q * x)
        assert recon == pytest.approx(exact, rel=1e-6)


def test_log_coefficient_matches_singularity():
    # V_L - a_L ln|p - p'| stays bounded as p' -> p
    p = 1.3
    for L in range(4):
        vals = []
        for d in (1e-4, 1e-6, 1e-8):
            q = p + d
            a = coulomb_log_coefficients(L, p, q)[L]
            vals.append(coulomb_partial_waves(L, p, q)[L] - a * math.log(d))
        assert abs(vals[-1] - vals[-2]) < 1e-5


# --- grids -------------------------------------------------------------------------


def test_rational_grid_exponential_integral():
    g = build_grid(48, 1.0, "rational")
    assert g.integrate(lambda p: np.exp(-p)) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("mapping", ["rational", "log"])
def test_hydrogen_momentum_density_normalization(mapping):
    gamma = 7.2973525693e-3 * (938.2720882 / (0.51099895 + 938.2720882))
    g = build_grid(200, gamma, mapping)
    dens = lambda p: (32.0 / math.pi) * p**2 * gamma**5 / (p**2 + gamma**2) ** 4
    assert g.integrate(dens) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("mapping", ["rational", "tangent", "log"])
def test_grid_invariants(mapping):
    g = build_grid(1200, 1.0, mapping)
    assert np.all(np.diff(g.nodes) > 0)
    assert np.all(g.nodes > 0)
    assert np.all(g.weights > 0)
    assert np.isfinite(g.nodes[-1])
    assert len(g) == 1200


def test_grid_rejects_bad_input():
    with pytest.raises(ValueError):
        build_grid(7)
    with pytest.raises(ValueError):
        build_grid(16, 0.0)
    with pytest.raises(ValueError):
        build_grid(16, 1.0, "cubic")


def test_rational_grid_polynomial_exactness():
    n = 20
    g = build_grid(n, 1.0, "rational")
    t = g.nodes / (1 + g.nodes)
    for k in range(2 * n):
        # integrand chosen so f(p) dp = t^k dt
        approx = np.sum(g.weights * t**k * (1 - t) ** 2)
        assert approx == pytest.approx(1.0 / (k + 1), rel=1e-13)


def test_cutoff_grid_stays_below_cutoff():
    g = build_grid(64, 1.0, "rational", cutoff=50.0)
    assert g.nodes[-1] < 50.0
    assert g.integrate(lambda p: np.ones_like(p)) == pytest.approx(50.0, rel=1e-12)


# --- end corrections -------------------------------------------------------------------


def test_zeta_prime_values():
    mpmath.mp.dps = 30
    for q in range(1, 5):
        assert zeta_prime_negative_even(q) == pytest.approx(float(mpmath.zeta(-2 * q, derivative=1)), rel=1e-13)


def test_correction_weights_moment_equations():
    g = correction_weights(6)
    k = np.arange(1, 7)
    for q in range(1, 7):
        assert np.sum(g * k ** (2 * q)) == pytest.approx(zeta_prime_negative_even(q), rel=1e-10)


def test_corrected_trapezoid_log_integral():
    mpmath.mp.dps = 30
    exact = float(mpmath.quad(lambda x: 2 * x**2 * mpmath.e ** (-(x**2)) * mpmath.log(x), [0, 1, mpmath.inf]))
    u = lambda x: x**2 * np.exp(-(x**2))
    errs = []
    for h in (0.4, 0.2, 0.1):
        x = np.arange(1, int(12 / h)) * h
        x = np.concatenate([-x[::-1], x])
        base = h * np.sum(u(x) * np.log(np.abs(x)))
        gam = correction_weights(6)
        k = np.arange(1, 7) * h
        corr = h * np.sum(gam * 2 * u(k))
        errs.append(abs(base + corr - exact))
    assert errs[-1] < 1e-12
    assert errs[0] / errs[1] > 100


# --- Lande subtraction ---------------------------------------------------------------


def adaptive_oracle(L, p, f, measure):
    """int_0^inf measure(q) V_L(p, q) f(q) dq split at the singular point."""

    def g(q):
        if q == p:
            return 0.0
        return measure(q) * coulomb_partial_wave(L, p, q) * f(q)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        a, _ = integrate.quad(g, 0.0, p, limit=400, epsabs=0, epsrel=1e-13)
        b, _ = integrate.quad(g, p, 2 * p + 10, limit=400, epsabs=0, epsrel=1e-13)
        c, _ = integrate.quad(g, 2 * p + 10, np.inf, limit=400, epsabs=0, epsrel=1e-13)
    return a + b + c


def smooth(q):
    return np.exp(-(q**2))


def measure(q):
    return q * q


@pytest.mark.parametrize("L", [0, 1, 2])
def test_lande_smooth_function_log_grid(L):
    grid = build_grid(200, 1.0, "log", log_range=(1e-4, 1e2))
    sub = lande_subtraction(partial_wave_kernel(L, grid), grid, measure=measure)
    approx = sub.apply(smooth(grid.nodes))
    rows = np.flatnonzero((grid.nodes >= 1e-2) & (grid.nodes <= 5.0))
    for i in rows[::7]:
        ref = adaptive_oracle(L, grid.nodes[i], smooth, measure)
        assert approx[i] == pytest.approx(ref, rel=1e-8), grid.nodes[i]


def test_lande_profile_function_collapses_to_reference():
    grid = build_grid(64, 1.0, "rational")
    sub = lande_subtraction(partial_wave_kernel(0, grid), grid, measure=measure)
    for i in (5, 20, 40):
        f = 3.7 * sech_profile(grid.nodes[i], grid.nodes)
        assert sub.apply(f)[i] == pytest.approx(3.7 * sub.reference[i], rel=1e-13)


def test_lande_profile_function_collapses_on_corrected_grid():
    grid = build_grid(64, 1.0, "log", log_range=(1e-3, 1e2))
    sub = lande_subtraction(partial_wave_kernel(1, grid), grid, measure=measure)
    assert sub.order > 0
    for i in (10, 30, 50):
        f = -2.0 * sech_profile(grid.nodes[i], grid.nodes)
        assert sub.apply(f)[i] == pytest.approx(-2.0 * sub.reference[i], rel=1e-13)


def test_lande_convergence_order_classic():
    p0 = 0.8
    ref = adaptive_oracle(0, p0, smooth, measure)
    errs = []
    for n in (50, 100, 200):
        grid = build_grid(n, 1.0, "rational")
        kernel = lambda p, q: measure(q) * coulomb_partial_waves(0, p, q)[0]
        # row at p0: same weights, reference at p0
        q, w = grid.nodes, grid.weights
        rho = sech_profile(p0, q)
        r = reference_integrals(kernel, np.array([p0]))[0]
        approx = np.sum(w * kernel(p0, q) * (smooth(q) - smooth(p0) * rho)) + smooth(p0) * r
        errs.append(abs(approx - ref))
    assert errs[0] / errs[1] >= 4
    assert errs[1] / errs[2] >= 4


def test_lande_corrected_grid_converges_faster():
    def row_error(n):
        grid = build_grid(n, 1.0, "log", log_range=(1e-4, 1e2))
        sub = lande_subtraction(partial_wave_kernel(0, grid), grid, measure=measure)
        i = int(np.argmin(np.abs(grid.nodes - 0.8)))
        return abs(sub.apply(smooth(grid.nodes))[i] / adaptive_oracle(0, grid.nodes[i], smooth, measure) - 1)

    assert row_error(200) < 1e-9
    assert row_error(100) < 1e-5


def test_reference_integrals_validated():
    kernel = PartialWaveKernel(0, None, None)
    worst, flagged = validate_reference(lambda p, q: measure(q) * kernel(p, q), np.array([1e-3, 0.05, 0.8, 3.0, 40.0]))
    assert flagged == []
    assert worst < 1e-10


def test_reference_integrals_validated_batched_multipoles():
    p = np.array([0.01, 0.5, 2.0])
    for L in (1, 3):
        worst, flagged = validate_reference(lambda a, b, L=L: coulomb_partial_waves(L, a, b)[L] * b / np.sqrt(1 + b * b), p)
        assert flagged == [], (L, worst)


def test_order_requires_log_grid():
    grid = build_grid(32, 1.0, "rational")
    with pytest.raises(ValueError):
        lande_subtraction(partial_wave_kernel(0, grid), grid, order=4)


def test_subtracted_kernel_symmetric_when_kernel_symmetric():
    grid = build_grid(80, 1.0, "log", log_range=(1e-3, 1e2))
    sub = lande_subtraction(partial_wave_kernel(2, grid), grid)
    # K w is symmetric after the diagonal similarity sqrt(w)
    sw = np.sqrt(grid.weights)
    m = sub.matrix * (sw[:, None] / sw[None, :])
    np.fill_diagonal(m, 0)
    assert np.abs(m - m.T).max() <= 1e-12 * np.abs(m).max()
