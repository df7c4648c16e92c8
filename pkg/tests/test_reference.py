import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from conftest import ALPHA, M_E, M_MU, M_P
from nqa.reference import (
    DiracLevel,
    dirac_comparison_levels,
    dirac_coulomb_energy,
    dirac_level,
    dirac_limit_operator,
    dirac_reference_wavefunction,
    fourth_order_p4_coefficient,
    kinetic_eigenvalue_exact,
    kinetic_eigenvalue_reduced,
    p4_coefficient_exact,
    p4_coefficient_reduced,
    reduced_mass,
)
from nqa.solver import QuantumState, TwoBodySystem, count_nodes, default_grid, select_state, solve_bound_states

MU_E = reduced_mass(M_E, M_P)
MU_MU = reduced_mass(M_MU, M_P)


# --- analytic Dirac-Coulomb levels -------------------------------------------------------


def test_electronic_ground_state_energy():
    assert round(dirac_coulomb_energy(1, 0.5, MU_E, ALPHA) * 1e6, 5) == -13.59847


def test_muonic_2s_energy():
    assert round(dirac_coulomb_energy(2, Fraction(1, 2), MU_MU, ALPHA) * 1e3, 6) == -0.632134


def test_against_mpmath_closed_form():
    mpmath.mp.dps = 50
    for n, j in ((1, "1/2"), (2, "1/2"), (2, "3/2"), (3, "5/2")):
        k = Fraction(j) + Fraction(1, 2)
        a = mpmath.mpf(ALPHA)
        x = a / (n - mpmath.mpf(float(k)) + mpmath.sqrt(mpmath.mpf(float(k)) ** 2 - a * a))
        ref = mpmath.mpf(MU_E) * (1 / mpmath.sqrt(1 + x * x) - 1)
        assert dirac_coulomb_energy(n, Fraction(j), MU_E, ALPHA) == pytest.approx(float(ref), rel=1e-14)


@pytest.mark.parametrize("alpha", [1e-2, 1e-3, 1e-5])
def test_bohr_limit(alpha):
    for n in (1, 2, 3):
        e = dirac_coulomb_energy(n, 0.5, 1.0, alpha)
        assert abs(e / (-(alpha**2) / (2 * n * n)) - 1) <= alpha**2


def test_levels_ordered():
    e = [dirac_coulomb_energy(n, 0.5, MU_E, ALPHA) for n in range(1, 6)]
    assert all(a < b < 0 for a, b in zip(e, e[1:]))
    # fine structure: higher j lies higher
    assert dirac_coulomb_energy(2, 0.5, MU_E, ALPHA) < dirac_coulomb_energy(2, 1.5, MU_E, ALPHA)


@pytest.mark.parametrize("args", [(1, 1.5), (1, 1.0), (1, 0.0), (0, 0.5)])
def test_domain_errors(args):
    with pytest.raises(ValueError):
        dirac_coulomb_energy(args[0], args[1], MU_E, ALPHA)


def test_strong_coupling_domain_error():
    with pytest.raises(ValueError):
        dirac_coulomb_energy(1, 0.5, 1.0, 1.0)
    with pytest.raises(ValueError):
        dirac_coulomb_energy(1, 0.5, -1.0, ALPHA)


def test_dirac_level_record():
    lvl = dirac_level(2, "3/2", MU_E, ALPHA)
    assert lvl.j == Fraction(3, 2)
    assert lvl.energy < 0
    with pytest.raises(ValueError):
        DiracLevel(1, Fraction(3, 2), MU_E, ALPHA, -1.0)


def test_comparison_levels():
    assert [lvl.j for lvl in dirac_comparison_levels(2, 0, MU_E, ALPHA)] == [Fraction(1, 2)]
    assert [lvl.j for lvl in dirac_comparison_levels(3, 2, MU_E, ALPHA)] == [Fraction(3, 2), Fraction(5, 2)]


# --- Dirac-limit radial equations -----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dirac_limit_operator_reproduces_analytic_s_levels(n):
    system = TwoBodySystem(M_E, M_P, ALPHA)
    grid = default_grid(system, 400)
    op = dirac_limit_operator(M_E, MU_E, grid, QuantumState(n, 0, 0, 0), ALPHA)
    sol = select_state(solve_bound_states(op), n, 0)
    exact = dirac_coulomb_energy(n, 0.5, MU_E, ALPHA) / M_E
    assert sol.epsilon == pytest.approx(exact, rel=1e-7)


@pytest.mark.parametrize("j", ["1/2", "3/2"])
def test_dirac_limit_operator_p_levels(j):
    system = TwoBodySystem(M_E, M_P, ALPHA)
    grid = default_grid(system, 400)
    op = dirac_limit_operator(M_E, MU_E, grid, QuantumState(2, 1, 1, 1), ALPHA, j=j)
    sol = select_state(solve_bound_states(op), 2, 1)
    exact = dirac_coulomb_energy(2, j, MU_E, ALPHA) / M_E
    assert sol.epsilon == pytest.approx(exact, rel=1e-7)


def test_dirac_limit_operator_rejects_bad_input():
    grid = default_grid(TwoBodySystem(M_E, M_P, ALPHA), 32)
    with pytest.raises(ValueError):
        dirac_limit_operator(M_E, -1.0, grid, QuantumState(1, 0, 0, 0), ALPHA)
    with pytest.raises(ValueError):
        dirac_limit_operator(M_E, MU_E, grid, QuantumState(1, 0, 0, 0), ALPHA, j="3/2")


def test_dirac_limit_free_spectrum():
    grid = default_grid(TwoBodySystem(M_E, M_P, ALPHA), 40, "rational")
    op = dirac_limit_operator(M_E, M_E, grid, QuantumState(1, 0, 0, 0), 0.0)
    vals = np.sort(np.linalg.eigvalsh(op.matrix))
    p = grid.nodes
    expect = np.sort(np.concatenate([np.sqrt(1 + p * p) - 1, -np.sqrt(1 + p * p) - 1]))
    assert np.allclose(vals, expect, rtol=1e-13, atol=1e-14)


def test_reference_wavefunction_shape():
    grid = default_grid(TwoBodySystem(M_E, M_P, ALPHA), 300)
    ref = dirac_reference_wavefunction(1, 0, MU_E, ALPHA, grid, m1=M_E)
    assert count_nodes(ref.g) == 0
    assert np.all(ref.g > 0)
    bulk = grid.nodes > 0.1 * ALPHA
    assert np.all(np.diff(ref.g[bulk]) < 0)
    p, w = grid.nodes, grid.weights
    assert np.sum(w * p * p * (ref.g**2 + ref.h**2)) == pytest.approx(1.0, abs=1e-12)


def test_reference_wavefunction_limits_channels():
    grid = default_grid(TwoBodySystem(M_E, M_P, ALPHA), 32)
    with pytest.raises(ValueError):
        dirac_reference_wavefunction(3, 2, MU_E, ALPHA, grid)


# --- kinetic terms ------------------------------------------------------------------------


def test_kinetic_zero_at_rest():
    assert kinetic_eigenvalue_exact(0.0, M_E, M_P) == 0.0
    assert kinetic_eigenvalue_reduced(0.0, MU_E) == 0.0


def test_kinetic_equal_mass_symmetry():
    p = np.linspace(0, 3, 7)
    assert np.array_equal(kinetic_eigenvalue_exact(p, 1.0, 2.0), kinetic_eigenvalue_exact(p, 2.0, 1.0))


def test_kinetic_rejects_negative_momentum():
    with pytest.raises(ValueError):
        kinetic_eigenvalue_exact(-1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        kinetic_eigenvalue_reduced(-1.0, 1.0)


def test_kinetic_leading_terms_agree():
    ratios = []
    for p in (1e-2, 1e-3, 1e-4):
        d = kinetic_eigenvalue_exact(p, M_E, M_P) - kinetic_eigenvalue_reduced(p, MU_E)
        ratios.append(abs(d) / p**2)
    assert ratios[0] > ratios[1] > ratios[2]
    assert ratios[-1] < 1e-6


def test_kinetic_against_mpmath():
    mpmath.mp.dps = 40
    for p in (1e-6, 1e-2, 1.0, 50.0):
        ref = (
            mpmath.sqrt(mpmath.mpf(p) ** 2 + M_P**2) - M_P + mpmath.sqrt(mpmath.mpf(p) ** 2 + M_E**2) - M_E
        )
        assert kinetic_eigenvalue_exact(p, M_E, M_P) == pytest.approx(float(ref), rel=1e-14)


def test_p4_coefficient_exact_against_taylor_oracle():
    mpmath.mp.dps = 40
    f = lambda p: mpmath.sqrt(p * p + M_P**2) - M_P + mpmath.sqrt(p * p + M_E**2) - M_E
    ref = float(mpmath.taylor(f, 0, 4)[4])
    assert p4_coefficient_exact(M_E, M_P) == pytest.approx(ref, rel=1e-14)


def test_p4_coefficient_reduced_is_mu_cubed():
    mpmath.mp.dps = 40
    ref = float(mpmath.taylor(lambda p: mpmath.sqrt(p * p + MU_E**2) - MU_E, 0, 4)[4])
    assert p4_coefficient_reduced(MU_E) == pytest.approx(ref, rel=1e-14)


@pytest.mark.parametrize("m1,m2", [(M_E, M_P), (M_MU, M_P), (M_E, M_E)])
def test_finite_difference_p4(m1, m2):
    step = 0.003 * min(m1, m2)
    fd = fourth_order_p4_coefficient(lambda p: kinetic_eigenvalue_exact(p, m1, m2), step)
    assert fd == pytest.approx(p4_coefficient_exact(m1, m2), rel=1e-6)


def test_finite_difference_step_must_be_positive():
    with pytest.raises(ValueError):
        fourth_order_p4_coefficient(lambda p: p**4, 0.0)


def test_finite_difference_exact_on_quartic():
    assert fourth_order_p4_coefficient(lambda p: 3 * p**4 + p**2, 0.1) == pytest.approx(3.0, rel=1e-10)


def test_reduced_mass_symmetry():
    assert reduced_mass(M_E, M_P) == reduced_mass(M_P, M_E)
    assert reduced_mass(1.0, 1.0) == 0.5
    assert math.isclose(MU_E, M_E * M_P / (M_E + M_P))
