"""Independent oracles: Dirac-Coulomb energies, the Dirac-limit radial equations
and the free two-body kinetic eigenvalues.

The Dirac-limit equations in units of ``m1`` with lepton mass ``M``::

    eps g = -p h + c int dp' p'^2 V_L g(p')
    eps h = -2 M h - p g + c int dp' p'^2 V_L' h(p')

with ``c = alpha / pi^3`` and ``L' = L + 1`` for ``j = L + 1/2`` or ``L - 1``
for ``j = L - 1/2``.  They share grid, kernel and subtraction with the full
solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from nqa.angular import ChannelWeights
from nqa.kernel import MomentumGrid
from nqa.solver import (
    DEFAULT_WINDOW,
    DiscretizedOperator,
    QuantumState,
    RadialSolution,
    TwoBodySystem,
    _assemble,
    _Kinematics,
    select_state,
    solve_bound_states,
)

__all__ = [
    "DiracLevel",
    "dirac_coulomb_energy",
    "dirac_level",
    "dirac_limit_operator",
    "dirac_reference_wavefunction",
    "fourth_order_p4_coefficient",
    "kinetic_eigenvalue_exact",
    "kinetic_eigenvalue_reduced",
    "p4_coefficient_exact",
    "p4_coefficient_reduced",
    "reduced_mass",
]


def reduced_mass(m1: float, m2: float) -> float:
    return m1 * m2 / (m1 + m2)


def _as_half_integer(j) -> Fraction:
    exact = Fraction(j)
    f = exact.limit_denominator(2)
    if f.denominator != 2 or f <= 0 or abs(float(f) - float(exact)) > 1e-12:
        raise ValueError(f"j must be a positive half-integer, got {j}")
    return f


@dataclass(frozen=True)
class DiracLevel:
    """Dirac-Coulomb level; ``energy`` is the binding energy in the units of ``mu``."""

    n: int
    j: Fraction
    mu: float
    alpha: float
    energy: float

    def __post_init__(self):
        if self.n < self.j + Fraction(1, 2):
            raise ValueError(f"n={self.n} must be at least j + 1/2 = {self.j + Fraction(1, 2)}")
        if not self.energy < 0:
            raise ValueError("a bound level has negative binding energy")


def dirac_coulomb_energy(n: int, j, mu: float, alpha: float) -> float:
    """Binding energy ``mu [(1 + (alpha / (n - k + sqrt(k^2 - alpha^2)))^2)^(-1/2) - 1]``.

    ``k = j + 1/2``.  The result carries the units of ``mu``.
    """
    jf = _as_half_integer(j)
    k = float(jf + Fraction(1, 2))
    if n < k:
        raise ValueError(f"n={n} must be at least j + 1/2 = {k:g}")
    if mu <= 0:
        raise ValueError(f"reduced mass must be positive, got {mu}")
    arg = k * k - alpha * alpha
    if arg <= 0:
        raise ValueError(f"alpha (j + 1/2) = {alpha * k} must be below 1")
    x = alpha / (n - k + math.sqrt(arg))
    # 1/sqrt(1 + x^2) - 1 without cancellation
    return -mu * x * x / (math.sqrt(1.0 + x * x) * (1.0 + math.sqrt(1.0 + x * x)))


def dirac_level(n: int, j, mu: float, alpha: float) -> DiracLevel:
    return DiracLevel(n, _as_half_integer(j), mu, alpha, dirac_coulomb_energy(n, j, mu, alpha))


# ---------------------------------------------------------------------------
# Dirac-limit radial equations


def _dirac_kinematics(mass: float) -> _Kinematics:
    return _Kinematics(
        u=lambda p: p,
        v=None,
        tau=lambda p: p,
        diag_g=lambda p: np.zeros_like(p),
        diag_h=lambda p: np.full_like(p, -2.0 * mass),
    )


def _lower_multipole(L: int, j: Fraction) -> int:
    if j == L + Fraction(1, 2):
        return L + 1
    if L > 0 and j == L - Fraction(1, 2):
        return L - 1
    raise ValueError(f"j={j} is not L +- 1/2 for L={L}")


def dirac_limit_operator(
    m1: float,
    mass: float,
    grid: MomentumGrid,
    state: QuantumState,
    alpha: float,
    j=None,
    order: int | None = None,
) -> DiscretizedOperator:
    """Discretized Dirac-Coulomb radial equations for a lepton of mass ``mass``.

    Energies and momenta are in units of ``m1`` (both masses in MeV).  Use
    ``mass = mu`` for the reduced-mass comparison or ``mass = m1`` for the
    strict infinite-``m2`` limit.  ``j`` defaults to ``L + 1/2``.
    """
    if mass <= 0 or m1 <= 0:
        raise ValueError("masses must be positive")
    if state.S not in (0, 1):
        raise ValueError(f"unsupported channel S={state.S}")
    jf = Fraction(2 * state.L + 1, 2) if j is None else _as_half_integer(j)
    lower = _lower_multipole(state.L, jf)
    weights = ChannelWeights(state.F, state.L, state.S, {}, {lower: Fraction(1)}, {})
    mat, scaling = _assemble(_dirac_kinematics(mass / m1), weights, alpha, grid, False, order)
    m2 = m1 * mass / (m1 - mass) if mass < m1 else math.inf
    system = TwoBodySystem(m1, m2, alpha, "dirac")
    return DiscretizedOperator(mat, state, system, grid, scaling, weights, False, "dirac")


def dirac_reference_wavefunction(
    n: int,
    L: int,
    mu: float,
    alpha: float,
    grid: MomentumGrid,
    m1: float | None = None,
    j=None,
    window: tuple[float, float] = DEFAULT_WINDOW,
) -> RadialSolution:
    """Numerical Dirac-Coulomb state on ``grid``, normalized like the solver default.

    ``m1`` sets the momentum unit of ``grid`` (defaults to ``mu``).
    """
    if L > 1:
        raise ValueError("the reference wave function covers S and P channels")
    state = QuantumState(n, L, L, 0) if L == 0 else QuantumState(n, L, L, 1)
    op = dirac_limit_operator(mu if m1 is None else m1, mu, grid, state, alpha, j)
    return select_state(solve_bound_states(op, window), n, L)


# ---------------------------------------------------------------------------
# kinetic terms


def _kinetic(p, m):
    p = np.asarray(p, dtype=float)
    return p * p / (np.sqrt(p * p + m * m) + m)


def kinetic_eigenvalue_exact(p, m1: float, m2: float):
    """``sqrt(p^2 + m2^2) - m2 + sqrt(p^2 + m1^2) - m1``, evaluated without cancellation."""
    if np.any(np.asarray(p) < 0):
        raise ValueError("momentum must be non-negative")
    return _kinetic(p, m2) + _kinetic(p, m1)


def kinetic_eigenvalue_reduced(p, mu: float):
    """``sqrt(p^2 + mu^2) - mu``."""
    if np.any(np.asarray(p) < 0):
        raise ValueError("momentum must be non-negative")
    return _kinetic(p, mu)


def p4_coefficient_exact(m1: float, m2: float) -> float:
    """Coefficient of ``p^4`` in the small-``p`` expansion of the two-body kinetic eigenvalue."""
    return -(m1**3 + m2**3) / (8.0 * m1**3 * m2**3)


def p4_coefficient_reduced(mu: float) -> float:
    """Coefficient of ``p^4`` in ``sqrt(p^2 + mu^2) - mu``, namely ``-1 / (8 mu^3)``."""
    return -1.0 / (8.0 * mu**3)


# central stencil for the fourth derivative, error O(h^4)
_D4_STENCIL = np.array([-1.0 / 6.0, 2.0, -13.0 / 2.0, 28.0 / 3.0, -13.0 / 2.0, 2.0, -1.0 / 6.0])


def fourth_order_p4_coefficient(func: Callable[[np.ndarray], np.ndarray], step: float) -> float:
    """``f''''(0) / 24`` of an even function from a seven-point central stencil.

    ``func`` is sampled at ``|k| step`` for ``k = -3..3``.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    x = np.abs(np.arange(-3, 4)) * step
    return float(_D4_STENCIL @ np.asarray(func(x), dtype=float)) / step**4 / 24.0


def dirac_comparison_levels(n: int, L: int, mu: float, alpha: float) -> Sequence[DiracLevel]:
    """Dirac levels with ``j = L -+ 1/2`` (only ``j = 1/2`` for S states)."""
    js = [Fraction(1, 2)] if L == 0 else [Fraction(2 * L - 1, 2), Fraction(2 * L + 1, 2)]
    return [dirac_level(n, j, mu, alpha) for j in js]
