"""Relativistic two-body Coulomb bound states from the one-loop N-quantum equation.

The radial equations are discretized on a momentum grid uniform in log p,
with Lande subtraction of the logarithmic Coulomb singularity, and solved as a
dense symmetric eigenvalue problem.
"""

from nqa.angular import (
    AngularMomentum,
    CouplingTable,
    build_coupling_table,
    channel_weights,
    clebsch_gordan,
    spin_angle_value,
    verify_sum_rules,
)
from nqa.kernel import MomentumGrid, build_grid, coulomb_partial_wave, legendre_q
from nqa.solver import (
    QuantumState,
    RadialSolution,
    TwoBodySystem,
    assemble,
    normalize,
    refine_uncertainty,
    select_state,
    solve_bound_states,
    solve_state,
)
from nqa.reference import dirac_coulomb_energy

__version__ = "0.1.0"

__all__ = [
    "AngularMomentum",
    "CouplingTable",
    "MomentumGrid",
    "QuantumState",
    "RadialSolution",
    "TwoBodySystem",
    "assemble",
    "build_coupling_table",
    "build_grid",
    "channel_weights",
    "clebsch_gordan",
    "coulomb_partial_wave",
    "dirac_coulomb_energy",
    "legendre_q",
    "normalize",
    "refine_uncertainty",
    "select_state",
    "solve_bound_states",
    "solve_state",
    "spin_angle_value",
    "verify_sum_rules",
]
