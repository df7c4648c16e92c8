"""Assembly and solution of the coupled radial bound-state equations.

Units: masses, momenta and energies are in units of the lepton mass ``m1``;
the nucleus (or second constituent) has mass ``xi = m2 / m1``.  With
``E(p) = sqrt(p^2 + xi^2)`` and ``S(p) = p / (E + xi)`` the equations read

    eps g = (E - xi) g - p h
            + c int dp' p'^2 / (2 E') [(E + xi) V_L + S(p') p sum_L' a_L' V_L'] g(p')
    eps h = (E - xi - 2) h - p g
            + c int dp' p'^2 / (2 E') [(E + xi) sum_L' b_L' V_L' + S(p') p sum_L' d_L' V_L'] h(p')

with ``c = alpha / pi^3`` and multipole weights ``a, b, d`` contracted from
the ``sigma . p_hat`` coupling tables.  The diagonal similarity
``s_i = sqrt(w_i) p_i / sqrt(2 E_i (E_i + xi))`` makes the discrete operator
symmetric, so bound states come from a symmetric eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy import linalg

from nqa.angular import ChannelWeights, channel_weights, sigma_dot, spin_angle_value
from nqa.kernel import (
    MomentumGrid,
    build_grid,
    coulomb_log_coefficients,
    coulomb_partial_waves,
    lande_subtraction,
)

__all__ = [
    "DEFAULT_WINDOW",
    "DiscretizedOperator",
    "QuantumState",
    "RadialSolution",
    "TwoBodySystem",
    "assemble",
    "count_nodes",
    "covariant_density",
    "default_grid",
    "drop_small_terms_check",
    "mass_interchange_check",
    "normalize",
    "reconstruct_wavefunction",
    "refine_uncertainty",
    "select_state",
    "solve_bound_states",
    "solve_state",
]

DEFAULT_WINDOW = (-0.5, 0.0)
RESIDUAL_LIMIT = 1e-8
ORBITAL_LETTERS = "SPDFGHIK"


@dataclass(frozen=True)
class TwoBodySystem:
    """Constituent masses in MeV and the coupling ``alpha``."""

    m1: float
    m2: float
    alpha: float
    label: str = ""

    def __post_init__(self):
        if not (self.m1 > 0 and self.m2 > 0):
            raise ValueError(f"masses must be positive, got m1={self.m1}, m2={self.m2}")
        if not 0 <= self.alpha < 1:
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha}")

    @property
    def xi(self) -> float:
        return self.m2 / self.m1

    @property
    def mu(self) -> float:
        """Reduced mass in MeV."""
        if math.isinf(self.m2):
            return self.m1
        return self.m1 * self.m2 / (self.m1 + self.m2)

    @property
    def bohr_momentum(self) -> float:
        """``alpha mu`` in units of ``m1``."""
        return self.alpha * self.mu / self.m1

    def swapped(self) -> "TwoBodySystem":
        label = f"{self.label} (swapped)" if self.label else "swapped"
        return TwoBodySystem(self.m2, self.m1, self.alpha, label)

    def with_alpha(self, alpha: float) -> "TwoBodySystem":
        return replace(self, alpha=alpha)


@dataclass(frozen=True)
class QuantumState:
    """State ``n L_S^F`` with projection ``mF`` (defaults to ``F``)."""

    n: int
    F: int
    L: int
    S: int
    mF: int | None = None

    def __post_init__(self):
        if self.S not in (0, 1):
            raise ValueError(f"combined spin must be 0 or 1, got S={self.S}")
        if min(self.n, self.F + 1, self.L + 1) < 1:
            raise ValueError("quantum numbers must be non-negative with n >= 1")
        if not abs(self.L - self.S) <= self.F <= self.L + self.S:
            raise ValueError(f"F={self.F} violates the triangle rule for L={self.L}, S={self.S}")
        if self.n <= self.L:
            raise ValueError(f"n={self.n} must exceed L={self.L}")
        if self.mF is None:
            object.__setattr__(self, "mF", self.F)
        if abs(self.mF) > self.F:
            raise ValueError(f"|mF| must not exceed F: mF={self.mF}, F={self.F}")

    @property
    def label(self) -> str:
        return f"{self.n}{ORBITAL_LETTERS[self.L]}{self.S}F{self.F}"

    @property
    def nodes(self) -> int:
        return self.n - self.L - 1


@dataclass(frozen=True)
class DiscretizedOperator:
    """Symmetric ``2N x 2N`` matrix ``[[gg, gh], [hg, hh]]`` and its back-transform.

    ``scaling`` holds ``s_i``: the eigenvector ``x`` of ``matrix`` maps to the
    radial functions by ``g = x[:N] / s`` and ``h = x[N:] / s``.
    """

    matrix: np.ndarray
    channel: QuantumState
    system: TwoBodySystem
    grid: MomentumGrid
    scaling: np.ndarray
    weights: ChannelWeights
    small_terms: bool = True
    kind: str = "nqa"

    @property
    def size(self) -> int:
        return self.grid.size


@dataclass(frozen=True)
class RadialSolution:
    """Binding energy ``epsilon`` (units of ``m1``) and radial functions on the grid."""

    epsilon: float
    g: np.ndarray
    h: np.ndarray
    grid: MomentumGrid
    node_count: int
    norm_convention: str
    residual: float
    state: QuantumState | None = None
    system: TwoBodySystem | None = None
    flagged: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def energy_mev(self) -> float:
        if self.system is None:
            raise ValueError("solution carries no system; energy scale unknown")
        return self.epsilon * self.system.m1


# ---------------------------------------------------------------------------
# assembly


@dataclass(frozen=True)
class _Kinematics:
    """Momentum-dependent factors of one family of radial equations."""

    u: Callable[[np.ndarray], np.ndarray]
    v: Callable[[np.ndarray], np.ndarray] | None
    tau: Callable[[np.ndarray], np.ndarray]
    diag_g: Callable[[np.ndarray], np.ndarray]
    diag_h: Callable[[np.ndarray], np.ndarray]


def _nqa_kinematics(xi: float) -> _Kinematics:
    def energy(p):
        return np.sqrt(p * p + xi * xi)

    def u(p):
        e = energy(p)
        return p * np.sqrt((e + xi) / (2.0 * e))

    def v(p):
        e = energy(p)
        return p * p / np.sqrt(2.0 * e * (e + xi))

    def tau(p):
        e = energy(p)
        return p / np.sqrt(2.0 * e * (e + xi))

    def kin(p):
        return p * p / (energy(p) + xi)

    return _Kinematics(u, v, tau, kin, lambda p: kin(p) - 2.0)


def _weight_vectors(weights: ChannelWeights, lmax: int, small_terms: bool) -> tuple[np.ndarray, np.ndarray]:
    main = np.zeros((2, lmax + 1))
    small = np.zeros((2, lmax + 1))
    main[0, weights.L] = 1.0
    for L, c in weights.lower_main.items():
        main[1, L] = float(c)
    if small_terms:
        for L, c in weights.upper_small.items():
            small[0, L] = float(c)
        for L, c in weights.lower_small.items():
            small[1, L] = float(c)
    return main, small


def _assemble(
    kin: _Kinematics,
    weights: ChannelWeights,
    alpha: float,
    grid: MomentumGrid,
    small_terms: bool,
    order: int | None,
) -> tuple[np.ndarray, np.ndarray]:
    p = grid.nodes
    n = p.size
    lmax = weights.max_multipole
    has_small = small_terms and kin.v is not None
    main, small = _weight_vectors(weights, lmax, has_small)
    c = alpha / math.pi**3

    def combine(p_row, p_col, parts):
        out = c * np.einsum("kl,l...->k...", main, parts) * (kin.u(p_row) * kin.u(p_col))
        if has_small:
            out += c * np.einsum("kl,l...->k...", small, parts) * (kin.v(p_row) * kin.v(p_col))
        return out

    def kernel(a, b):
        return combine(a, b, coulomb_partial_waves(lmax, a, b))

    def log_coefficient(a, b):
        return combine(a, b, coulomb_log_coefficients(lmax, a, b))

    mat = np.zeros((2 * n, 2 * n))
    if alpha > 0:
        sub = lande_subtraction(kernel, grid, log_coefficient=log_coefficient, order=order).matrix
        sw = np.sqrt(grid.weights)
        sym = sub * (sw[:, None] / sw[None, :])
        sym = 0.5 * (sym + np.swapaxes(sym, -1, -2))
        mat[:n, :n] = sym[0]
        mat[n:, n:] = sym[1]
    idx = np.arange(n)
    mat[idx, idx] += kin.diag_g(p)
    mat[n + idx, n + idx] += kin.diag_h(p)
    mat[idx, n + idx] = -p
    mat[n + idx, idx] = -p
    scaling = np.sqrt(grid.weights) * kin.tau(p)
    return mat, scaling


def assemble(
    system: TwoBodySystem,
    state: QuantumState,
    grid: MomentumGrid,
    small_terms: bool = True,
    order: int | None = None,
) -> DiscretizedOperator:
    """Discretize the radial equations of ``state`` on ``grid``.

    ``small_terms=False`` drops the ``S(p') p`` integral terms.  ``order``
    selects the log end-correction order of the Lande subtraction (default:
    the kernel module's choice for the grid type).
    """
    if state.S not in (0, 1):
        raise ValueError(f"unsupported channel S={state.S}")
    weights = channel_weights(state.F, state.L, state.S, state.mF)
    mat, scaling = _assemble(_nqa_kinematics(system.xi), weights, system.alpha, grid, small_terms, order)
    return DiscretizedOperator(mat, state, system, grid, scaling, weights, small_terms, "nqa")


def default_grid(system: TwoBodySystem, n: int, mapping: str = "log", scale: float | None = None, **kw) -> MomentumGrid:
    """Grid of ``n`` nodes scaled to the Bohr momentum ``alpha mu / m1``."""
    if scale is None:
        scale = system.bohr_momentum if system.alpha > 0 else 1.0
    return build_grid(n, scale, mapping, **kw)


# ---------------------------------------------------------------------------
# solution


def count_nodes(g: np.ndarray, rel_floor: float = 1e-6) -> int:
    """Sign changes of ``g`` ignoring entries below ``rel_floor * max|g|``."""
    g = np.asarray(g, dtype=float)
    big = np.abs(g) > rel_floor * np.max(np.abs(g))
    signs = np.sign(g[big])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def _leading_sign(g: np.ndarray, rel_floor: float = 1e-6) -> float:
    big = np.flatnonzero(np.abs(g) > rel_floor * np.max(np.abs(g)))
    return 1.0 if g[big[0]] > 0 else -1.0


def _polish(a: np.ndarray, x: np.ndarray, eps: float) -> np.ndarray:
    """One Jacobi sweep on ``(A - eps) x = 0`` over rows with ``|A_ii - eps| >= |eps| / 4``.

    The eigensolver leaves an absolute error of about machine precision times
    ``||A|| / gap`` in every component.  That swamps the tiny components at the
    grid ends; the sweep rebuilds them from the well-resolved bulk.
    """
    d = np.diag(a) - eps
    ok = np.abs(d) >= 0.25 * abs(eps)
    y = x.copy()
    y[ok] = -(a[ok] @ x - d[ok] * x[ok] - eps * x[ok]) / d[ok]
    return y


def solve_bound_states(op: DiscretizedOperator, window: tuple[float, float] = DEFAULT_WINDOW) -> list[RadialSolution]:
    """Eigenpairs of ``op`` with ``window[0] < eps <= window[1]``, ascending.

    Each solution is back-transformed, sign-fixed (first significant ``g``
    entry positive), normalized with the default convention and node-counted.
    ``eps`` is the Rayleigh quotient of the computed eigenvector.  The residual
    ``||(A - eps) x|| / ||x||`` is measured on the symmetric matrix; values
    above ``1e-8`` set ``flagged``.
    """
    lo, hi = window
    if not lo < hi:
        raise ValueError(f"empty window {window}")
    a = op.matrix
    vals, vecs = linalg.eigh(a, subset_by_value=(lo, hi), driver="evr")
    n = op.size
    out = []
    for k in np.argsort(vals):
        x = vecs[:, k]
        # eigh is accurate to eps * ||A|| in absolute terms, set by the largest
        # momenta; the Rayleigh quotient only sees where x lives
        eps = float(x @ a @ x / (x @ x))
        if not lo < eps < hi:
            continue
        x = _polish(a, x, eps)
        res = float(np.linalg.norm(a @ x - eps * x) / np.linalg.norm(x))
        g = x[:n] / op.scaling
        h = x[n:] / op.scaling
        sgn = _leading_sign(g)
        sol = RadialSolution(
            epsilon=eps,
            g=sgn * g,
            h=sgn * h,
            grid=op.grid,
            node_count=count_nodes(g),
            norm_convention="raw",
            residual=res,
            state=op.channel,
            system=op.system,
            flagged=res > RESIDUAL_LIMIT,
            meta={"kind": op.kind, "small_terms": op.small_terms},
        )
        out.append(normalize(sol))
    return out


def select_state(solutions: Sequence[RadialSolution], n: int, L: int) -> RadialSolution:
    """Pick the level with ``n - L - 1`` nodes; fall back to energy order."""
    if not solutions:
        raise LookupError("no bound states to select from")
    target = n - L - 1
    if target < 0:
        raise ValueError(f"n={n} must exceed L={L}")
    ordered = sorted(solutions, key=lambda s: s.epsilon)
    matches = [s for s in ordered if s.node_count == target]
    by_order = ordered[target] if target < len(ordered) else None
    if len(matches) == 1 and (by_order is None or by_order is matches[0]):
        return matches[0]
    if by_order is not None:
        return by_order
    if matches:
        return matches[0]
    raise LookupError(f"level n={n}, L={L} not found among {len(solutions)} solutions")


def covariant_density(sol: RadialSolution, xi: float | None = None) -> np.ndarray:
    """Per-node weight of the covariant normalization functional.

    Reconstructing the 4x4 amplitude, ``Tr[f_bar gamma^0 f]`` integrated over
    angles equals ``(1 - S^2)(g^2 + h^2)``; with the measure ``m2 d^3p / E``
    this gives ``w p^2 2 xi^2 / (E (E + xi)) (g^2 + h^2)`` per node.
    """
    if xi is None:
        if sol.system is None:
            raise ValueError("mass ratio needed for the covariant functional")
        xi = sol.system.xi
    p, w = sol.grid.nodes, sol.grid.weights
    e = np.sqrt(p * p + xi * xi)
    return w * p * p * (2.0 * xi * xi / (e * (e + xi))) * (sol.g**2 + sol.h**2)


def normalize(sol: RadialSolution, convention: str = "default") -> RadialSolution:
    """Rescale ``g, h``; ``'default'``: ``sum w p^2 (g^2 + h^2) = 1``.

    ``'covariant'``: the covariant functional equals ``2 m_b`` with
    ``m_b = 1 + xi + eps`` (units of ``m1``).  The sign convention is kept.
    """
    p, w = sol.grid.nodes, sol.grid.weights
    if convention == "default":
        norm = float(np.sum(w * p * p * (sol.g**2 + sol.h**2)))
        target = 1.0
    elif convention == "covariant":
        if sol.system is None:
            raise ValueError("covariant normalization needs the two-body system")
        norm = float(np.sum(covariant_density(sol)))
        target = 2.0 * (1.0 + sol.system.xi + sol.epsilon)
    else:
        raise ValueError(f"unknown normalization convention {convention!r}")
    if not norm > 0 or not math.isfinite(norm):
        raise ValueError("cannot normalize a zero or non-finite wave function")
    f = math.sqrt(target / norm)
    return replace(sol, g=sol.g * f, h=sol.h * f, norm_convention=convention)


def reconstruct_wavefunction(
    sol: RadialSolution,
    direction,
    state: QuantumState | None = None,
    xi: float | None = None,
) -> np.ndarray:
    """4x4 amplitude at every grid node along ``direction``; shape ``(N, 4, 4)``.

    Blocks (Dirac representation, rows: lepton spinor index):
    ``[[g Y, g S Y (s.n)^T], [h (s.n) Y, h S (s.n) Y (s.n)^T]]`` with ``Y`` the
    spin-angle matrix and ``s.n = sigma . p_hat``.
    """
    state = state or sol.state
    if state is None:
        raise ValueError("quantum numbers needed to reconstruct the amplitude")
    if xi is None:
        xi = sol.system.xi
    n_hat = np.asarray(direction, dtype=float)
    y = spin_angle_value(state.F, state.mF, state.L, state.S, n_hat)
    sp = sigma_dot(n_hat)
    p = sol.grid.nodes
    s_fac = p / (np.sqrt(p * p + xi * xi) + xi)
    a = y
    b = y @ sp.T
    c = sp @ y
    d = sp @ y @ sp.T
    out = np.zeros((p.size, 4, 4), dtype=complex)
    out[:, :2, :2] = sol.g[:, None, None] * a
    out[:, :2, 2:] = (sol.g * s_fac)[:, None, None] * b
    out[:, 2:, :2] = sol.h[:, None, None] * c
    out[:, 2:, 2:] = (sol.h * s_fac)[:, None, None] * d
    return out


# ---------------------------------------------------------------------------
# studies


def solve_state(
    system: TwoBodySystem,
    state: QuantumState,
    n_grid: int,
    mapping: str = "log",
    scale: float | None = None,
    small_terms: bool = True,
    window: tuple[float, float] = DEFAULT_WINDOW,
    **grid_kw,
) -> RadialSolution:
    """Assemble, solve and select ``state`` on a default grid of ``n_grid`` nodes."""
    grid = default_grid(system, n_grid, mapping, scale, **grid_kw)
    sols = solve_bound_states(assemble(system, state, grid, small_terms), window)
    return select_state(sols, state.n, state.L)


def refine_uncertainty(
    system: TwoBodySystem,
    state: QuantumState,
    grid_sizes: Sequence[int],
    **kw,
) -> tuple[float, float, list[float]]:
    """``(eps_best, sigma, eps_per_size)``; sigma is the largest pairwise spread.

    ``eps_best`` comes from the largest grid.
    """
    sizes = list(grid_sizes)
    if len(sizes) < 2:
        raise ValueError("refinement needs at least two grid sizes")
    eps = [solve_state(system, state, n, **kw).epsilon for n in sizes]
    best = eps[int(np.argmax(sizes))]
    return best, float(max(eps) - min(eps)), eps


@dataclass(frozen=True)
class MassInterchangeReport:
    energy_mev: float
    swapped_energy_mev: float
    sigma_mev: float

    @property
    def difference_mev(self) -> float:
        return abs(self.energy_mev - self.swapped_energy_mev)

    @property
    def in_sigmas(self) -> float:
        return self.difference_mev / self.sigma_mev if self.sigma_mev > 0 else math.inf

    def passed(self, k: float = 2.0) -> bool:
        return self.difference_mev <= k * self.sigma_mev


def mass_interchange_check(
    system: TwoBodySystem,
    state: QuantumState,
    grid_sizes: Sequence[int],
    **kw,
) -> MassInterchangeReport:
    """Solve with ``(m1, m2)`` and ``(m2, m1)``; energies in MeV."""
    best, sigma, _ = refine_uncertainty(system, state, grid_sizes, **kw)
    sw = system.swapped()
    best_sw, sigma_sw, _ = refine_uncertainty(sw, state, grid_sizes, **kw)
    sig = max(sigma * system.m1, sigma_sw * sw.m1)
    return MassInterchangeReport(best * system.m1, best_sw * sw.m1, sig)


@dataclass(frozen=True)
class SmallTermsReport:
    epsilon: float
    epsilon_without: float
    bound: float

    @property
    def difference(self) -> float:
        return abs(self.epsilon - self.epsilon_without)


def drop_small_terms_check(system: TwoBodySystem, state: QuantumState, n_grid: int = 800, **kw) -> SmallTermsReport:
    """Energy shift from removing the ``S(p') p`` integral terms (units of ``m1``).

    ``bound`` is the expected size ``alpha^2 (m1 / m2)^2 |eps|``.
    """
    full = solve_state(system, state, n_grid, small_terms=True, **kw).epsilon if system.alpha > 0 else 0.0
    bare = solve_state(system, state, n_grid, small_terms=False, **kw).epsilon if system.alpha > 0 else 0.0
    bound = system.alpha**2 * (system.m1 / system.m2) ** 2 * abs(full)
    return SmallTermsReport(full, bare, bound)
