"""Momentum grids and the partial-wave Coulomb kernel.

All momenta are in units of the lepton mass ``m1``.  The partial-wave
projection of ``-1/|p - p'|^2`` is

    V_L(p, p') = -(pi^2 / (p p')) Q_L(y),   y = (p^2 + p'^2) / (2 p p'),

which has an integrable logarithmic singularity at ``p = p'``.  Integrals
against it are discretized with a Lande subtraction: the singular point is
removed from the quadrature sum and a reference integral, evaluated on a
graded composite rule, restores it.  On grids uniform in ``ln p`` the
neighbouring weights additionally carry end corrections for the logarithm.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate, special

__all__ = [
    "KernelSingularityError",
    "MomentumGrid",
    "PartialWaveKernel",
    "SubtractedKernel",
    "build_grid",
    "correction_weights",
    "coulomb_log_coefficients",
    "coulomb_partial_wave",
    "coulomb_partial_waves",
    "lande_subtraction",
    "legendre_q",
    "legendre_q_all",
    "partial_wave_kernel",
    "rational_profile",
    "reference_integrals",
    "sech_profile",
    "validate_reference",
    "zeta_prime_negative_even",
]


class KernelSingularityError(ValueError):
    """Raised when a kernel is evaluated on its singular point ``p = p'``."""


# ---------------------------------------------------------------------------
# Legendre functions of the second kind


def legendre_q_all(lmax: int, y, ym1=None) -> np.ndarray:
    """``Q_0 .. Q_lmax`` at ``y > 1``; result has shape ``(lmax + 1,) + y.shape``.

    ``ym1 = y - 1`` may be passed separately to keep full relative precision
    near the logarithmic singularity.  Close to ``y = 1`` the upward recurrence
    is used; elsewhere the ratios ``Q_n / Q_{n-1}`` come from the backward
    continued fraction, which is stable for the minimal solution.
    """
    if lmax < 0:
        raise ValueError("lmax must be non-negative")
    y = np.asarray(y, dtype=float)
    ym1 = y - 1.0 if ym1 is None else np.asarray(ym1, dtype=float)
    shape = np.broadcast_shapes(y.shape, ym1.shape)
    y, ym1 = (np.broadcast_to(a, shape).ravel() for a in (y, ym1))
    out = np.empty((lmax + 1, y.size))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        q0 = 0.5 * np.log1p(2.0 / ym1)
    out[0] = q0
    if lmax == 0:
        return out.reshape((1,) + shape)

    # growth factor of the dominant solution per step
    with np.errstate(invalid="ignore"):
        log_rho = np.log(y + np.sqrt(ym1 * (y + 1.0)))
    # upward recurrence amplifies errors by ~rho**(2 lmax); keep that below ~1e2
    backward = log_rho > 2.3 / lmax
    up = ~backward

    if np.any(up):
        yu, q_prev = y[up], q0[up]
        with np.errstate(invalid="ignore", over="ignore"):
            q_cur = yu * q_prev - 1.0
        out[1][up] = q_cur
        for n in range(1, lmax):
            with np.errstate(invalid="ignore", over="ignore"):
                q_next = ((2 * n + 1) * yu * q_cur - n * q_prev) / (n + 1)
            out[n + 1][up] = q_next
            q_prev, q_cur = q_cur, q_next

    if np.any(backward):
        yb = y[backward]
        lr = log_rho[backward]
        # relative error of the truncated continued fraction ~ rho**(-2 (N - l))
        extra = int(math.ceil(20.0 / float(lr.min()))) + 2
        top = lmax + extra
        ratio = np.zeros_like(yb)
        ratios = np.empty((lmax + 1, yb.size))
        for n in range(top, 0, -1):
            ratio = n / ((2 * n + 1) * yb - (n + 1) * ratio)
            if n <= lmax:
                ratios[n] = ratio
        q = q0[backward]
        for n in range(1, lmax + 1):
            q = q * ratios[n]
            out[n][backward] = q
    return out.reshape((lmax + 1,) + shape)


def legendre_q(L: int, y: float) -> float:
    """Legendre function of the second kind ``Q_L(y)`` for real ``y > 1``."""
    if L < 0:
        raise ValueError(f"L must be non-negative, got {L}")
    if not y > 1.0:
        raise ValueError(f"Q_L(y) requires y > 1, got {y}")
    return float(legendre_q_all(L, np.float64(y))[L])


# ---------------------------------------------------------------------------
# Coulomb partial waves


def coulomb_partial_waves(lmax: int, p, pp) -> np.ndarray:
    """``V_0 .. V_lmax`` of ``-1/|p - p'|^2``, shape ``(lmax + 1,) + broadcast(p, pp)``.

    Entries with ``p == p'`` come out infinite; callers mask them.
    """
    p = np.asarray(p, dtype=float)
    pp = np.asarray(pp, dtype=float)
    prod = p * pp
    with np.errstate(divide="ignore", invalid="ignore"):
        y = (p * p + pp * pp) / (2.0 * prod)
        ym1 = (p - pp) ** 2 / (2.0 * prod)
        q = legendre_q_all(lmax, y, ym1)
    return -(math.pi**2) * q / prod


def coulomb_partial_wave(L: int, p: float, pp: float) -> float:
    """``V_L(p, p') = -(pi^2 / (p p')) Q_L((p^2 + p'^2) / (2 p p'))``."""
    if p <= 0 or pp <= 0:
        raise ValueError(f"momenta must be positive, got p={p}, p'={pp}")
    if p == pp:
        raise KernelSingularityError(f"V_L is singular at p = p' = {p}")
    return float(coulomb_partial_waves(L, p, pp)[L])


def coulomb_log_coefficients(lmax: int, p, pp) -> np.ndarray:
    """Coefficient of ``ln|p - p'|`` in ``V_0 .. V_lmax``.

    With ``Q_L(y) = P_L(y) [ln(p + p') - ln|p - p'|] - W_{L-1}(y)`` the
    singular part of ``V_L`` is ``(pi^2 / (p p')) P_L(y) ln|p - p'|``.  The
    coefficient is smooth and symmetric, including on the diagonal.
    """
    p = np.asarray(p, dtype=float)
    pp = np.asarray(pp, dtype=float)
    prod = p * pp
    y = (p * p + pp * pp) / (2.0 * prod)
    out = np.empty((lmax + 1,) + y.shape)
    out[0] = 1.0
    if lmax >= 1:
        out[1] = y
    for n in range(1, lmax):
        out[n + 1] = ((2 * n + 1) * y * out[n] - n * out[n - 1]) / (n + 1)
    return math.pi**2 * out / prod


# ---------------------------------------------------------------------------
# grids


MAPPINGS = ("log", "rational", "tangent")
DEFAULT_LOG_RANGE = (1e-7, 1e4)


@dataclass(frozen=True)
class MomentumGrid:
    """Quadrature rule on the momentum half-line.

    ``mapping`` is one of

    ``'rational'``
        Gauss-Legendre on ``[0, 1]`` through ``p = scale t / (1 - c t)``;
        with ``cutoff=None`` infinity sits at ``t = 1``, which is never a node.
    ``'tangent'``
        Gauss-Legendre through ``p = scale tan(pi t / 2)``.
    ``'log'``
        Trapezoid rule with uniform step ``spacing`` in ``ln p`` between
        ``scale * log_range[0]`` and ``scale * log_range[1]``.
    """

    nodes: np.ndarray
    weights: np.ndarray
    mapping: str
    scale: float
    cutoff: float | None = None
    spacing: float | None = None
    log_range: tuple[float, float] | None = None

    def __post_init__(self):
        for arr in (self.nodes, self.weights):
            arr.setflags(write=False)

    @property
    def size(self) -> int:
        return self.nodes.size

    @property
    def uniform_in_log(self) -> bool:
        return self.mapping == "log"

    def __len__(self):
        return self.nodes.size

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, f(self.nodes)))

    def describe(self) -> dict:
        out = {"size": self.size, "mapping": self.mapping, "scale": self.scale}
        if self.mapping == "log":
            out["log_range"] = list(self.log_range)
        else:
            out["cutoff"] = self.cutoff
        return out


def build_grid(
    n: int,
    scale: float = 1.0,
    mapping: str = "rational",
    cutoff: float | None = None,
    log_range: tuple[float, float] = DEFAULT_LOG_RANGE,
) -> MomentumGrid:
    """Momentum grid with ``n`` nodes; see :class:`MomentumGrid` for mappings."""
    if n < 8:
        raise ValueError(f"grid needs at least 8 nodes, got {n}")
    if not scale > 0:
        raise ValueError(f"mapping scale must be positive, got {scale}")
    if mapping not in MAPPINGS:
        raise ValueError(f"unknown mapping {mapping!r}; expected one of {MAPPINGS}")
    if mapping == "log":
        if cutoff is not None:
            raise ValueError("the log mapping is bounded by log_range, not cutoff")
        lo, hi = (float(v) for v in log_range)
        if not 0 < lo < hi:
            raise ValueError(f"log_range must satisfy 0 < lo < hi, got {log_range}")
        s, h = np.linspace(math.log(lo), math.log(hi), n, retstep=True)
        nodes = scale * np.exp(s)
        return MomentumGrid(nodes, h * nodes, mapping, float(scale), None, float(h), (lo, hi))
    x, wx = leggauss(n)
    t = 0.5 * (x + 1.0)
    wt = 0.5 * wx
    if mapping == "rational":
        if cutoff is None:
            c = 1.0
        else:
            if not cutoff > scale:
                raise ValueError("cutoff must exceed the mapping scale")
            c = (cutoff - scale) / cutoff
        nodes = scale * t / (1.0 - c * t)
        weights = wt * scale / (1.0 - c * t) ** 2
    else:
        if cutoff is not None:
            raise ValueError("the tangent mapping has no cutoff form")
        arg = 0.5 * math.pi * t
        nodes = scale * np.tan(arg)
        weights = wt * scale * 0.5 * math.pi / np.cos(arg) ** 2
    return MomentumGrid(nodes, weights, mapping, float(scale), cutoff)


@dataclass(frozen=True)
class PartialWaveKernel:
    """``V_L(p_i, p_j)`` on a grid; the singular diagonal is stored as zero."""

    L: int
    grid: MomentumGrid
    values: np.ndarray

    def __call__(self, p, pp):
        return coulomb_partial_waves(self.L, p, pp)[self.L]

    def log_coefficient(self, p, pp):
        return coulomb_log_coefficients(self.L, p, pp)[self.L]


def partial_wave_kernel(L: int, grid: MomentumGrid) -> PartialWaveKernel:
    p = grid.nodes
    v = coulomb_partial_waves(L, p[:, None], p[None, :])[L]
    np.fill_diagonal(v, 0.0)
    v.setflags(write=False)
    return PartialWaveKernel(L, grid, v)


# ---------------------------------------------------------------------------
# Lande subtraction


def sech_profile(p, pp):
    """Default subtraction profile ``(2 p p' / (p^2 + p'^2))^8 = sech^8(ln(p'/p))``.

    It equals 1 at ``p' = p`` and decays exponentially in ``ln p'`` on both
    sides, so its reference integral is not sensitive to the grid ends.
    """
    return (2.0 * p * pp / (p * p + pp * pp)) ** 8


def rational_profile(p, pp):
    """Alternative profile ``(2 p^2 / (p^2 + p'^2))^2``."""
    return (2.0 * p * p / (p * p + pp * pp)) ** 2


def zeta_prime_negative_even(q: int) -> float:
    """``zeta'(-2q)`` for ``q >= 1`` from the functional equation."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    return (-1) ** q * math.factorial(2 * q) * float(special.zeta(2 * q + 1)) / (2.0 * (2.0 * math.pi) ** (2 * q))


MAX_CORRECTION_ORDER = 8
DEFAULT_CORRECTION_ORDER = 6


@lru_cache(maxsize=None)
def _correction_weights(order: int) -> tuple[float, ...]:
    if order == 0:
        return ()
    k2 = np.arange(1, order + 1, dtype=float) ** 2
    a = k2[None, :] ** np.arange(1, order + 1)[:, None]
    b = np.array([zeta_prime_negative_even(q) for q in range(1, order + 1)])
    g = np.linalg.solve(a, b)
    g += np.linalg.solve(a, b - a @ g)  # one refinement step
    return tuple(float(v) for v in g)


def correction_weights(order: int = DEFAULT_CORRECTION_ORDER) -> np.ndarray:
    """End-correction weights ``gamma_1 .. gamma_order`` for a log singularity.

    On a uniform grid of step ``h`` the rule

        h sum_{j != 0} F(jh) + h sum_k gamma_k [u(kh) + u(-kh)]

    integrates ``F = u(x) ln|x| + v(x)`` with ``u(0) = v(0) = 0`` to
    ``O(h^(2 order + 3))``.  The weights solve
    ``sum_k gamma_k k^(2q) = zeta'(-2q)`` for ``q = 1 .. order``, which cancels
    the generalized Euler-Maclaurin terms of the logarithm.
    """
    if not 0 <= order <= MAX_CORRECTION_ORDER:
        raise ValueError(f"correction order must be in [0, {MAX_CORRECTION_ORDER}], got {order}")
    return np.array(_correction_weights(order))


# panels graded geometrically towards both ends of [0, 1]
_GL_ORDER = 12
_LEVELS_NEAR_ZERO = 30
_LEVELS_NEAR_ONE = 52


def _graded_rule() -> tuple[np.ndarray, np.ndarray]:
    edges = [0.0]
    edges += [2.0 ** (-k) for k in range(_LEVELS_NEAR_ZERO, 1, -1)]
    edges += [0.5]
    edges += [1.0 - 2.0 ** (-k) for k in range(2, _LEVELS_NEAR_ONE + 1)]
    edges = np.array(edges)
    x, w = leggauss(_GL_ORDER)
    a, b = edges[:-1, None], edges[1:, None]
    nodes = 0.5 * (b - a) * x[None, :] + 0.5 * (a + b)
    weights = 0.5 * (b - a) * w[None, :]
    return nodes.ravel(), weights.ravel()


_UNIT_NODES, _UNIT_WEIGHTS = _graded_rule()


def _reference_points(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature points/weights for ``int_0^inf dp'`` split at each ``p_i``."""
    t, wt = _UNIT_NODES, _UNIT_WEIGHTS
    inner = p[:, None] * t[None, :]
    w_inner = p[:, None] * wt[None, :]
    outer = p[:, None] / t[None, :]
    w_outer = p[:, None] * (wt / t**2)[None, :]
    return np.concatenate([inner, outer], axis=1), np.concatenate([w_inner, w_outer], axis=1)


def reference_integrals(kernel, p: np.ndarray, profile=sech_profile, chunk: int = 64) -> np.ndarray:
    """``int_0^inf K(p_i, p') rho(p_i, p') dp'`` for every ``p_i``.

    The kernel may return a leading batch axis; the result then has shape
    ``(nk, N)``.  Rows are processed in chunks to bound memory.
    """
    p = np.atleast_1d(np.asarray(p, dtype=float))
    parts = []
    for start in range(0, p.size, chunk):
        rows = p[start : start + chunk]
        pts, wts = _reference_points(rows)
        vals = kernel(rows[:, None], pts) * profile(rows[:, None], pts)
        parts.append(np.sum(vals * wts, axis=-1))
    return np.concatenate(parts, axis=-1)


@dataclass(frozen=True)
class SubtractedKernel:
    """Nystrom matrix ``M`` with ``M @ f ~ int K(p_i, p') f(p') dp'``.

    ``offdiag[i, j]`` is the (corrected) weight times ``K(p_i, p_j)`` with a
    zero diagonal, ``diagonal[i]`` the Lande term
    ``R_i - sum_j offdiag[i, j] rho(p_i, p_j)`` and ``reference[i] = R_i``.
    """

    offdiag: np.ndarray
    diagonal: np.ndarray
    reference: np.ndarray
    order: int = 0

    @property
    def matrix(self) -> np.ndarray:
        m = self.offdiag.copy()
        idx = np.arange(m.shape[-1])
        m[..., idx, idx] = self.diagonal
        return m

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.offdiag @ f + self.diagonal * f


def _as_callables(kernel, measure, log_coefficient):
    if isinstance(kernel, PartialWaveKernel):
        pw = kernel
        meas = measure if measure is not None else (lambda q: np.ones_like(q))

        def k(p, pp):
            return meas(pp) * pw(p, pp)

        def a(p, pp):
            return meas(pp) * pw.log_coefficient(p, pp)

        return k, a
    return kernel, log_coefficient


def lande_subtraction(
    kernel,
    grid: MomentumGrid,
    profile=sech_profile,
    measure=None,
    log_coefficient=None,
    order: int | None = None,
) -> SubtractedKernel:
    """Discretize ``int_0^inf dp' K(p_i, p') f(p')`` with the singular point subtracted.

    The discrete operator is

        sum_{j != i} W_ij K(p_i, p_j) [f(p_j) - f(p_i) rho(p_i, p_j)] + f(p_i) R_i,

    with ``R_i`` the reference integral of ``K rho``.  On Gauss grids
    ``W_ij = w_j``.  On log grids the weights near the diagonal also carry
    :func:`correction_weights` applied to ``log_coefficient``, the smooth
    coefficient of ``ln|p - p'|`` in ``K``; this lifts the rule from third
    to high order while keeping a symmetric kernel symmetric.

    ``kernel`` is a callable ``K(p, p')`` (broadcasting, optionally with a
    leading batch axis) or a :class:`PartialWaveKernel`, in which case
    ``K = measure(p') V_L(p, p')`` and the log coefficient is known.
    """
    kernel, log_coefficient = _as_callables(kernel, measure, log_coefficient)
    p, w = grid.nodes, grid.weights
    n = p.size
    idx = np.arange(n)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        k = np.array(kernel(p[:, None], p[None, :]), dtype=float)
    k[..., idx, idx] = 0.0

    if order is None:
        order = DEFAULT_CORRECTION_ORDER if grid.uniform_in_log and log_coefficient is not None else 0
    if order:
        if not grid.uniform_in_log:
            raise ValueError("end corrections need a grid uniform in ln p")
        if log_coefficient is None:
            raise ValueError("end corrections need the kernel's log coefficient")
        gam = correction_weights(order)
        a = np.asarray(log_coefficient(p[:, None], p[None, :]), dtype=float)
        for d, g in enumerate(gam, start=1):
            i = idx[: n - d]
            k[..., i, i + d] += g * a[..., i, i + d]
            k[..., i + d, i] += g * a[..., i + d, i]

    off = k * w
    rho = profile(p[:, None], p[None, :])
    rho[idx, idx] = 0.0
    ref = reference_integrals(kernel, p, profile)
    diag = ref - np.sum(off * rho, axis=-1)
    return SubtractedKernel(off, diag, ref, order)


def validate_reference(kernel, p_rows, profile=sech_profile, rtol: float = 1e-10) -> tuple[float, list[int]]:
    """Cross-check reference integrals against adaptive quadrature.

    Each row is split at ``p' = p_i`` (QAGS on ``[0, p_i]``, QAGI on
    ``[p_i, inf)``).  Returns the maximum relative deviation and the indices
    of rows exceeding ``rtol``.
    """
    p_rows = np.atleast_1d(np.asarray(p_rows, dtype=float))
    fast = reference_integrals(kernel, p_rows, profile)
    worst, flagged = 0.0, []
    for i, pi in enumerate(p_rows):

        def f(x, pi=pi):
            return float(kernel(np.float64(pi), np.float64(x)) * profile(pi, x))

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            a, _ = integrate.quad(f, 0.0, pi, limit=400, epsabs=0.0, epsrel=1e-13)
            b, _ = integrate.quad(f, pi, np.inf, limit=400, epsabs=0.0, epsrel=1e-13)
        exact = a + b
        dev = abs(fast[i] - exact) / max(abs(exact), 1e-300)
        worst = max(worst, dev)
        if dev > rtol:
            flagged.append(i)
    return worst, flagged
