"""Angular-momentum algebra for the two-fermion spin-angle basis.

Clebsch-Gordan coefficients are evaluated exactly (Racah's sum over rational
factorials) and carried as signed square roots of rationals.  The matrix
elements of ``sigma . p_hat`` between spin-angle functions, acting on the
lepton spin from the left or on the heavy-constituent spin from the right
(``C`` and ``C^T``), are therefore exact surds and the completeness sum rules
hold identically.

Phases follow Condon-Shortley throughout.  Row index of the 2x2 spin matrices
is the lepton spin, column index the heavy-constituent spin, with index 0
meaning spin up.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np
from scipy.special import sph_harm_y

__all__ = [
    "AngularMomentum",
    "ChannelWeights",
    "CouplingTable",
    "Side",
    "Surd",
    "SumRuleReport",
    "build_coupling_table",
    "channel_weights",
    "channels",
    "clebsch_gordan",
    "clebsch_gordan_exact",
    "dump_table",
    "spin_angle_value",
    "spin_matrix",
    "verify_sum_rules",
]


# ---------------------------------------------------------------------------
# exact surds


def _split_square(n: int) -> tuple[int, int]:
    """Write ``n = k**2 * d`` with ``d`` square-free; returns ``(k, d)``."""
    k, d = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    return k, d * n


class Surd:
    """Exact real number ``sum_k r_k sqrt(d_k)`` with square-free ``d_k``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        self._terms = {d: Fraction(r) for d, r in (terms or {}).items() if r != 0}

    @classmethod
    def from_signed_square(cls, sign: int, square: Fraction | int) -> "Surd":
        """Return ``sign * sqrt(square)``."""
        square = Fraction(square)
        if sign == 0 or square == 0:
            return cls()
        if square < 0:
            raise ValueError("square must be non-negative")
        k, d = _split_square(square.numerator * square.denominator)
        return cls({d: Fraction(int(math.copysign(k, sign)), square.denominator)})

    @classmethod
    def rational(cls, value: Fraction | int) -> "Surd":
        return cls({1: Fraction(value)})

    def __add__(self, other):
        other = _as_surd(other)
        terms = dict(self._terms)
        for d, r in other._terms.items():
            terms[d] = terms.get(d, Fraction(0)) + r
        return Surd(terms)

    __radd__ = __add__

    def __neg__(self):
        return Surd({d: -r for d, r in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_surd(other))

    def __rsub__(self, other):
        return _as_surd(other) - self

    def __mul__(self, other):
        other = _as_surd(other)
        out: dict[int, Fraction] = {}
        for d1, r1 in self._terms.items():
            for d2, r2 in other._terms.items():
                g = math.gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                out[d] = out.get(d, Fraction(0)) + r1 * r2 * g
        return Surd(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_surd(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __float__(self):
        return float(sum(float(r) * math.sqrt(d) for d, r in self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_rational(self) -> bool:
        return set(self._terms) <= {1}

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return self._terms.get(1, Fraction(0))

    def __repr__(self):
        if not self._terms:
            return "Surd(0)"
        parts = [f"{r}" if d == 1 else f"{r}*sqrt({d})" for d, r in sorted(self._terms.items())]
        return "Surd(" + " + ".join(parts) + ")"


def _as_surd(x) -> Surd:
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd.rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Surd")


# ---------------------------------------------------------------------------
# angular momenta and Clebsch-Gordan coefficients


@dataclass(frozen=True, order=True)
class AngularMomentum:
    """Angular momentum ``|j m>`` stored as the integers ``2j`` and ``2m``."""

    twice_j: int
    twice_m: int

    def __post_init__(self):
        if self.twice_j < 0:
            raise ValueError(f"negative angular momentum 2j={self.twice_j}")
        if abs(self.twice_m) > self.twice_j:
            raise ValueError(f"|m| > j for 2j={self.twice_j}, 2m={self.twice_m}")
        if (self.twice_j - self.twice_m) % 2:
            raise ValueError(f"j and m differ by a half-integer: 2j={self.twice_j}, 2m={self.twice_m}")

    @classmethod
    def of(cls, j, m) -> "AngularMomentum":
        """Build from ``j`` and ``m`` given as ints, floats or Fractions."""
        tj, tm = Fraction(j) * 2, Fraction(m) * 2
        if tj.denominator != 1 or tm.denominator != 1:
            raise ValueError(f"j={j}, m={m} are not multiples of 1/2")
        return cls(int(tj), int(tm))

    @property
    def j(self) -> Fraction:
        return Fraction(self.twice_j, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.twice_m, 2)


def _fact(n2: int) -> int:
    # factorial of n2/2, n2 even
    return math.factorial(n2 // 2)


@lru_cache(maxsize=None)
def _cg_signed_square(tj1: int, tm1: int, tj2: int, tm2: int, tJ: int, tM: int) -> tuple[int, Fraction]:
    if tm1 + tm2 != tM:
        return 0, Fraction(0)
    if tJ < abs(tj1 - tj2) or tJ > tj1 + tj2 or (tj1 + tj2 + tJ) % 2:
        return 0, Fraction(0)
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tM) > tJ:
        return 0, Fraction(0)
    pre = Fraction(
        (tJ + 1) * _fact(tJ + tj1 - tj2) * _fact(tJ - tj1 + tj2) * _fact(tj1 + tj2 - tJ),
        _fact(tj1 + tj2 + tJ + 2),
    )
    pre *= (
        _fact(tJ + tM) * _fact(tJ - tM) * _fact(tj1 - tm1) * _fact(tj1 + tm1)
        * _fact(tj2 - tm2) * _fact(tj2 + tm2)
    )
    kmin = max(0, (tj2 - tJ - tm1) // 2, (tj1 - tJ + tm2) // 2)
    kmax = min((tj1 + tj2 - tJ) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    s = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            math.factorial(k)
            * _fact(tj1 + tj2 - tJ - 2 * k)
            * _fact(tj1 - tm1 - 2 * k)
            * _fact(tj2 + tm2 - 2 * k)
            * _fact(tJ - tj2 + tm1 + 2 * k)
            * _fact(tJ - tj1 - tm2 + 2 * k)
        )
        s += Fraction((-1) ** k, den)
    if s == 0:
        return 0, Fraction(0)
    return (1 if s > 0 else -1), pre * s * s


def clebsch_gordan_exact(j1: AngularMomentum, j2: AngularMomentum, J: AngularMomentum) -> Surd:
    """Exact ``<j1 m1; j2 m2 | J M>`` as a :class:`Surd`."""
    sign, sq = _cg_signed_square(j1.twice_j, j1.twice_m, j2.twice_j, j2.twice_m, J.twice_j, J.twice_m)
    return Surd.from_signed_square(sign, sq)


def clebsch_gordan(j1: AngularMomentum, j2: AngularMomentum, J: AngularMomentum) -> float:
    """Clebsch-Gordan coefficient ``<j1 m1; j2 m2 | J M>`` (Condon-Shortley phase).

    Returns 0 when ``M != m1 + m2`` or the triangle rule fails.  Non-physical
    projections are rejected when the :class:`AngularMomentum` is built.
    """
    sign, sq = _cg_signed_square(j1.twice_j, j1.twice_m, j2.twice_j, j2.twice_m, J.twice_j, J.twice_m)
    return sign * math.sqrt(sq)


def _cg(tj1, tm1, tj2, tm2, tJ, tM) -> tuple[int, Fraction]:
    return _cg_signed_square(tj1, tm1, tj2, tm2, tJ, tM)


# ---------------------------------------------------------------------------
# spin states and spin-angle functions


def _check_channel(F: int, L: int, S: int) -> None:
    if S not in (0, 1):
        raise ValueError(f"combined spin S={S} not supported (S must be 0 or 1)")
    if L < 0 or F < 0:
        raise ValueError(f"negative angular momentum: F={F}, L={L}")
    if not abs(L - S) <= F <= L + S:
        raise ValueError(f"triangle rule violated: F={F}, L={L}, S={S}")


def spin_matrix(S: int, mS: int) -> np.ndarray:
    """2x2 matrix of the coupled two-spin state ``phi_{S mS}``."""
    if S not in (0, 1):
        raise ValueError(f"combined spin S={S} not supported")
    out = np.zeros((2, 2))
    for a, ta in enumerate((1, -1)):
        for b, tb in enumerate((1, -1)):
            sign, sq = _cg(1, ta, 1, tb, 2 * S, 2 * mS)
            out[a, b] = sign * math.sqrt(sq)
    return out


def _direction_angles(direction) -> tuple[np.ndarray, np.ndarray]:
    d = np.asarray(direction, dtype=float)
    r = np.linalg.norm(d, axis=-1)
    theta = np.arccos(np.clip(d[..., 2] / r, -1.0, 1.0))
    phi = np.arctan2(d[..., 1], d[..., 0])
    return theta, phi


def spherical_harmonic(L: int, m: int, direction) -> np.ndarray:
    """``Y_{Lm}`` at the given direction(s), Condon-Shortley phase."""
    theta, phi = _direction_angles(direction)
    return sph_harm_y(L, m, theta, phi)


def spin_angle_value(F: int, mF: int, L: int, S: int, direction) -> np.ndarray:
    """Spin-angle function as a complex 2x2 matrix at one or many directions.

    ``direction`` is a 3-vector (need not be normalized) or an array of shape
    ``(..., 3)``; the result has shape ``(..., 2, 2)``.
    """
    _check_channel(F, L, S)
    if abs(mF) > F:
        raise ValueError(f"|mF| > F: mF={mF}, F={F}")
    theta, phi = _direction_angles(direction)
    out = np.zeros(np.shape(theta) + (2, 2), dtype=complex)
    for mL in range(-L, L + 1):
        mS = mF - mL
        if abs(mS) > S:
            continue
        sign, sq = _cg(2 * L, 2 * mL, 2 * S, 2 * mS, 2 * F, 2 * mF)
        if sign == 0:
            continue
        y = sph_harm_y(L, mL, theta, phi)
        out += (sign * math.sqrt(sq)) * y[..., None, None] * spin_matrix(S, mS)
    return out


PAULI = np.array(
    [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=complex
)


def sigma_dot(direction) -> np.ndarray:
    """``sigma . n`` for direction(s) ``n``; shape ``(..., 2, 2)``."""
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n, axis=-1, keepdims=True)
    return np.einsum("...k,kab->...ab", n, PAULI)


# ---------------------------------------------------------------------------
# sigma . p_hat coupling coefficients


class Side(enum.Enum):
    """Which constituent ``sigma . p_hat`` acts on.

    ``LEFT`` multiplies the spin-angle matrix from the left (lepton spin),
    giving the coefficients ``C``; ``RIGHT`` multiplies by the transpose from
    the right (heavy-constituent spin), giving ``C^T``.
    """

    LEFT = "left"
    RIGHT = "right"


# <a'| sigma_q |a> for a single spin-1/2, spherical components, as
# (sign, square); keys (2a', q, 2a)
_SIGMA_SPHERICAL: dict[tuple[int, int, int], tuple[int, Fraction]] = {
    (1, 0, 1): (1, Fraction(1)),
    (-1, 0, -1): (-1, Fraction(1)),
    (1, 1, -1): (-1, Fraction(2)),
    (-1, -1, 1): (1, Fraction(2)),
}


def channels(F: int) -> tuple[tuple[int, int], ...]:
    """All ``(L, S)`` with ``S`` in {0, 1} that couple to total ``F``."""
    if F < 0:
        raise ValueError(f"F must be non-negative, got {F}")
    out = [(F, 0)]
    for L in (F - 1, F, F + 1):
        if L >= 0 and abs(L - 1) <= F <= L + 1:
            out.append((L, 1))
    return tuple(sorted(out))


def _spin_element(S2: int, mS2: int, q: int, S1: int, mS1: int, side: Side) -> Surd:
    # <phi_{S2 mS2}| sigma_q (on one constituent) |phi_{S1 mS1}>
    total = Surd()
    for ta in (1, -1):
        for tb in (1, -1):
            s1, c1 = _cg(1, ta, 1, tb, 2 * S1, 2 * mS1)
            if s1 == 0:
                continue
            for ta2 in (1, -1):
                for tb2 in (1, -1):
                    s2, c2 = _cg(1, ta2, 1, tb2, 2 * S2, 2 * mS2)
                    if s2 == 0:
                        continue
                    if side is Side.LEFT:
                        if tb2 != tb:
                            continue
                        key = (ta2, q, ta)
                    else:
                        if ta2 != ta:
                            continue
                        key = (tb2, q, tb)
                    if key not in _SIGMA_SPHERICAL:
                        continue
                    s3, c3 = _SIGMA_SPHERICAL[key]
                    total = total + Surd.from_signed_square(s1 * s2 * s3, c1 * c2 * c3)
    return total


def _orbital_element(L2: int, m2: int, kappa: int, L1: int, m1: int) -> tuple[int, Fraction]:
    # <L2 m2| p_hat_kappa |L1 m1>, p_hat_kappa = sqrt(4 pi/3) Y_{1 kappa}
    sa, ca = _cg(2 * L1, 0, 2, 0, 2 * L2, 0)
    sb, cb = _cg(2 * L1, 2 * m1, 2, 2 * kappa, 2 * L2, 2 * m2)
    if sa == 0 or sb == 0:
        return 0, Fraction(0)
    return sa * sb, Fraction(2 * L1 + 1, 2 * L2 + 1) * ca * cb


@lru_cache(maxsize=None)
def _coupling_element(F: int, mF: int, L: int, S: int, L2: int, S2: int, side: Side) -> Surd:
    # <Y^{F mF}_{L2 S2} | sigma.p_hat | Y^{F mF}_{L S}>
    if abs(L - L2) != 1:
        return Surd()
    total = Surd()
    for mL in range(-L, L + 1):
        mS = mF - mL
        if abs(mS) > S:
            continue
        s1, c1 = _cg(2 * L, 2 * mL, 2 * S, 2 * mS, 2 * F, 2 * mF)
        if s1 == 0:
            continue
        for mL2 in range(-L2, L2 + 1):
            mS2 = mF - mL2
            if abs(mS2) > S2:
                continue
            s2, c2 = _cg(2 * L2, 2 * mL2, 2 * S2, 2 * mS2, 2 * F, 2 * mF)
            if s2 == 0:
                continue
            cg_part = Surd.from_signed_square(s1 * s2, c1 * c2)
            # sigma . p = sum_q (-1)^q sigma_q p_{-q}
            for q in (-1, 0, 1):
                so, co = _orbital_element(L2, mL2, -q, L, mL)
                if so == 0:
                    continue
                spin = _spin_element(S2, mS2, q, S, mS, side)
                if not spin:
                    continue
                total = total + cg_part * Surd.from_signed_square((-1) ** q * so, co) * spin
    return total


@dataclass(frozen=True)
class CouplingTable:
    """Matrix elements of ``sigma . p_hat`` between spin-angle functions.

    ``entries[(L, S)]`` lists ``(L', S', value)`` for every nonzero
    coefficient, i.e. ``sigma.p_hat Y_{LS} = sum value * Y_{L'S'}`` for the
    left side and ``Y_{LS} (sigma.p_hat)^T = sum value * Y_{L'S'}`` for the
    right side.
    """

    F: int
    mF: int
    side: Side
    entries: Mapping[tuple[int, int], tuple[tuple[int, int, Surd], ...]] = field(repr=False)

    def exact(self, L: int, S: int, L2: int, S2: int) -> Surd:
        for l2, s2, v in self.entries.get((L, S), ()):
            if (l2, s2) == (L2, S2):
                return v
        return Surd()

    def value(self, L: int, S: int, L2: int, S2: int) -> float:
        return float(self.exact(L, S, L2, S2))

    @property
    def channels(self) -> tuple[tuple[int, int], ...]:
        return channels(self.F)

    def matrix(self) -> np.ndarray:
        """Dense float matrix ``M[i, k] = C(ch_i -> ch_k)`` over :attr:`channels`."""
        chs = self.channels
        return np.array([[self.value(*a, *b) for b in chs] for a in chs])

    def with_entry(self, L: int, S: int, L2: int, S2: int, value: Surd) -> "CouplingTable":
        """Copy of the table with a single coefficient replaced."""
        entries = {k: list(v) for k, v in self.entries.items()}
        row = [(l2, s2, v) for l2, s2, v in entries.get((L, S), []) if (l2, s2) != (L2, S2)]
        row.append((L2, S2, _as_surd(value)))
        entries[(L, S)] = row
        return CouplingTable(self.F, self.mF, self.side, {k: tuple(v) for k, v in entries.items()})

    def rows(self) -> Iterable[tuple[int, int, int, int, Surd]]:
        for (L, S), row in sorted(self.entries.items()):
            for L2, S2, v in sorted(row, key=lambda t: (t[0], t[1])):
                yield L, S, L2, S2, v


@lru_cache(maxsize=None)
def build_coupling_table(F: int, mF: int | None = None, side: Side | str = Side.LEFT) -> CouplingTable:
    """Tabulate ``C`` (``side='left'``) or ``C^T`` (``side='right'``) for total ``F``.

    Tables are cached; ``mF`` defaults to ``F``.
    """
    side = Side(side)
    if F < 0:
        raise ValueError(f"F must be non-negative, got {F}")
    if mF is None:
        mF = F
    if abs(mF) > F:
        raise ValueError(f"|mF| > F: mF={mF}, F={F}")
    chs = channels(F)
    entries = {}
    for L, S in chs:
        row = []
        for L2, S2 in chs:
            v = _coupling_element(F, mF, L, S, L2, S2, side)
            if v:
                row.append((L2, S2, v))
        entries[(L, S)] = tuple(row)
    return CouplingTable(F, mF, side, entries)


# ---------------------------------------------------------------------------
# sum rules


@dataclass
class SumRuleReport:
    """Per-identity maximum absolute deviation for a ``C``/``C^T`` pair."""

    F: int
    mF: int
    deviations: dict[str, float]
    tolerance: float = 1e-14

    @property
    def passed(self) -> bool:
        return all(d <= self.tolerance for d in self.deviations.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, d in self.deviations.items() if d > self.tolerance]

    def __str__(self):
        lines = [f"F={self.F} mF={self.mF}: {'pass' if self.passed else 'FAIL'}"]
        lines += [f"  {k:<22s} {d:.3e}" for k, d in self.deviations.items()]
        return "\n".join(lines)


def verify_sum_rules(
    table: CouplingTable, partner: CouplingTable | None = None, tolerance: float = 1e-14
) -> SumRuleReport:
    """Check the six ``C``/``C^T`` identities for one ``(F, mF)`` block.

    ``table`` may be either side; the opposite side is built when ``partner``
    is not given.  Identities: sign relations for ``S=0``, ``S=1 -> S'=0`` and
    ``S=1 -> S'=1``; symmetry ``C(a->b) = C(b->a)`` (checked on both sides);
    completeness ``C C = 1`` and ``C^T C^T = 1``.
    """
    if partner is None:
        other = Side.RIGHT if table.side is Side.LEFT else Side.LEFT
        partner = build_coupling_table(table.F, table.mF, other)
    left, right = (table, partner) if table.side is Side.LEFT else (partner, table)
    chs = channels(table.F)

    def dev(x: Surd) -> float:
        return abs(float(x))

    singlet = triplet_to_singlet = triplet = symmetry = 0.0
    for a in chs:
        for b in chs:
            c, ct = left.exact(*a, *b), right.exact(*a, *b)
            if a[1] == 0:
                singlet = max(singlet, dev(c + ct))
            elif b[1] == 0:
                triplet_to_singlet = max(triplet_to_singlet, dev(c + ct))
            else:
                triplet = max(triplet, dev(c - ct))
            symmetry = max(
                symmetry,
                dev(c - left.exact(*b, *a)),
                dev(ct - right.exact(*b, *a)),
            )
    complete_left = complete_right = 0.0
    for a in chs:
        for b in chs:
            delta = 1 if a == b else 0
            sl = sum((left.exact(*a, *m) * left.exact(*m, *b) for m in chs), Surd())
            sr = sum((right.exact(*a, *m) * right.exact(*m, *b) for m in chs), Surd())
            complete_left = max(complete_left, dev(sl - delta))
            complete_right = max(complete_right, dev(sr - delta))
    return SumRuleReport(
        table.F,
        table.mF,
        {
            "sign_S0": singlet,
            "sign_S1_to_S0": triplet_to_singlet,
            "sign_S1_to_S1": triplet,
            "symmetry": symmetry,
            "completeness_C": complete_left,
            "completeness_CT": complete_right,
        },
        tolerance,
    )


# ---------------------------------------------------------------------------
# contracted weights used by the radial equations


@dataclass(frozen=True)
class ChannelWeights:
    """Per-multipole weights multiplying ``V_L`` in the radial equations.

    ``upper_small``: ``sum_S' (C^T_{LS,L'S'})^2``, the ``S(p') p`` term of the
    upper equation.  ``lower_main``: ``sum_S' (C_{LS,L'S'})^2``, the main term
    of the lower equation.  ``lower_small``: the fourfold contraction
    ``C C^T C^T C`` of the lower equation's ``S(p') p`` term.  Keys are
    multipoles, values exact fractions.
    """

    F: int
    L: int
    S: int
    upper_small: Mapping[int, Fraction]
    lower_main: Mapping[int, Fraction]
    lower_small: Mapping[int, Fraction]

    @property
    def max_multipole(self) -> int:
        return max([self.L, *self.upper_small, *self.lower_main, *self.lower_small])


def _as_fraction(x: Surd) -> Fraction:
    if x.is_rational:
        return x.to_fraction()
    raise ArithmeticError(f"contracted weight {x!r} is not rational")


@lru_cache(maxsize=None)
def channel_weights(F: int, L: int, S: int, mF: int | None = None) -> ChannelWeights:
    """Contract the coupling tables of channel ``(F, L, S)`` into multipole weights."""
    _check_channel(F, L, S)
    left = build_coupling_table(F, mF, Side.LEFT)
    right = build_coupling_table(F, mF, Side.RIGHT)
    chs = channels(F)
    upper: dict[int, Surd] = {}
    lower: dict[int, Surd] = {}
    small: dict[int, Surd] = {}
    for L1, S1 in chs:
        ct = right.exact(L, S, L1, S1)
        c = left.exact(L, S, L1, S1)
        upper[L1] = upper.get(L1, Surd()) + ct * ct
        lower[L1] = lower.get(L1, Surd()) + c * c
    for a in chs:
        c1 = left.exact(L, S, *a)
        if not c1:
            continue
        for b in chs:
            t2 = right.exact(*a, *b)
            if not t2:
                continue
            for d in chs:
                term = c1 * t2 * right.exact(*b, *d) * left.exact(L, S, *d)
                if term:
                    small[b[0]] = small.get(b[0], Surd()) + term

    def clean(m: dict[int, Surd]) -> dict[int, Fraction]:
        return {k: _as_fraction(v) for k, v in sorted(m.items()) if v}

    return ChannelWeights(F, L, S, clean(upper), clean(lower), clean(small))


def dump_table(table: CouplingTable) -> str:
    """Plain-text listing ``F mF L S L' S' value`` with 17 significant digits."""
    lines = [f"# side={table.side.value}", "# F mF L S L' S' value"]
    for L, S, L2, S2, v in table.rows():
        lines.append(f"{table.F} {table.mF} {L} {S} {L2} {S2} {float(v):.17g}")
    return "\n".join(lines) + "\n"
