"""Truncated series check of the seven-term rational form of F.

``F(u1, u2, u3)`` collects, for every ``lam' = (a+b+c, b+c, c)``, a
polynomial ``F_abc`` in ``N[q, t]`` supported on ``t^i q^j`` with ``i > j``,
such that ``(F_abc - tau F_abc) / (t - q) = g_lam``.  It is given as a sum of
seven rational functions whose denominators are products of ``(m - 1)`` for
monomials ``m`` carrying at least one ``u``; each is expanded as a geometric
series and truncated by total u-degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .qt_algebra import T_MINUS_Q, ZERO, QtPoly, exact_div

UExp = tuple[int, int, int]
# q-exponent, t-exponent, (u1, u2, u3) exponents
Mono = tuple[int, int, UExp]


class InvalidMonomial(ValueError):
    """A geometric factor without any u variable."""


class OutOfBound(ValueError):
    """A coefficient above the truncation degree was requested."""


class USeries:
    """Power series in u1, u2, u3 with QtPoly coefficients, truncated at
    total u-degree ``degree_bound``."""

    __slots__ = ("degree_bound", "coeffs")

    def __init__(self, degree_bound: int, coeffs: dict[UExp, QtPoly] | None = None):
        self.degree_bound = degree_bound
        self.coeffs = {
            k: v for k, v in (coeffs or {}).items() if v and sum(k) <= degree_bound
        }

    @classmethod
    def one(cls, bound: int) -> "USeries":
        return cls(bound, {(0, 0, 0): QtPoly.const(1)})

    @classmethod
    def from_terms(cls, bound: int, terms: Iterable[tuple[int, Mono]]) -> "USeries":
        coeffs: dict[UExp, QtPoly] = {}
        for c, (qe, te, u) in terms:
            coeffs[u] = coeffs.get(u, ZERO) + QtPoly.monomial(qe, te, c)
        return cls(bound, coeffs)

    def __getitem__(self, key: UExp) -> QtPoly:
        if sum(key) > self.degree_bound:
            raise OutOfBound(f"{key} exceeds degree bound {self.degree_bound}")
        return self.coeffs.get(tuple(key), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        return self.degree_bound == other.degree_bound and self.coeffs == other.coeffs

    def __add__(self, other: "USeries") -> "USeries":
        bound = min(self.degree_bound, other.degree_bound)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return USeries(bound, out)

    def __neg__(self) -> "USeries":
        return USeries(self.degree_bound, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def __mul__(self, other) -> "USeries":
        if isinstance(other, (int, QtPoly)):
            return USeries(self.degree_bound, {k: v * other for k, v in self.coeffs.items()})
        bound = min(self.degree_bound, other.degree_bound)
        out: dict[UExp, QtPoly] = {}
        for ka, va in self.coeffs.items():
            da = sum(ka)
            for kb, vb in other.coeffs.items():
                if da + sum(kb) > bound:
                    continue
                key = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2])
                out[key] = out.get(key, ZERO) + va * vb
        return USeries(bound, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"USeries(bound={self.degree_bound}, terms={len(self.coeffs)})"


def geom_expand(m: Mono, bound: int) -> USeries:
    """``1 + m + m^2 + ...`` truncated at total u-degree ``bound``."""
    qe, te, u = m
    du = sum(u)
    if du <= 0:
        raise InvalidMonomial(f"monomial {m} has no u variable")
    coeffs = {}
    for k in range(bound // du + 1):
        coeffs[(k * u[0], k * u[1], k * u[2])] = QtPoly.monomial(k * qe, k * te)
    return USeries(bound, coeffs)


@dataclass(frozen=True)
class RationalTerm:
    """``sign * numerator / prod(m - 1 for m in denominator)``."""

    sign: int
    numerator: tuple[tuple[int, Mono], ...]
    denominator: tuple[Mono, ...]

    def __post_init__(self):
        for m in self.denominator:
            if sum(m[2]) <= 0:
                raise InvalidMonomial(f"denominator factor {m} has no u variable")

    def expand(self, bound: int) -> USeries:
        # 1/(m - 1) = -(1 + m + m^2 + ...)
        series = USeries.from_terms(bound, self.numerator)
        for m in self.denominator:
            series = series * geom_expand(m, bound)
        sign = self.sign * (-1) ** len(self.denominator)
        return series * sign

    def evaluate(self, u1, u2, u3, q0, t0) -> Fraction:
        vals = [Fraction(x) for x in (u1, u2, u3)]
        q0, t0 = Fraction(q0), Fraction(t0)

        def mono(m: Mono) -> Fraction:
            qe, te, u = m
            return q0 ** qe * t0 ** te * vals[0] ** u[0] * vals[1] ** u[1] * vals[2] ** u[2]

        num = sum((c * mono(m) for c, m in self.numerator), Fraction(0))
        den = Fraction(1)
        for m in self.denominator:
            den *= mono(m) - 1
        return self.sign * num / den


def _m(qe: int, te: int, u1: int = 0, u2: int = 0, u3: int = 0) -> Mono:
    return (qe, te, (u1, u2, u3))


def _num(*monos: Mono) -> tuple[tuple[int, Mono], ...]:
    return tuple((1, m) for m in monos)


# Denominator factors, named by their monomial.
U1, TU1, T2U1, Q2T2U1_3 = _m(0, 0, 1), _m(0, 1, 1), _m(0, 2, 1), _m(2, 2, 3)
TU2, T2U2, T3U2, QTU2, Q2T2U2_3 = _m(0, 1, 0, 1), _m(0, 2, 0, 1), _m(0, 3, 0, 1), _m(1, 1, 0, 1), _m(2, 2, 0, 3)
T3U3, QTU3 = _m(0, 3, 0, 0, 1), _m(1, 1, 0, 0, 1)

# The nine-term bracket shared by the third and seventh fractions.
_BRACKET = (
    _m(2, 4, 2, 2), _m(2, 2, 2, 1), _m(2, 2, 1, 2), _m(1, 2, 2), _m(1, 2, 1, 1),
    _m(1, 2, 0, 2), _m(0, 2, 1), _m(0, 2, 0, 1), _m(0, 0),
)


def _times(monos: Sequence[Mono], by: Mono) -> tuple[Mono, ...]:
    bq, bt, bu = by
    return tuple((qe + bq, te + bt, tuple(a + b for a, b in zip(u, bu))) for qe, te, u in monos)


SEVEN_TERMS: tuple[RationalTerm, ...] = (
    # (qt u1^3 + qt u1^2 u2 + qt u1 u2^2 + t u1^2 + t u1 u2 + t u2^2) t
    RationalTerm(-1, _num(*_times((
        _m(1, 1, 3), _m(1, 1, 2, 1), _m(1, 1, 1, 2), _m(0, 1, 2), _m(0, 1, 1, 1), _m(0, 1, 0, 2),
    ), _m(0, 1))), (U1, TU2, T3U3, T2U1, T3U2, Q2T2U1_3, Q2T2U2_3)),
    # u2^3 t (t^3 + q t)
    RationalTerm(-1, _num(_m(0, 4, 0, 3), _m(1, 2, 0, 3)),
                 (U1, TU2, T3U3, T2U1, T3U2, Q2T2U2_3, T2U2)),
    # u2 t (bracket)
    RationalTerm(-1, _num(*_times(_BRACKET, _m(0, 1, 0, 1))),
                 (U1, TU2, T3U3, T3U2, Q2T2U1_3, Q2T2U2_3, QTU2)),
    # (qt u1 + t) t^2 u1^3
    RationalTerm(-1, _num(_m(1, 3, 4), _m(0, 3, 3)),
                 (Q2T2U1_3, T2U1, T3U3, TU2, QTU2, U1, TU1)),
    # u1 u2 t^2
    RationalTerm(-1, _num(_m(0, 2, 1, 1)),
                 (T2U1, T3U3, TU2, QTU2, U1, TU1, T3U2)),
    # u1 t^2 u3 (q t^2 u1^2 + t^2 u1 + 1)
    RationalTerm(-1, _num(*_times((_m(1, 2, 2), _m(0, 2, 1), _m(0, 0)), _m(0, 2, 1, 0, 1))),
                 (U1, QTU2, TU2, T3U3, Q2T2U1_3, QTU3, TU1)),
    # (bracket) t u3
    RationalTerm(-1, _num(*_times(_BRACKET, _m(0, 1, 0, 0, 1))),
                 (U1, QTU2, TU2, T3U3, Q2T2U1_3, Q2T2U2_3, QTU3)),
)


def build_F(bound: int, terms: Sequence[RationalTerm] = SEVEN_TERMS) -> USeries:
    total = USeries(bound)
    for term in terms:
        total = total + term.expand(bound)
    return total


def g_via_genfun(a: int, b: int, c: int, bound: int, F: USeries | None = None) -> QtPoly:
    """g for ``lam' = (a+b+c, b+c, c)``, i.e. ``lam = (3^c, 2^b, 1^a)``."""
    if a + b + c > bound:
        raise OutOfBound(f"({a}, {b}, {c}) exceeds degree bound {bound}")
    if F is None:
        F = build_F(bound)
    coeff = F[(a, b, c)]
    return exact_div(coeff - coeff.tau(), T_MINUS_Q)


@dataclass
class FReport:
    bound: int
    nonnegative: bool
    t_heavy: bool
    n_coefficients: int

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.t_heavy


def check_F_properties(bound: int, F: USeries | None = None) -> FReport:
    if F is None:
        F = build_F(bound)
    nonneg = all(p.is_nonnegative() for p in F.coeffs.values())
    heavy = all(te > qe for p in F.coeffs.values() for (qe, te), _ in p.items())
    return FReport(bound, nonneg, heavy, len(F.coeffs))


def exponent_triples(bound: int) -> list[UExp]:
    return [k for k in product(range(bound + 1), repeat=3) if sum(k) <= bound]
