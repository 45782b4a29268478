"""Schur coefficients of Delta_{e_3} e_n.

The coefficient of ``s_lam`` is a five-term combination of the specializations
``s_{lam'}[B_mu]`` for ``mu`` of size 4, each over a product of binomials.
We clear the common denominator

    (q - t)^2 (q + t) (q^2 - t) (q^3 - t) (q - t^2) (q - t^3)

and divide it back out factor by factor, so polynomiality is checked rather
than assumed.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .qt_algebra import (
    Q2_MINUS_T,
    Q3_MINUS_T,
    Q_MINUS_T,
    Q_MINUS_T2,
    Q_MINUS_T3,
    Q_PLUS_T,
    ONE,
    InvalidSample,
    NonDivisible,
    QtPoly,
    eval_rational,
    exact_div,
    q,
    t,
)
from .shapes import Alphabet, Partition, conjugate, schur_eval

log = logging.getLogger(__name__)


class WrongSize(ValueError):
    pass


class NonPolynomial(ArithmeticError):
    """The cleared numerator was not divisible by the common denominator."""


def b_alphabet(mu: Sequence[int]) -> Alphabet:
    """Cells of ``mu`` as ``q^{a'} t^{l'}``: ``a'`` cells to the left, ``l'`` below."""
    mu = Partition(mu)
    if mu.size != 4:
        raise WrongSize(f"{tuple(mu)} is not a partition of 4")
    return Alphabet((col, row) for row, length in enumerate(mu) for col in range(length))


# (numerator factor, Macdonald index, denominator factors)
_TERMS = (
    (ONE, (4,), (Q_MINUS_T, Q2_MINUS_T, Q3_MINUS_T)),
    (-(q * q + q + t + 1), (3, 1), (Q_PLUS_T, Q3_MINUS_T, Q_MINUS_T, Q_MINUS_T)),
    (-(q * t - 1), (2, 2), (Q_MINUS_T2, Q2_MINUS_T, Q_MINUS_T, Q_MINUS_T)),
    (t * t + q + t + 1, (2, 1, 1), (Q_PLUS_T, Q_MINUS_T3, Q_MINUS_T, Q_MINUS_T)),
    (-ONE, (1, 1, 1, 1), (Q_MINUS_T, Q_MINUS_T3, Q_MINUS_T2)),
)

COMMON_DENOMINATOR = (Q_MINUS_T, Q_MINUS_T, Q_PLUS_T, Q2_MINUS_T, Q3_MINUS_T, Q_MINUS_T2, Q_MINUS_T3)


def _product(divisors) -> QtPoly:
    out = ONE
    for d in divisors:
        out = out * d.poly
    return out


def _cofactor(denominator) -> QtPoly:
    missing = Counter(COMMON_DENOMINATOR)
    missing.subtract(denominator)
    assert all(v >= 0 for v in missing.values())
    return _product(missing.elements())


@lru_cache(maxsize=None)
def delta3_coefficient(lam: Sequence[int]) -> QtPoly:
    lam = Partition(lam)
    if lam.first() > 4:
        return QtPoly()
    mu = conjugate(lam)
    num = QtPoly()
    for factor, index, denominator in _TERMS:
        num += factor * _cofactor(denominator) * schur_eval(mu, b_alphabet(index))
    try:
        for d in COMMON_DENOMINATOR:
            num = exact_div(num, d)
    except NonDivisible as exc:
        raise NonPolynomial(f"coefficient of s_{tuple(lam)} is not a polynomial") from exc
    return num


# -- sampled check of the partial-fraction form -------------------------------


def _check_point(q0: Fraction, t0: Fraction) -> None:
    bad = (
        q0 in (0, 1) or t0 in (0, 1) or q0 == t0 or q0 == -t0
        or q0 ** 2 == t0 or q0 ** 3 == t0 or q0 == t0 ** 2 or q0 == t0 ** 3
        or t0 ** 2 == q0 or t0 ** 3 == q0 or t0 ** 2 == -q0
    )
    if bad:
        raise InvalidSample(f"({q0}, {t0}) is a pole of the sampled formula")


def _s(mu, letters, x, y) -> Fraction:
    return eval_rational(schur_eval(mu, letters), x, y)


def _F_value(mu, x: Fraction, y: Fraction) -> Fraction:
    # letters as (q, t) exponents; evaluated at q = x, t = y
    cubic = _s(mu, ((0, 0), (1, 0), (2, 0), (3, 0)), x, y)
    square = _s(mu, ((0, 0), (1, 0), (0, 1), (1, 1)), x, y)
    mixed = _s(mu, ((0, 0), (1, 0), (0, 1), (2, 0)), x, y)
    return (
        (cubic - square) / ((x - 1) * x ** 2 * (x ** 2 - y))
        - (cubic - mixed) / (x ** 2 * (x - 1) * (x ** 3 - y))
        - (x + 1) * (mixed - square) / (2 * (x - y) * x ** 2 * (x - 1))
        + square / (2 * x ** 2 * y)
    )


def delta3_F_formula(lam: Sequence[int], q0, t0) -> Fraction:
    """The partial-fraction expression for the coefficient of ``s_lam``,
    evaluated exactly at ``(q0, t0)``."""
    q0, t0 = Fraction(q0), Fraction(t0)
    _check_point(q0, t0)
    mu = conjugate(Partition(lam))
    s_q2 = _s(mu, ((0, 0), (1, 0), (0, 1), (2, 0)), q0, t0)
    s_t2 = _s(mu, ((0, 0), (1, 0), (0, 1), (0, 2)), q0, t0)
    return (
        (_F_value(mu, q0, t0) - _F_value(mu, t0, q0)) / (q0 - t0)
        - (s_q2 / q0 ** 2 - s_t2 / t0 ** 2) / (2 * (q0 ** 2 - t0 ** 2))
    )


def delta3_via_F_samplecheck(lam: Sequence[int], sample_points: Iterable) -> bool:
    points = [(Fraction(a), Fraction(b)) for a, b in sample_points]
    for q0, t0 in points:
        _check_point(q0, t0)
    target = delta3_coefficient(lam)
    return all(delta3_F_formula(lam, q0, t0) == eval_rational(target, q0, t0)
               for q0, t0 in points)


# -- positivity probe ---------------------------------------------------------


@dataclass
class PositivityReport:
    lam: tuple[int, ...]
    polynomial: QtPoly
    nonnegative: bool
    tau_symmetric: bool
    value_at_one: Fraction

    @property
    def status(self) -> str:
        return "PASS" if self.nonnegative and self.tau_symmetric else "WARN"


def positivity_report(lam: Sequence[int]) -> PositivityReport:
    p = delta3_coefficient(lam)
    rep = PositivityReport(
        tuple(lam), p, p.is_nonnegative(), p.tau() == p, eval_rational(p, 1, 1)
    )
    if rep.status == "WARN":
        log.warning("Delta_e3 coefficient of s_%s: nonnegative=%s tau-symmetric=%s",
                    tuple(lam), rep.nonnegative, rep.tau_symmetric)
    return rep
