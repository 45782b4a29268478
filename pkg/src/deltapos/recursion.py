"""Direct computation of g_lam through block sums.

For ``lam = (3^a, 2^b, 1^c)`` the conjugate ``lam'`` has ``a`` columns of
height 3, ``b`` of height 2 and ``c`` of height 1.  Each SSYT over {0,1,2}
contributes ``w(#1, #2)``; grouping fillings by column type gives the block
sums ``g[a, k1, k2]`` assembled by :func:`g_via_recursion`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable

from .qt_algebra import (
    T_MINUS_Q,
    ZERO,
    InvalidSample,
    QtPoly,
    eval_rational,
    exact_div,
    qt_analog_base,
    qt_range,
)
from .shapes import classify_blocks, conjugate, enumerate_ssyt, three_part_shape


@dataclass(frozen=True)
class ThreePartShape:
    """``lam = (3^a, 2^b, 1^c)``."""

    a: int
    b: int
    c: int

    @property
    def n(self) -> int:
        return 3 * self.a + 2 * self.b + self.c

    def partition(self):
        return three_part_shape(self.a, self.b, self.c)

    @classmethod
    def from_partition(cls, lam) -> "ThreePartShape":
        if any(p > 3 for p in lam):
            raise ValueError(f"{tuple(lam)} has a part larger than 3")
        return cls(lam.count(3), lam.count(2), lam.count(1))


@lru_cache(maxsize=None)
def w_weight(omega1: int, omega2: int) -> QtPoly:
    """Contribution of one filling with ``omega1`` ones and ``omega2`` twos."""
    num = (qt_analog_base(omega2, "t2,q").shift(0, omega1)
           - qt_analog_base(omega2, "q2,t").shift(omega1, 0))
    return exact_div(num, T_MINUS_Q)


@lru_cache(maxsize=None)
def g_block_bruteforce(a: int, k1: int, k2: int) -> QtPoly:
    total = ZERO
    for j in range(k1 + 1):
        for i in range(k2 + 1):
            total += w_weight(a + i + j, a + k1 + k2 - i - j)
    return total


def g_00k_terms(k: int) -> list[tuple[int, int, int]]:
    """Summands ``(qt)^s [lo -> hi]`` of the closed form, as ``(s, lo, hi)``."""
    if k < 2:
        return []
    top = (2 * k - 2) // 3 - (1 if k % 3 == 1 else 0)
    return [(i, k - i - (i + 1) // 2, 2 * k - 2 - 3 * i) for i in range(top + 1)]


@lru_cache(maxsize=None)
def g_00k_closed(k: int) -> QtPoly:
    total = ZERO
    for s, lo, hi in g_00k_terms(k):
        total += qt_range(lo, hi).shift(s, s)
    return total


@lru_cache(maxsize=None)
def g_a0k_closed(a: int, k: int) -> QtPoly:
    # ranges [k+3i-2 -> 2k+3i-2]; the shifted-by-two variant fails g[1,0,0] = [1]
    total = g_00k_closed(k).shift(a, a)
    for i in range(1, a + 1):
        total += qt_range(k + 3 * i - 2, 2 * k + 3 * i - 2).shift(a - i, a - i)
    return total


@lru_cache(maxsize=None)
def g_block(a: int, k1: int, k2: int) -> QtPoly:
    if k1 > k2:
        k1, k2 = k2, k1
    total = ZERO
    for i in range(k1 + 1):
        total += g_a0k_closed(a + i, k1 + k2 - 2 * i)
    return total


def recursion_terms(shape: ThreePartShape) -> list[tuple[int, int, int]]:
    """Block arguments summed for ``lam = (3^a 2^b 1^c)``, in order."""
    a, b, c = shape.a, shape.b, shape.c
    terms = [(a + i, b - i, c) for i in range(b + 1)]
    terms += [(a, b, c - i) for i in range(1, c + 1)]
    return terms


def g_via_recursion(shape: ThreePartShape | tuple[int, int, int]) -> QtPoly:
    if not isinstance(shape, ThreePartShape):
        shape = ThreePartShape(*shape)
    total = ZERO
    for args in recursion_terms(shape):
        total += g_block(*args)
    return total


def block_signature_sums(shape: ThreePartShape) -> dict[tuple[int, int, int], tuple[int, QtPoly]]:
    """Group the SSYT of ``lam'`` by block arguments.

    Returns ``{(a1 + a2, k1, k2): (number of fillings, sum of w)}``.
    """
    lam_conj = conjugate(shape.partition())
    groups: dict = defaultdict(lambda: [0, ZERO])
    for tab in enumerate_ssyt(lam_conj, 2):
        key = classify_blocks(tab).block_args()
        g = groups[key]
        g[0] += 1
        g[1] = g[1] + w_weight(tab.count(1), tab.count(2))
    return {k: (n, p) for k, (n, p) in groups.items()}


# -- specializations ----------------------------------------------------------


def _g_one_column(n: int) -> QtPoly:
    from .delta_core import g_coefficient

    return g_coefficient((1,) * n)


def check_qt1(n: int) -> bool:
    """g_{(1^n)} at q = t = 1 equals 2 * C(n+2, 4)."""
    if n < 2:
        raise ValueError("check_qt1 needs n >= 2")
    return eval_rational(_g_one_column(n), 1, 1) == 2 * comb(n + 2, 4)


def q_integer(n: int, q0: Fraction) -> Fraction:
    """``[n]_q = 1 + q + ... + q^(n-1)`` at a number."""
    return sum((q0 ** i for i in range(n)), Fraction(0))


def q_binomial(n: int, k: int, q0: Fraction) -> Fraction:
    """Gaussian binomial at a number, as a product of ratios."""
    if k < 0 or k > n:
        return Fraction(0)
    out = Fraction(1)
    for i in range(k):
        out *= (1 - q0 ** (n - i)) / (1 - q0 ** (i + 1))
    return out


def rank_formula(n: int, k: int, q0: Fraction) -> Fraction:
    """``<Delta_{e_k} e_n, e_n>`` at ``t = 1/q``, evaluated at ``q = q0``."""
    q0 = Fraction(q0)
    return (q0 ** (comb(k, 2) - k * (n - 1)) / q_integer(k + 1, q0)
            * q_binomial(n, k, q0) * q_binomial(n + k, k, q0))


def _check_sample(q0: Fraction) -> Fraction:
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise InvalidSample(f"q0 = {q0} is not allowed")
    return q0


def check_rank(n: int, sample_points: Iterable) -> bool:
    """Compare g_{(1^n)}(q0, 1/q0) against the closed rank formula."""
    if n < 2:
        raise ValueError("check_rank needs n >= 2")
    g = _g_one_column(n)
    for q0 in sample_points:
        q0 = _check_sample(q0)
        if q_integer(3, q0) == 0:
            raise InvalidSample(f"[3]_q vanishes at {q0}")
        if eval_rational(g, q0, 1 / q0) != rank_formula(n, 2, q0):
            return False
    return True


def g00n_at_one(n: int) -> Fraction:
    return eval_rational(g_00k_closed(n), 1, 1)
