"""Sparse polynomials in q and t with exact integer coefficients.

A :class:`QtPoly` maps exponent pairs ``(i, j)`` (meaning ``q**i * t**j``) to
nonzero Python integers.  Values are immutable; every operation returns a new
polynomial in canonical form (no stored zeros), so ``==`` is semantic
equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]


class NonDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class InvalidSample(ValueError):
    """A sample point sits on a pole of the expression being sampled."""


class QtPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if not isinstance(c, int):
                raise TypeError(f"coefficient must be int, got {type(c).__name__}")
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "QtPoly":
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c: int = 1) -> "QtPoly":
        return cls({(i, j): c})

    @classmethod
    def const(cls, c: int) -> "QtPoly":
        return cls({(0, 0): c})

    # -- container protocol -------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        """A copy of the term mapping."""
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QtPoly.const(other)
        if not isinstance(other, QtPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "QtPoly":
        if isinstance(x, QtPoly):
            return x
        if isinstance(x, int):
            return QtPoly.const(x)
        return NotImplemented

    def __add__(self, other) -> "QtPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QtPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QtPoly":
        return QtPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "QtPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QtPoly":
        return (-self) + other

    def __mul__(self, other) -> "QtPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QtPoly._raw({k: v * other for k, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            for (d, e), f in other._terms.items():
                key = (a + d, b + e)
                out[key] = out.get(key, 0) + c * f
        return QtPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QtPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, i: int = 0, j: int = 0) -> "QtPoly":
        """Multiply by the monomial ``q**i * t**j``."""
        return QtPoly._raw({(a + i, b + j): c for (a, b), c in self._terms.items()})

    # -- queries ------------------------------------------------------------

    def tau(self) -> "QtPoly":
        """Swap q and t."""
        return QtPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def degree_in(self, var: str) -> int:
        idx = _VAR_INDEX[var]
        return max((k[idx] for k in self._terms), default=-1)

    def evaluate(self, q0: Scalar, t0: Scalar) -> Fraction:
        return eval_rational(self, q0, t0)

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"QtPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                s for s in (_pow_str("q", i), _pow_str("t", j)) if s
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"q": i, "t": j, "c": str(c)} for (i, j), c in sorted(self._terms.items())
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> "QtPoly":
        return cls(((int(d["q"]), int(d["t"])), int(d["c"])) for d in data["terms"])

    @classmethod
    def from_json(cls, text: str) -> "QtPoly":
        return cls.from_dict(json.loads(text))


def _pow_str(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


_VAR_INDEX = {"q": 0, "t": 1}

ZERO = QtPoly()
ONE = QtPoly.const(1)
q = QtPoly.monomial(1, 0)
t = QtPoly.monomial(0, 1)


def qt_power(k: int) -> QtPoly:
    """``(q*t)**k``."""
    return QtPoly.monomial(k, k)


# -- exact division -------------------------------------------------------


@dataclass(frozen=True)
class Divisor:
    """A divisor ``lead * v + rest`` with ``lead`` in {1, -1}.

    ``var`` names the designated variable ``v``; ``rest`` is a polynomial in
    the other variable only.  Constant divisors use ``var=None`` and store the
    integer in ``constant``.
    """

    name: str
    var: str | None = None
    lead: int = 1
    rest: QtPoly = ZERO
    constant: int = 0

    @property
    def poly(self) -> QtPoly:
        if self.var is None:
            return QtPoly.const(self.constant)
        v = q if self.var == "q" else t
        return v * self.lead + self.rest

    def __str__(self) -> str:
        return self.name


def const_divisor(n: int) -> Divisor:
    if n == 0:
        raise ValueError("division by zero")
    return Divisor(name=f"CONST({n})", constant=n)


T_MINUS_Q = Divisor("T_MINUS_Q", "t", 1, -q)
Q_MINUS_T = Divisor("Q_MINUS_T", "q", 1, -t)
T2_MINUS_Q = Divisor("T2_MINUS_Q", "q", -1, t * t)
Q_MINUS_T2 = Divisor("Q_MINUS_T2", "q", 1, -(t * t))
Q2_MINUS_T = Divisor("Q2_MINUS_T", "t", -1, q * q)
T_MINUS_Q2 = Divisor("T_MINUS_Q2", "t", 1, -(q * q))
Q3_MINUS_T = Divisor("Q3_MINUS_T", "t", -1, q * q * q)
Q_MINUS_T3 = Divisor("Q_MINUS_T3", "q", 1, -(t * t * t))
Q_PLUS_T = Divisor("Q_PLUS_T", "q", 1, t)

DIVISORS = (
    T_MINUS_Q, Q_MINUS_T, T2_MINUS_Q, Q_MINUS_T2, Q2_MINUS_T,
    T_MINUS_Q2, Q3_MINUS_T, Q_MINUS_T3, Q_PLUS_T,
)


def exact_div(p: QtPoly, d: Divisor) -> QtPoly:
    """Return ``u`` with ``u * d == p``; raise :class:`NonDivisible` otherwise.

    Synthetic division in the divisor's designated variable, with
    coefficients that are polynomials in the other variable.
    """
    if d.var is None:
        out = {}
        for k, c in p._terms.items():
            quo, rem = divmod(c, d.constant)
            if rem:
                raise NonDivisible(f"{p} is not divisible by {d.constant}")
            out[k] = quo
        return QtPoly._raw(out)
    if not p:
        return ZERO

    vi = _VAR_INDEX[d.var]
    wi = 1 - vi
    # coefficient of v**k, as {w_exp: int}
    rows: dict[int, dict[int, int]] = {}
    for key, c in p._terms.items():
        rows.setdefault(key[vi], {})[key[wi]] = c
    rest = {k[wi]: c for k, c in d.rest._terms.items()}
    m = max(rows)
    lead = d.lead

    quotient: dict[int, dict[int, int]] = {}
    carry: dict[int, int] = {}  # r * u_k from the previous step
    for k in range(m, 0, -1):
        cur = dict(rows.get(k, {}))
        for e, c in carry.items():
            cur[e] = cur.get(e, 0) - c
        u = {e: c * lead for e, c in cur.items() if c}
        quotient[k - 1] = u
        carry = _mul_univariate(rest, u)
    remainder = dict(rows.get(0, {}))
    for e, c in carry.items():
        remainder[e] = remainder.get(e, 0) - c
    if any(remainder.values()):
        raise NonDivisible(f"{p} is not divisible by {d.poly}")

    out: dict[Exponent, int] = {}
    for k, row in quotient.items():
        for e, c in row.items():
            key = (k, e) if vi == 0 else (e, k)
            out[key] = c
    return QtPoly._raw(out)


def _mul_univariate(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


# -- q,t-analogs ----------------------------------------------------------


def qt_analog(n: int) -> QtPoly:
    """``[n]_{q,t} = q^(n-1) + q^(n-2) t + ... + t^(n-1)``; ``[0] = 0``."""
    if n < 0:
        raise ValueError("qt_analog needs n >= 0")
    return QtPoly._raw({(n - 1 - s, s): 1 for s in range(n)})


def qt_analog_base(n: int, base: str) -> QtPoly:
    """Two-parameter analog ``[n]_{x,y} = sum_s x^(n-1-s) y^s``.

    ``base`` is ``"t2,q"`` for ``[n]_{t^2,q}`` or ``"q2,t"`` for ``[n]_{q^2,t}``.
    """
    if n < 0:
        raise ValueError("qt_analog_base needs n >= 0")
    if base == "t2,q":
        return QtPoly._raw({(s, 2 * (n - 1 - s)): 1 for s in range(n)})
    if base == "q2,t":
        return QtPoly._raw({(2 * (n - 1 - s), s): 1 for s in range(n)})
    raise ValueError(f"unknown base {base!r}")


def qt_range(n: int, m: int) -> QtPoly:
    """``[n -> m] = [n] + [n+1] + ... + [m]``, zero when ``m < n``."""
    if n < 0:
        raise ValueError("qt_range needs n >= 0")
    out: dict[Exponent, int] = {}
    for k in range(n, m + 1):
        for s in range(k):
            key = (k - 1 - s, s)
            out[key] = out.get(key, 0) + 1
    return QtPoly._raw(out)


def eval_rational(p: QtPoly, q0: Scalar, t0: Scalar) -> Fraction:
    """Exact value of ``p`` at ``q = q0``, ``t = t0``."""
    q0, t0 = Fraction(q0), Fraction(t0)
    total = Fraction(0)
    for (i, j), c in p._terms.items():
        total += c * q0 ** i * t0 ** j
    return total
