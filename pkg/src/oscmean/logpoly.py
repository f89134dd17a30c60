"""Exact arithmetic for log-polynomials: finite sums of c * t^m * (log t)^j.

A log-polynomial is stored as a canonical map from the exponent pair
``(t_power, log_power)`` to a nonzero rational coefficient.  ``t_power`` may
be any integer (1/t terms show up constantly in Wronskian work), while
``log_power`` must be nonnegative.  Coefficients are exact
:class:`fractions.Fraction` values, so two log-polynomials are equal exactly
when their canonical term maps coincide -- identity checking is a plain
comparison, never a floating tolerance.

The family is closed under differentiation:

    d/dt [t^m (log t)^j] = m t^(m-1) (log t)^j + j t^(m-1) (log t)^(j-1)

which is what keeps every derivative and Wronskian of curves built from
t-powers and log-powers inside exact arithmetic.

Numeric evaluation (`lp_eval`) is the single bridge out of the exact world:
it sums the terms in canonical order as mpmath binary floats with a
configurable significand width.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

import mpmath
from mpmath import mp

from .errors import BadParameter, NonPositiveArgument
from .precision import as_mpf, require_precision

# Coefficient type: arbitrary-precision numerator over a positive denominator,
# kept in lowest terms by Fraction itself.
Rational = Fraction

TermKey = Tuple[int, int]  # (t_power, log_power)
CoeffLike = Union[Fraction, int]

_TERM_RE = re.compile(r"^(\d+(?:/\d+)?)\*t\^(-?\d+)\*L\^(\d+)$")


class LogPoly:
    """An immutable log-polynomial in canonical form.

    Canonical form means: no zero coefficients are stored, and terms are
    ordered lexicographically by ``(t_power, log_power)``.  Instances are
    hashable and safe to share across threads.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[TermKey, CoeffLike], Iterable[Tuple[TermKey, CoeffLike]]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: Dict[TermKey, Fraction] = {}
        for (t_power, log_power), coeff in items:
            if log_power < 0:
                raise BadParameter(f"negative log power {log_power} is not representable")
            key = (int(t_power), int(log_power))
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coeff)
        object.__setattr__(
            self, "_terms", tuple(sorted((k, c) for k, c in merged.items() if c))
        )

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LogPoly":
        return cls()

    @classmethod
    def constant(cls, value: CoeffLike) -> "LogPoly":
        return cls({(0, 0): value})

    @classmethod
    def term(cls, coeff: CoeffLike, t_power: int = 0, log_power: int = 0) -> "LogPoly":
        """Single term coeff * t^t_power * (log t)^log_power."""
        return cls({(t_power, log_power): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[TermKey, Fraction]:
        """Canonical term map as a fresh dict (keys in canonical order)."""
        return dict(self._terms)

    def items(self) -> Tuple[Tuple[TermKey, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, t_power: int, log_power: int) -> Fraction:
        for key, coeff in self._terms:
            if key == (t_power, log_power):
                return coeff
        return Fraction(0)

    def value_at_one(self) -> Fraction:
        """Exact value at t = 1 (log t vanishes, every t-power is 1)."""
        return sum((c for (_, j), c in self._terms if j == 0), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"LogPoly({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LogPoly":
        if not isinstance(other, LogPoly):
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms:
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return LogPoly(merged)

    def __sub__(self, other) -> "LogPoly":
        if not isinstance(other, LogPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LogPoly":
        return LogPoly({k: -c for k, c in self._terms})

    def __mul__(self, other) -> "LogPoly":
        if isinstance(other, (int, Fraction)):
            return LogPoly({k: c * other for k, c in self._terms})
        if not isinstance(other, LogPoly):
            return NotImplemented
        out: Dict[TermKey, Fraction] = {}
        for (m1, j1), c1 in self._terms:
            for (m2, j2), c2 in other._terms:
                key = (m1 + m2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return LogPoly(out)

    def __rmul__(self, other) -> "LogPoly":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other) -> "LogPoly":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "LogPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise BadParameter(f"log-polynomial powers must be nonnegative integers, got {exponent!r}")
        result = LogPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def diff(self) -> "LogPoly":
        """Exact derivative; stays inside the ring."""
        out: Dict[TermKey, Fraction] = {}
        for (m, j), c in self._terms:
            if m:
                key = (m - 1, j)
                out[key] = out.get(key, Fraction(0)) + c * m
            if j:
                key = (m - 1, j - 1)
                out[key] = out.get(key, Fraction(0)) + c * j
        return LogPoly(out)


# -- module-level operation surface ---------------------------------------


def lp_add(p: LogPoly, q: LogPoly) -> LogPoly:
    """Pointwise coefficient sum, canonicalized."""
    return p + q


def lp_mul(p: LogPoly, q: LogPoly) -> LogPoly:
    """Distributive product; exponents add componentwise."""
    return p * q


def lp_diff(p: LogPoly) -> LogPoly:
    """Exact derivative of ``p``."""
    return p.diff()


def lp_eval(p: LogPoly, t, precision_bits: int = 53) -> mpmath.mpf:
    """Value of ``p`` at ``t > 0`` with at least ``precision_bits`` significand bits.

    Terms are summed in canonical order, so repeat calls are bit-for-bit
    reproducible at a given precision.
    """
    require_precision(precision_bits)
    with mp.workprec(precision_bits):
        tv = as_mpf(t)
        if tv <= 0:
            raise NonPositiveArgument(f"evaluation point must be positive, got {t!r}")
        log_t = mp.log(tv)
        total = mp.mpf(0)
        for (m, j), c in p.items():
            piece = mp.mpf(c.numerator)
            if c.denominator != 1:
                piece = piece / c.denominator
            if m:
                piece = piece * tv ** m
            if j:
                piece = piece * log_t ** j
            total = total + piece
        return +total


def substitute_power(p: LogPoly, power: int) -> LogPoly:
    """Exact substitution t -> t^power for a positive integer power.

    Uses log(t^power) = power * log t, so the result stays in the ring:
    c * t^m * (log t)^j maps to c * power^j * t^(m*power) * (log t)^j.
    """
    if not isinstance(power, int) or power < 1:
        raise BadParameter(f"substitution power must be a positive integer, got {power!r}")
    return LogPoly({(m * power, j): c * power ** j for (m, j), c in p.items()})


# -- plain-text serialization ----------------------------------------------
#
# Format: terms in canonical order, each rendered "c*t^m*L^j" with c a
# positive fraction and L standing for log t; terms joined by " + " / " - ".
# The zero polynomial serializes as "0".  Round-trips are exact.


def to_text(p: LogPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (m, j), c in p.items():
        body = f"{abs(c)}*t^{m}*L^{j}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def from_text(text: str) -> LogPoly:
    s = text.strip()
    if s == "0":
        return LogPoly.zero()
    tokens = s.split()
    if not tokens:
        raise BadParameter("empty log-polynomial text")
    terms: Dict[TermKey, Fraction] = {}

    def consume(token: str, sign: int) -> None:
        match = _TERM_RE.match(token)
        if match is None:
            raise BadParameter(f"malformed log-polynomial term {token!r}")
        coeff = sign * Fraction(match.group(1))
        key = (int(match.group(2)), int(match.group(3)))
        if key in terms:
            raise BadParameter(f"duplicate term for exponents {key} in {text!r}")
        terms[key] = coeff

    first = tokens[0]
    if first.startswith("-"):
        consume(first[1:], -1)
    else:
        consume(first, 1)
    rest = tokens[1:]
    if len(rest) % 2 != 0:
        raise BadParameter(f"malformed log-polynomial text {text!r}")
    for op, token in zip(rest[0::2], rest[1::2]):
        if op == "+":
            consume(token, 1)
        elif op == "-":
            consume(token, -1)
        else:
            raise BadParameter(f"expected '+' or '-' between terms, got {op!r}")
    return LogPoly(terms)
