"""Shared plumbing for the configurable-precision numeric layer.

Everything numeric in this package runs on mpmath binary floats whose
significand width is a runtime parameter (at least 53 bits, i.e. at least
IEEE double).  Callers pass ``precision_bits`` explicitly; these helpers
validate it and convert heterogeneous inputs to ``mpf`` at the current
working precision.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp

from .errors import BadParameter

MIN_PRECISION_BITS = 53


def require_precision(bits: int) -> int:
    """Validate a significand width; the floor is IEEE double (53 bits)."""
    if not isinstance(bits, int) or isinstance(bits, bool) or bits < MIN_PRECISION_BITS:
        raise BadParameter(
            f"precision_bits must be an integer >= {MIN_PRECISION_BITS}, got {bits!r}"
        )
    return bits


def as_mpf(value) -> mpmath.mpf:
    """Convert ``value`` to mpf at the current working precision.

    Accepts mpf, int, float, decimal strings, and Fraction.  Strings are
    parsed at the working precision, so a caller that raises the precision
    before converting keeps all the digits of a decimal literal.
    """
    if isinstance(value, mpmath.mpf):
        return value
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    try:
        result = mp.mpf(value)
    except (TypeError, ValueError) as exc:
        raise BadParameter(f"could not parse {value!r} as a real number") from exc
    if not mp.isfinite(result):
        raise BadParameter(f"value {value!r} is not finite")
    return result
