"""Canonical exact rational arithmetic.

The scalar type used throughout the package is :class:`fractions.Fraction`
from the standard library: it already maintains the canonical form we need
(fully reduced, positive denominator, zero stored as 0/1) on top of
arbitrary-precision integers.  This module adds the few operations the rest
of the package relies on: explicit canonical construction, exact square
roots, and the text format used by the CLI.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def canonicalize(num: int, den: int) -> Fraction:
    """Return the unique reduced fraction num/den with positive denominator.

    Raises ZeroDivisionError when den is 0.
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of ``x``, or ``None``.

    Returns the rational r >= 0 with r*r == x when one exists and ``None``
    otherwise (in particular for every negative input).  Because ``x`` is
    stored reduced, it is a square exactly when numerator and denominator
    are both perfect integer squares, so the test never leaves integer
    arithmetic.
    """
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn = math.isqrt(num)
    if rn * rn != num:
        return None
    rd = math.isqrt(den)
    if rd * rd != den:
        return None
    return Fraction(rn, rd)


def parse_rational(text: str) -> Fraction:
    """Parse the CLI text form: optional sign, integer, or ``p/q``.

    Decimal notation is rejected on purpose -- accepting it would silently
    turn exact inputs into binary-float approximations.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(
            f"not a rational in p/q form: {text!r} (decimals are not accepted)"
        )
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}")


def format_rational(x: Fraction) -> str:
    """Render ``x`` as ``-p/q``, or a bare integer when the denominator is 1."""
    return str(x)
