"""Exact rational arithmetic.

All coefficient arithmetic in the library is exact.  gmpy2's mpq is used
when available because it is several times faster than the stdlib Fraction
on the long truncated-series computations; Fraction is a drop-in fallback
with identical semantics for everything we do.

Canonical text form: lowest terms, the sign on the numerator, no spaces,
denominator omitted when it is 1 ("3", "-11", "23/22").
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)


def rat(num, den=1):
    """Build an exact rational from integers (or another rational)."""
    return Q(num, den)


def rat_from_str(text: str):
    """Parse the canonical "p" or "p/q" form.  Whitespace is tolerated."""
    text = text.strip()
    if "/" in text:
        p, q = text.split("/", 1)
        return Q(int(p), int(q))
    return Q(int(text))


def rat_to_str(x) -> str:
    """Canonical text form of a rational (see module docstring)."""
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def is_integral(x) -> bool:
    return Q(x).denominator == 1
