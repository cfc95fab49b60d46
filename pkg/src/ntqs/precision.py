"""Configurable extended-precision arithmetic.

All non-integer quantities in the library are carried as MPFR floats
(`gmpy2.mpfr`), correctly rounded at a configurable significand width.
The default width is 113 bits (IEEE binary128 significand); anything
below 53 bits is rejected.
"""

from __future__ import annotations

import gmpy2

from .errors import DomainError

DEFAULT_PREC = 113
MIN_PREC = 53


def check_prec(prec: int) -> int:
    if prec < MIN_PREC:
        raise DomainError(f"precision must be >= {MIN_PREC} bits, got {prec}")
    return int(prec)


def workprec(prec: int = DEFAULT_PREC):
    """Context manager installing a thread-local MPFR context at `prec` bits."""
    return gmpy2.context(precision=check_prec(prec))


def mpf(x, prec: int = DEFAULT_PREC):
    """Convert `x` (int, float, str, mpfr or Fraction) to mpfr at `prec` bits."""
    with workprec(prec):
        if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, int):
            return gmpy2.mpfr(x.numerator) / gmpy2.mpfr(x.denominator)
        return gmpy2.mpfr(x)


def const_pi(prec: int = DEFAULT_PREC):
    with workprec(prec):
        return gmpy2.const_pi()


def const_ln2(prec: int = DEFAULT_PREC):
    with workprec(prec):
        return gmpy2.log(gmpy2.mpfr(2))


def const_euler(prec: int = DEFAULT_PREC):
    with workprec(prec):
        return gmpy2.const_euler()


def decimal_digits(prec: int) -> int:
    """Decimal digits needed to round-trip a `prec`-bit significand."""
    return int(prec * 0.30103) + 3


def to_decimal(x, prec: int = DEFAULT_PREC) -> str:
    """Full-precision decimal string for report emission."""
    if isinstance(x, (int,)):
        return str(x)
    return gmpy2.mpfr(x).__format__(f".{decimal_digits(prec)}g")


def eps(prec: int):
    """One ulp at unit scale for the configured width."""
    return mpf(2, prec) ** (-prec)
