"""Gauss hypergeometric function 2F1 for real parameters and x < 1.

Direct power series for |x| <= 0.5 and for 0.5 < x < 1; the Pfaff
transformation

    2F1(a, b; c; x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1))

maps x in (-inf, -0.5) onto w = x/(x-1) in (1/3, 1), with (a, b) ordered
so the transformed series has the faster-decaying tail.  Summation stops
on a geometric tail bound of 1e-14 relative.
"""

from __future__ import annotations

import math

from ..errors import ConvergenceError, DomainError

_TAIL_REL = 1.0e-14
_MAX_TERMS = 400_000


def _series(a: float, b: float, c: float, w: float) -> float:
    total = 1.0
    term = 1.0
    pad = abs(a) + abs(b) + 1.0
    for n in range(_MAX_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * w
        total += term
        if n > 8:
            ratio_bound = abs(w) * (1.0 + pad / (n + 1.0))
            if ratio_bound < 1.0:
                tail = abs(term) * ratio_bound / (1.0 - ratio_bound)
                if tail <= _TAIL_REL * max(1.0, abs(total)):
                    return total
    raise ConvergenceError(
        f"2F1 series did not meet the 1e-14 tail bound within {_MAX_TERMS} terms"
    )


def gauss_2f1(a: float, b: float, c: float, x: float) -> float:
    """2F1(a, b; c; x) for real parameters, c not a nonpositive integer,
    and real x < 1 (any negative x via the Pfaff transformation)."""
    for v in (a, b, c, x):
        if not math.isfinite(v):
            raise DomainError("gauss_2f1 requires finite arguments")
    if c <= 0.0 and c == round(c):
        raise DomainError("gauss_2f1: c must not be a nonpositive integer")
    if x >= 1.0:
        raise DomainError("gauss_2f1 implemented for x < 1 only")
    if x == 0.0:
        return 1.0
    if x < -0.5:
        if a > b:
            a, b = b, a
        w = x / (x - 1.0)
        return (1.0 - x) ** (-a) * _series(a, c - b, c, w)
    return _series(a, b, c, x)
