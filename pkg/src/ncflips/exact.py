"""Exact comparisons against the irrational constants of the bound.

Every predicate reduces ``x <= y * sqrt(2)`` to integer arithmetic, so no
floating point is involved in any certified answer.
"""

from __future__ import annotations

from math import isqrt, sqrt

TAU = 2 + sqrt(2)
C_BOUND = (22 + sqrt(2)) / 12


def le_sqrt2(x: int, y: int) -> bool:
    """``x <= y * sqrt(2)`` for integers ``x`` and ``y >= 0``."""
    if y < 0:
        raise ValueError("y must be non-negative")
    return x <= 0 or x * x <= 2 * y * y


def le_tau(x: int, k: int) -> bool:
    """``x <= (2 + sqrt 2) * k``."""
    return le_sqrt2(x - 2 * k, k)


def gt_tau(x: int, k: int) -> bool:
    return not le_tau(x, k)


def within_c_bound(length: int, delta: int) -> bool:
    """``length <= (22 + sqrt 2) / 12 * delta``."""
    return le_sqrt2(12 * length - 22 * delta, delta)


def floor_c_delta(delta: int) -> int:
    """Largest length allowed by :func:`within_c_bound`."""
    # sqrt(2) * delta is irrational for delta > 0, so flooring it first is exact
    return (22 * delta + isqrt(2 * delta * delta)) // 12


def bad_hole_bound(m: int, k: int) -> bool:
    """``m <= 2k / (2 + sqrt 2)``, equivalently ``m * sqrt 2 <= 2k - 2m``."""
    rhs = 2 * k - 2 * m
    return rhs >= 0 and 2 * m * m <= rhs * rhs


def within_match_bound(length: int, k: int) -> bool:
    """``3 * length <= 5 * k``."""
    return 3 * length <= 5 * k
