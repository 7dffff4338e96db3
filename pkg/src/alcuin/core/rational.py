"""
Exact rational rounding and residue arithmetic.

This module provides:
- floor, ceiling and nearest-integer of a rational, computed on integers only
- Euclidean decomposition p = m*n + r
- A checked signed range for integers that must fit a fixed width
"""

from dataclasses import dataclass
from fractions import Fraction

from alcuin.config.settings import settings
from alcuin.errors import OverflowRangeError

Rational = Fraction


def rational(numerator: int, denominator: int = 1) -> Rational:
    """
    Build a rational from an integer numerator and a positive denominator.

    Args:
        numerator: Any integer
        denominator: Strictly positive integer

    Returns:
        The rational numerator/denominator (equality is by value)

    Raises:
        ValueError: If the denominator is not positive

    Examples:
        >>> rational(10000, 48) == rational(625, 3)
        True
    """
    if denominator <= 0:
        raise ValueError(f"Denominator must be positive, got {denominator}")
    return Fraction(numerator, denominator)


def floor_rat(q: Rational) -> int:
    """
    Greatest integer <= q.

    Examples:
        >>> floor_rat(rational(7, 2))
        3
        >>> floor_rat(rational(-7, 2))
        -4
    """
    return q.numerator // q.denominator


def ceil_rat(q: Rational) -> int:
    """
    Least integer >= q.

    Examples:
        >>> ceil_rat(rational(10, 3))
        4
        >>> ceil_rat(rational(-1, 2))
        0
    """
    return -(-q.numerator // q.denominator)


def is_half_integer(q: Rational) -> bool:
    """True when q lies exactly halfway between two integers."""
    return q.denominator == 2


def nearest_int(q: Rational) -> int:
    """
    Integer closest to q.

    Halves round away from zero. The closed form for T(p) never produces a
    half (p^2/48 and (p+3)^2/48 are never half-integers), so the tie rule
    only matters for direct callers.

    Examples:
        >>> nearest_int(rational(10000, 48))
        208
        >>> nearest_int(rational(7, 2))
        4
        >>> nearest_int(rational(-7, 2))
        -4
    """
    if is_half_integer(q):
        return ceil_rat(q) if q > 0 else floor_rat(q)
    return floor_rat(q + Fraction(1, 2))


@dataclass(frozen=True)
class ResidueDecomposition:
    """p = modulus * quotient + residue with 0 <= residue < modulus."""

    modulus: int
    quotient: int
    residue: int


def decompose(p: int, m: int) -> ResidueDecomposition:
    """
    Euclidean division of p by m.

    Args:
        p: Non-negative integer
        m: Positive modulus

    Returns:
        ResidueDecomposition with p = m*n + r

    Raises:
        ValueError: If p < 0 or m < 1

    Examples:
        >>> decompose(23, 12)
        ResidueDecomposition(modulus=12, quotient=1, residue=11)
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    if m < 1:
        raise ValueError(f"Modulus must be positive, got {m}")
    n, r = divmod(p, m)
    return ResidueDecomposition(modulus=m, quotient=n, residue=r)


def check_range(value: int, bits: int | None = None) -> int:
    """
    Return value unchanged if it fits a signed integer of the given width.

    Python integers never wrap, so this emulates the fixed-width contract:
    anything outside [-2**(bits-1), 2**(bits-1)) is reported instead of silently
    carried along.

    Args:
        value: Integer to check
        bits: Signed width (default: settings.int_bits)

    Raises:
        OverflowRangeError: If the value does not fit
    """
    width = bits if bits is not None else settings.int_bits
    bound = 1 << (width - 1)
    if not -bound <= value < bound:
        raise OverflowRangeError(value, width)
    return value
