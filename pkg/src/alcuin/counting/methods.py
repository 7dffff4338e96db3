"""
Five ways to compute T(p), the number of integer triangles with perimeter p.

- closed form: nearest integer of p^2/48 (p even) or (p+3)^2/48 (p odd)
- mod-12 table: T(12n + r) = 3n^2 + k1*n + k0, one (k1, k0) per residue
- bijection sum: sum over the largest side c of the admissible smallest sides a
- series: coefficient of x^p in x^3 / ((1-x^2)(1-x^3)(1-x^4))
- brute force: scan every (a, b) and test the triangle inequality
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

import numpy as np

from alcuin.core.rational import ceil_rat, decompose, floor_rat, nearest_int, rational
from alcuin.series.coefficients import alcuin_coefficients

logger = logging.getLogger(__name__)

# count_bruteforce loops on Python ints up to this perimeter.
_PYTHON_BRUTE_FORCE_LIMIT = 64


class CountMethod(str, Enum):
    """Counting algorithm selector."""

    CLOSED_FORM = "closed-form"
    MOD12 = "mod12"
    BIJECTION_SUM = "bijection-sum"
    SERIES = "series"
    BRUTE_FORCE = "brute-force"

    @classmethod
    def parse(cls, name: str) -> "CountMethod":
        """
        Parse a method name, ignoring case, hyphens and underscores.

        Examples:
            >>> CountMethod.parse("Mod12")
            <CountMethod.MOD12: 'mod12'>
            >>> CountMethod.parse("brute_force")
            <CountMethod.BRUTE_FORCE: 'brute-force'>
        """
        key = name.strip().lower().replace("_", "").replace("-", "")
        for method in cls:
            if method.value.replace("-", "") == key:
                return method
        choices = ", ".join(m.value for m in cls)
        raise ValueError(f"Unknown counting method {name!r}; expected one of {choices}")


@dataclass(frozen=True)
class Mod12Row:
    """T(12n + residue) = 3n^2 + k1*n + k0."""

    residue: int
    k1: int
    k0: int

    def evaluate(self, n: int) -> int:
        return 3 * n * n + self.k1 * n + self.k0


MOD12_TABLE: tuple[Mod12Row, ...] = (
    Mod12Row(0, 0, 0),
    Mod12Row(1, 2, 0),
    Mod12Row(2, 1, 0),
    Mod12Row(3, 3, 1),
    Mod12Row(4, 2, 0),
    Mod12Row(5, 4, 1),
    Mod12Row(6, 3, 1),
    Mod12Row(7, 5, 2),
    Mod12Row(8, 4, 1),
    Mod12Row(9, 6, 3),
    Mod12Row(10, 5, 2),
    Mod12Row(11, 7, 4),
)


def mod12_row(residue: int) -> Mod12Row:
    """Row of the mod-12 table for a residue in 0..11."""
    if not 0 <= residue < 12:
        raise ValueError(f"Residue must be in 0..11, got {residue}")
    return MOD12_TABLE[residue]


def _require_perimeter(p: int) -> None:
    if p < 1:
        raise ValueError(f"Perimeter must be a positive integer, got {p}")


def count_closed_form(p: int) -> int:
    """
    T(p) from the nearest-integer closed form.

    Examples:
        >>> count_closed_form(12)
        3
        >>> count_closed_form(100)
        208
    """
    _require_perimeter(p)
    if p % 2 == 0:
        return nearest_int(rational(p * p, 48))
    return nearest_int(rational((p + 3) ** 2, 48))


def count_mod12(p: int) -> int:
    """
    T(p) from the twelve residue polynomials.

    Examples:
        >>> count_mod12(23)
        14
        >>> count_mod12(4)
        0
    """
    _require_perimeter(p)
    parts = decompose(p, 12)
    return MOD12_TABLE[parts.residue].evaluate(parts.quotient)


def count_sum(p: int) -> int:
    """
    T(p) as the sum, over ceil(p/3) <= c <= floor((p-1)/2), of
    floor((p-c)/2) - (p-2c) + 1.

    The lower limit is the ceiling of p/3, since a <= b <= c forces
    c >= p/3. Starting at the floor instead only adds c = floor(p/3) when
    3 does not divide p, and that term is always zero.

    Examples:
        >>> count_sum(12)
        3
        >>> count_sum(1)
        0
    """
    _require_perimeter(p)
    lower = ceil_rat(rational(p, 3))
    upper = floor_rat(rational(p - 1, 2))
    return sum((p - c) // 2 - (p - 2 * c) + 1 for c in range(lower, upper + 1))


def count_bruteforce(p: int) -> int:
    """
    T(p) by direct search.

    For each smallest side a, every middle side b in [a, (p-a)/2] is tested
    with c = p - a - b. That range already gives b <= c, leaving a + b > c,
    which is 2b > p - 2a. Small perimeters loop on Python ints; larger ones
    test each row of b as a slice of one array.

    Examples:
        >>> count_bruteforce(9)
        3
        >>> count_bruteforce(2)
        0
    """
    _require_perimeter(p)
    if p <= _PYTHON_BRUTE_FORCE_LIMIT:
        return sum(
            1
            for a in range(1, p // 3 + 1)
            for b in range(a, (p - a) // 2 + 1)
            if b <= p - a - b and a + b > p - a - b
        )

    # twice_b[i] = 2b for b = i + 1
    twice_b = np.arange(2, p + 1, 2, dtype=np.int64)
    total = 0
    for a in range(1, p // 3 + 1):
        row = twice_b[a - 1 : (p - a) // 2]
        total += int(np.count_nonzero(row > p - 2 * a))
    return total


def count_series(p: int) -> int:
    """T(p) as the coefficient of x^p in the generating function."""
    _require_perimeter(p)
    return alcuin_coefficients(p)[p]


_DISPATCH: dict[CountMethod, Callable[[int], int]] = {
    CountMethod.CLOSED_FORM: count_closed_form,
    CountMethod.MOD12: count_mod12,
    CountMethod.BIJECTION_SUM: count_sum,
    CountMethod.SERIES: count_series,
    CountMethod.BRUTE_FORCE: count_bruteforce,
}


def method_function(method: CountMethod) -> Callable[[int], int]:
    """Return the single-p counting function for a method."""
    return _DISPATCH[method]


def count(p: int, method: CountMethod = CountMethod.CLOSED_FORM) -> int:
    """
    T(p) computed with the chosen method.

    Examples:
        >>> count(12, CountMethod.MOD12)
        3
    """
    return _DISPATCH[method](p)


def bruteforce_table(max_index: int) -> list[int]:
    """
    T(0..N) by tallying every triangle with perimeter <= N.

    A pair a <= b admits c in [b, a + b - 1], so it contributes one
    triangle to each perimeter in [a + 2b, 2a + 2b - 1]. Those runs are
    accumulated in a difference array.
    """
    if max_index < 0:
        raise ValueError(f"N must be non-negative, got {max_index}")
    diff = np.zeros(max_index + 2, dtype=np.int64)
    for a in range(1, max_index // 3 + 1):
        b = np.arange(a, (max_index - a) // 2 + 1, dtype=np.int64)
        lo = a + 2 * b
        hi = np.minimum(2 * a + 2 * b - 1, max_index)
        np.add.at(diff, lo, 1)
        np.add.at(diff, hi + 1, -1)
    table = np.cumsum(diff)[: max_index + 1]
    logger.debug(f"Tallied {int(table.sum())} triangles with perimeter <= {max_index}")
    return [int(v) for v in table]


def residue_row_sum(n: int) -> int:
    """
    Row total for p = 12n + 1 built from triangular numbers.

    The rows hold 3n, 3n-1, 3n-3, ... triangles: the sum 1 + 2 + ... + 3n
    with the n terms 1, 4, 7, ..., 3n-2 removed.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return 3 * n * (3 * n + 1) // 2 - n * (3 * n - 1) // 2


def first_odd_shift_failure(p_max: int) -> int | None:
    """
    Smallest odd p <= p_max with T(p) != T(p + 3), or None.

    The identity T(2n+1) = T(2n+4) says odd perimeters never gain a
    triangle when three is added.
    """
    if p_max < 1:
        raise ValueError(f"p_max must be positive, got {p_max}")
    table = alcuin_coefficients(p_max + 3)
    for p in range(1, p_max + 1, 2):
        if table[p] != table[p + 3]:
            return p
    return None
