"""
Coefficients of x^3 / ((1 - x^2)(1 - x^3)(1 - x^4)).

The coefficient of x^p counts the non-negative solutions of
2x + 3z + 4y = p - 3, which is T(p). Two routes are provided:
- representation counting by a coin-change style dynamic program
- the truncated product of x/(1-x^2), x/(1-x^3), x/(1-x^4)
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from alcuin.series.power import TruncatedSeries, geometric_series

logger = logging.getLogger(__name__)

PARTS = (2, 3, 4)


def representation_table(m: int) -> list[int]:
    """
    Number of (x, y, z) >= 0 with 2x + 3z + 4y = j, for every j in 0..m.

    Parts are processed outermost and amounts ascending, so each part size
    contributes one multiplicity and every ordered (x, y, z) is counted once.
    Returns an empty list when m < 0.
    """
    if m < 0:
        return []
    ways = [0] * (m + 1)
    ways[0] = 1
    for part in PARTS:
        for amount in range(part, m + 1):
            ways[amount] += ways[amount - part]
    return ways


def representation_count(m: int) -> int:
    """
    Number of ordered non-negative triples (x, y, z) with 2x + 3z + 4y = m.

    Args:
        m: Non-negative target

    Returns:
        The count; equals T(m + 3)

    Examples:
        >>> representation_count(0)
        1
        >>> representation_count(4)
        2
        >>> representation_count(1)
        0
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return representation_table(m)[m]


@dataclass(frozen=True)
class CoefficientTable:
    """Exact T(0..max_index)."""

    max_index: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.max_index + 1:
            raise ValueError(
                f"Expected {self.max_index + 1} coefficients, got {len(self.coefficients)}"
            )

    def __getitem__(self, p: int) -> int:
        return self.coefficients[p]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def as_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.coefficients)


def alcuin_coefficients(max_index: int) -> CoefficientTable:
    """
    T(0..N) read off the generating function.

    Args:
        max_index: N >= 0

    Returns:
        CoefficientTable with zeros below x^3 and representation counts above

    Examples:
        >>> list(alcuin_coefficients(7))
        [0, 0, 0, 1, 0, 1, 1, 2]
    """
    if max_index < 0:
        raise ValueError(f"N must be non-negative, got {max_index}")
    leading = [0] * min(3, max_index + 1)
    coeffs = leading + representation_table(max_index - 3)
    return CoefficientTable(max_index=max_index, coefficients=tuple(coeffs))


def product_check(max_index: int) -> bool:
    """
    Check the product argument up to x^N.

    Multiplies the expansions of x/(1-x^2), x/(1-x^3) and x/(1-x^4) and
    compares the result with alcuin_coefficients(N) term by term.

    Raises:
        OverflowRangeError: Propagated from series_multiply
    """
    if max_index < 0:
        raise ValueError(f"N must be non-negative, got {max_index}")
    product = (
        geometric_series(2, max_index)
        * geometric_series(3, max_index)
        * geometric_series(4, max_index)
    )
    expected = alcuin_coefficients(max_index).as_series()
    if product == expected:
        logger.debug(f"Product check passed up to x^{max_index}")
        return True
    p, got, want = next(
        (d, g, w)
        for d, (g, w) in enumerate(zip(product.coefficients, expected.coefficients, strict=True))
        if g != w
    )
    logger.warning(f"Product coefficient mismatch at x^{p}: {got} != {want}")
    return False
