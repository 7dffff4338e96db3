"""
Truncated formal power series with exact integer coefficients.

Only what the product argument needs: fixed-degree series, the Cauchy
product, and the expansions of x / (1 - x^k).
"""

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from alcuin.core.rational import check_range

# np.convolve accumulates in int64; stay well clear of 2**63.
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of x^0 .. x^N; degrees above N are discarded."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("A truncated series needs at least the constant term")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], degree: int) -> "TruncatedSeries":
        """Pad with zeros or cut so the series has exactly degree + 1 terms."""
        if degree < 0:
            raise ValueError(f"Truncation degree must be non-negative, got {degree}")
        values = [int(c) for c in coeffs][: degree + 1]
        values.extend([0] * (degree + 1 - len(values)))
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_multiply(self, other)


def series_multiply(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product of two series truncated at their common degree.

    Args:
        s1: Left factor
        s2: Right factor, same truncation degree as s1

    Returns:
        The product, every coefficient exact

    Raises:
        ValueError: If the truncation degrees differ
        OverflowRangeError: If a coefficient leaves the checked range

    Examples:
        >>> one_plus_x = TruncatedSeries((1, 1, 0))
        >>> series_multiply(one_plus_x, one_plus_x).coefficients
        (1, 2, 1)
    """
    if s1.degree != s2.degree:
        raise ValueError(
            f"Truncation degrees differ: {s1.degree} vs {s2.degree}"
        )
    n = s1.degree
    left, right = s1.coefficients, s2.coefficients

    bound = max(map(abs, left)) * max(map(abs, right)) * (n + 1)
    if bound < _INT64_SAFE:
        product = np.convolve(
            np.asarray(left, dtype=np.int64), np.asarray(right, dtype=np.int64)
        )[: n + 1]
        coeffs = [int(v) for v in product]
    else:
        # Exact fallback on Python ints, skipping zero terms of the right factor
        coeffs = [0] * (n + 1)
        nonzero_right = [(j, y) for j, y in enumerate(right) if y]
        for i, x in enumerate(left):
            if not x:
                continue
            for j, y in nonzero_right:
                if i + j > n:
                    break
                coeffs[i + j] += x * y

    return TruncatedSeries(tuple(check_range(c) for c in coeffs))


def geometric_series(k: int, degree: int) -> TruncatedSeries:
    """
    Expansion of x / (1 - x^k) up to x^degree.

    Examples:
        >>> geometric_series(3, 10).coefficients
        (0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1)
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if degree < 0:
        raise ValueError(f"Truncation degree must be non-negative, got {degree}")
    return TruncatedSeries(
        tuple(1 if d >= 1 and (d - 1) % k == 0 else 0 for d in range(degree + 1))
    )
