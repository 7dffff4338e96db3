"""
Exact Heron arithmetic and the maximum-area triangle of a perimeter.

Areas are handled as the integers 16E^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c)
and 432E^2 = 27 * 16E^2. Floating point never enters a comparison; E
itself is only rendered as a decimal for display.

Implements:
- heron_16esq and range_of for a single triple
- max_area_triple: (n,n,n), (n,n,n+1) or (n,n+1,n+1) by p mod 3, with
  432E^2 = (p+2v)^2 (p-4v) p for the representative v in {-1, 0, 1}
- brute-force argmax and range minimiser over all triples of a perimeter
- the fixed-base range lemma and its sweep
"""

import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import NewType

import numpy as np

from alcuin.core.rational import check_range, decompose
from alcuin.core.triple import TriangleTriple, make_triple
from alcuin.counting.enumeration import enumerate_triples
from alcuin.errors import AlcuinError, HypothesisViolated, NoTriangle, NotATriangle

logger = logging.getLogger(__name__)

AreaSquared16 = NewType("AreaSquared16", int)

# Largest perimeter scanned with int64 arrays; beyond it, exact Python ints.
_NUMPY_PERIMETER_LIMIT = 5_000


def heron_16esq(t: TriangleTriple) -> AreaSquared16:
    """
    Sixteen times the squared area, exactly.

    Examples:
        >>> heron_16esq(make_triple(3, 4, 5))
        576
        >>> heron_16esq(make_triple(2, 2, 3))
        63
    """
    a, b, c = t.a, t.b, t.c
    value = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    return AreaSquared16(check_range(value))


def range_of(t: TriangleTriple) -> int:
    """Largest side minus smallest side."""
    return t.c - t.a


def residue_representative(p: int) -> int:
    """The v in {-1, 0, 1} with p = v (mod 3)."""
    return {0: 0, 1: 1, 2: -1}[p % 3]


def max_area_432(p: int) -> int:
    """432E^2 of the best triangle of perimeter p: (p+2v)^2 (p-4v) p."""
    v = residue_representative(p)
    return check_range((p + 2 * v) ** 2 * (p - 4 * v) * p)


@dataclass(frozen=True)
class MaxAreaResult:
    """Area-maximising triangle of a perimeter with its exact 432E^2."""

    triple: TriangleTriple
    v: int
    area_sq_432: int

    @property
    def p(self) -> int:
        return self.triple.perimeter()

    @property
    def area_squared(self) -> Fraction:
        """E^2 as an exact fraction."""
        return Fraction(self.area_sq_432, 432)

    def area_approx(self, places: int = 6) -> Decimal:
        return area_decimal(self.area_sq_432, places)


def max_area_triple(p: int) -> MaxAreaResult:
    """
    Closed-form maximum-area triangle of perimeter p.

    The triple with the smallest range wins: (n,n,n) for p = 3n,
    (n,n,n+1) for p = 3n+1 and (n,n+1,n+1) for p = 3n+2.

    Raises:
        ValueError: If p < 1
        NoTriangle: For p in {1, 2, 4}

    Examples:
        >>> max_area_triple(7)
        MaxAreaResult(triple=TriangleTriple(a=2, b=2, c=3), v=1, area_sq_432=1701)
    """
    if p < 1:
        raise ValueError(f"Perimeter must be a positive integer, got {p}")
    parts = decompose(p, 3)
    n = parts.quotient
    sides = {0: (n, n, n), 1: (n, n, n + 1), 2: (n, n + 1, n + 1)}[parts.residue]
    try:
        triple = make_triple(*sides)
    except NotATriangle as exc:
        if n == 0:
            raise NoTriangle(p, f"candidate {exc.sides} has a zero side") from exc
        raise NoTriangle(
            p, f"candidate {exc.sides} is degenerate; formula gives 432E^2 = {max_area_432(p)}"
        ) from exc
    return MaxAreaResult(
        triple=triple, v=residue_representative(p), area_sq_432=max_area_432(p)
    )


def area_decimal(area_sq_432: int, places: int = 6) -> Decimal:
    """
    E = sqrt(area_sq_432 / 432) rounded half-even to the given places.

    Examples:
        >>> area_decimal(81)
        Decimal('0.433013')
        >>> area_decimal(3456)
        Decimal('2.828427')
    """
    if area_sq_432 < 0:
        raise ValueError(f"432E^2 must be non-negative, got {area_sq_432}")
    with localcontext() as ctx:
        ctx.prec = len(str(area_sq_432)) + places + 20
        root = (Decimal(area_sq_432) / 432).sqrt()
        return root.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)


def _triangle_grid(p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Sides of every triangle of perimeter p as int64 arrays, lexicographic order.

    Row a holds b from max(a, floor(p/2) - a + 1), where a + b > c starts,
    up to floor((p - a)/2), where b <= c ends.
    """
    a_values = np.arange(1, p // 3 + 1, dtype=np.int64)
    b_low = np.maximum(a_values, p // 2 - a_values + 1)
    b_high = (p - a_values) // 2
    lengths = np.clip(b_high - b_low + 1, 0, None)
    a = np.repeat(a_values, lengths)
    # position of each entry inside its row
    starts = np.cumsum(lengths) - lengths
    offsets = np.arange(a.size, dtype=np.int64) - np.repeat(starts, lengths)
    b = np.repeat(b_low, lengths) + offsets
    c = p - a - b
    return a, b, c


def _scan(p: int, what: str, largest: bool) -> TriangleTriple:
    """
    Unique extreme triangle of perimeter p by area ("area") or range ("range").

    Uses a vectorised int64 grid for moderate p, exact Python integers beyond.
    """
    if p < 1:
        raise ValueError(f"Perimeter must be a positive integer, got {p}")
    if p <= _NUMPY_PERIMETER_LIMIT:
        a, b, c = _triangle_grid(p)
        if a.size == 0:
            raise NoTriangle(p)
        if what == "area":
            values = p * (b + c - a) * (a + c - b) * (a + b - c)
        else:
            values = c - a
        triples = None
    else:
        triples = enumerate_triples(p)
        if not triples:
            raise NoTriangle(p)
        key = heron_16esq if what == "area" else range_of
        values = np.array([key(t) for t in triples], dtype=object)

    index = int(np.argmax(values) if largest else np.argmin(values))
    ties = int(np.count_nonzero(values == values[index]))
    if ties != 1:
        raise AlcuinError(f"extreme {what} over perimeter {p} is attained by {ties} triangles")
    if triples is not None:
        return triples[index]
    return TriangleTriple(int(a[index]), int(b[index]), int(c[index]))


def area_argmax_bruteforce(p: int) -> TriangleTriple:
    """
    Scan every triangle of perimeter p and return the one of largest area.

    Raises:
        NoTriangle: If T(p) = 0
        AlcuinError: If the maximum is not unique

    Examples:
        >>> area_argmax_bruteforce(10)
        TriangleTriple(a=3, b=3, c=4)
    """
    return _scan(p, "area", largest=True)


def range_minimizer(p: int) -> TriangleTriple:
    """
    The triangle of perimeter p whose range c - a is smallest.

    Raises:
        NoTriangle: If T(p) = 0
        AlcuinError: If the minimum is not unique
    """
    return _scan(p, "range", largest=False)


def range_lemma_holds(t1: TriangleTriple, t2: TriangleTriple) -> bool:
    """
    Check that the larger area goes with the smaller range.

    Both triangles must share the perimeter and the middle side, which
    fixes the base and leaves the sum of the other two sides constant.

    Raises:
        HypothesisViolated: If perimeters or middle sides differ
    """
    if t1.perimeter() != t2.perimeter():
        raise HypothesisViolated(
            f"perimeters differ: {t1.perimeter()} vs {t2.perimeter()}"
        )
    if t1.b != t2.b:
        raise HypothesisViolated(f"middle sides differ: {t1.b} vs {t2.b}")
    larger_area = heron_16esq(t1) < heron_16esq(t2)
    smaller_range = range_of(t1) > range_of(t2)
    return larger_area == smaller_range


def fixed_base_pairs(p: int, m: int) -> list[tuple[int, int, int]]:
    """
    Triangles (x, m, y) with base m, x <= y and x + y = p - m.

    Ordered by x ascending, so |x - y| strictly decreases along the list.
    """
    rest = p - m
    return [(x, m, rest - x) for x in range(1, rest // 2 + 1) if rest - 2 * x < m < rest]


def range_lemma_sweep(p_max: int) -> tuple[tuple[int, int, int], tuple[int, int, int]] | None:
    """
    Check the fixed-base range lemma for every perimeter up to p_max.

    For each p and base m, a strictly smaller |x - y| must give a strictly
    larger 16E^2.

    Returns:
        The first offending pair ((x, m, y), (x', m, y')), or None
    """
    for p in range(3, p_max + 1):
        for m in range(1, p):
            pairs = fixed_base_pairs(p, m)
            areas = [p * (m + y - x) * (m + x - y) * (x + y - m) for x, _, y in pairs]
            for i in range(len(pairs) - 1):
                if not areas[i] < areas[i + 1]:
                    logger.warning(f"Range lemma fails at p={p}, base {m}")
                    return pairs[i], pairs[i + 1]
    return None


def first_argmax_failure(p_max: int) -> int | None:
    """
    Smallest p <= p_max where the closed-form maximum disagrees with the scan.

    For each p >= 3 checks that max_area_triple matches the brute-force
    argmax and the range minimiser, and that 27 * 16E^2 = (p+2v)^2 (p-4v) p.
    Perimeters without a triangle must be rejected by both sides.
    """
    for p in range(3, p_max + 1):
        try:
            result = max_area_triple(p)
        except NoTriangle:
            try:
                area_argmax_bruteforce(p)
            except NoTriangle:
                continue
            return p
        if area_argmax_bruteforce(p) != result.triple:
            return p
        if range_minimizer(p) != result.triple:
            return p
        if 27 * heron_16esq(result.triple) != result.area_sq_432:
            return p
    return None
