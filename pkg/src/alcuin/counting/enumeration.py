"""
Listing the triangles of a perimeter.

enumerate_triples walks (a, b) directly; enumerate_bijection walks the
(c, a) pairs with p/3 <= c < p/2 and p - 2c <= a <= floor((p - c)/2),
each of which determines b = p - a - c.
"""

from alcuin.core.rational import ceil_rat, floor_rat, rational
from alcuin.core.triple import TriangleTriple, make_triple


def _largest_side_bounds(p: int) -> tuple[int, int]:
    return ceil_rat(rational(p, 3)), floor_rat(rational(p - 1, 2))


def enumerate_triples(p: int) -> list[TriangleTriple]:
    """
    All triangles with perimeter p, lexicographic on (a, b, c).

    Examples:
        >>> [t.as_tuple() for t in enumerate_triples(9)]
        [(1, 4, 4), (2, 3, 4), (3, 3, 3)]
    """
    if p < 1:
        raise ValueError(f"Perimeter must be a positive integer, got {p}")
    triples = []
    for a in range(1, p // 3 + 1):
        for b in range(a, (p - a) // 2 + 1):
            c = p - a - b
            if a + b > c:
                triples.append(TriangleTriple(a, b, c))
    return triples


def enumerate_bijection(p: int) -> list[TriangleTriple]:
    """
    All triangles with perimeter p generated from their (c, a) pairs.

    Output is grouped by largest side c ascending, then a ascending; as a
    set it equals enumerate_triples(p).

    Examples:
        >>> sorted(t.as_tuple() for t in enumerate_bijection(10))
        [(2, 4, 4), (3, 3, 4)]
    """
    if p < 1:
        raise ValueError(f"Perimeter must be a positive integer, got {p}")
    lower, upper = _largest_side_bounds(p)
    triples = []
    for c in range(lower, upper + 1):
        for a in range(p - 2 * c, floor_rat(rational(p - c, 2)) + 1):
            triples.append(make_triple(a, p - a - c, c))
    return triples


def largest_side_profile(p: int) -> list[tuple[int, int]]:
    """
    Number of triangles for each admissible largest side c.

    Returns:
        (c, count) pairs for c from ceil(p/3) to floor((p-1)/2); the counts
        sum to T(p)
    """
    if p < 1:
        raise ValueError(f"Perimeter must be a positive integer, got {p}")
    lower, upper = _largest_side_bounds(p)
    return [
        (c, floor_rat(rational(p - c, 2)) - (p - 2 * c) + 1) for c in range(lower, upper + 1)
    ]
