"""
Canonical integer triangle triples.

Side lengths are stored ascending (a <= b <= c). Descending input, as in
the (alpha >= beta >= gamma) convention, is normalised by make_triple.
"""

from collections.abc import Iterator
from dataclasses import dataclass

from alcuin.errors import NotATriangle


@dataclass(frozen=True, order=True)
class TriangleTriple:
    """
    Integer triangle with sides a <= b <= c and a + b > c.

    Ordering is lexicographic on (a, b, c). Construct through make_triple
    unless the sides are already sorted.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not self.a <= self.b <= self.c:
            raise ValueError(
                f"Sides must be ascending, got ({self.a}, {self.b}, {self.c}); use make_triple"
            )
        if self.a < 1 or self.a + self.b <= self.c:
            raise NotATriangle(self.a, self.b, self.c)

    def perimeter(self) -> int:
        return self.a + self.b + self.c

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self) -> Iterator[int]:
        return iter(self.as_tuple())

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def make_triple(a: int, b: int, c: int) -> TriangleTriple:
    """
    Sort three side lengths and validate them as a triangle.

    Args:
        a, b, c: Side lengths in any order

    Returns:
        The canonical TriangleTriple

    Raises:
        NotATriangle: If any side is <= 0 or the sorted sides are degenerate

    Examples:
        >>> make_triple(4, 1, 4)
        TriangleTriple(a=1, b=4, c=4)
        >>> make_triple(1, 1, 2)
        Traceback (most recent call last):
        ...
        alcuin.errors.NotATriangle: (1, 1, 2) is not a triangle
    """
    x, y, z = sorted((a, b, c))
    if x < 1 or x + y <= z:
        raise NotATriangle(x, y, z)
    return TriangleTriple(x, y, z)
