"""Exact integer building blocks."""

from alcuin.core.rational import (
    Rational,
    ResidueDecomposition,
    ceil_rat,
    check_range,
    decompose,
    floor_rat,
    nearest_int,
    rational,
)
from alcuin.core.triple import TriangleTriple, make_triple

__all__ = [
    "Rational",
    "ResidueDecomposition",
    "TriangleTriple",
    "ceil_rat",
    "check_range",
    "decompose",
    "floor_rat",
    "make_triple",
    "nearest_int",
    "rational",
]
