"""Counting and enumerating integer triangles of a given perimeter."""

from alcuin.counting.enumeration import (
    enumerate_bijection,
    enumerate_triples,
    largest_side_profile,
)
from alcuin.counting.methods import (
    MOD12_TABLE,
    CountMethod,
    Mod12Row,
    bruteforce_table,
    count,
    count_bruteforce,
    count_closed_form,
    count_mod12,
    count_series,
    count_sum,
    first_odd_shift_failure,
    method_function,
    mod12_row,
    residue_row_sum,
)

__all__ = [
    "MOD12_TABLE",
    "CountMethod",
    "Mod12Row",
    "bruteforce_table",
    "count",
    "count_bruteforce",
    "count_closed_form",
    "count_mod12",
    "count_series",
    "count_sum",
    "enumerate_bijection",
    "enumerate_triples",
    "first_odd_shift_failure",
    "largest_side_profile",
    "method_function",
    "mod12_row",
    "residue_row_sum",
]
