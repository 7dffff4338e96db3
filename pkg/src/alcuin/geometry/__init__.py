"""Heron areas and the maximum-area integer triangle."""

from alcuin.geometry.heron import (
    AreaSquared16,
    MaxAreaResult,
    area_argmax_bruteforce,
    area_decimal,
    first_argmax_failure,
    fixed_base_pairs,
    heron_16esq,
    max_area_432,
    max_area_triple,
    range_lemma_holds,
    range_lemma_sweep,
    range_minimizer,
    range_of,
    residue_representative,
)

__all__ = [
    "AreaSquared16",
    "MaxAreaResult",
    "area_argmax_bruteforce",
    "area_decimal",
    "first_argmax_failure",
    "fixed_base_pairs",
    "heron_16esq",
    "max_area_432",
    "max_area_triple",
    "range_lemma_holds",
    "range_lemma_sweep",
    "range_minimizer",
    "range_of",
    "residue_representative",
]
