"""
Micro-benchmarks for the counting methods.

Each method computes T(1..p_max) from scratch, once per repetition. The
result is a table of wall-clock totals; nothing here passes or fails.
"""

import logging
import time
from collections.abc import Sequence

import numpy as np
import pandas as pd

from alcuin.counting.methods import CountMethod, method_function

logger = logging.getLogger(__name__)

COMPLEXITY = {
    CountMethod.CLOSED_FORM: "O(1)",
    CountMethod.MOD12: "O(1)",
    CountMethod.BIJECTION_SUM: "O(p)",
    CountMethod.SERIES: "O(p)",
    CountMethod.BRUTE_FORCE: "O(p^2)",
}


def time_method(method: CountMethod, p_max: int, reps: int) -> tuple[np.ndarray, int]:
    """
    Time T(1..p_max) for one method.

    Returns:
        (seconds per repetition, sum of T(p) over the range)
    """
    fn = method_function(method)
    timings = np.empty(reps, dtype=np.float64)
    checksum = 0
    for rep in range(reps):
        start = time.perf_counter()
        checksum = sum(fn(p) for p in range(1, p_max + 1))
        timings[rep] = time.perf_counter() - start
    return timings, checksum


def run_benchmark(
    p_max: int,
    reps: int = 1,
    methods: Sequence[CountMethod] | None = None,
    include_timing: bool = True,
) -> pd.DataFrame:
    """
    Benchmark counting methods over p in 1..p_max.

    Args:
        p_max: Largest perimeter, >= 1
        reps: Repetitions per method, >= 1
        methods: Methods to time (default: all five)
        include_timing: Drop the timing columns when False, leaving a
            deterministic table

    Returns:
        DataFrame with one row per method
    """
    if p_max < 1:
        raise ValueError(f"p_max must be positive, got {p_max}")
    if reps < 1:
        raise ValueError(f"reps must be positive, got {reps}")

    rows = []
    for method in methods or tuple(CountMethod):
        timings, checksum = time_method(method, p_max, reps)
        logger.info(f"{method.value}: {timings.sum():.3f}s over {reps} rep(s)")
        rows.append(
            {
                "method": method.value,
                "complexity": COMPLEXITY[method],
                "reps": reps,
                "checksum": checksum,
                "total_ms": float(timings.sum() * 1000.0),
                "mean_ms": float(timings.mean() * 1000.0),
                "best_ms": float(timings.min() * 1000.0),
            }
        )

    frame = pd.DataFrame(rows)
    if not include_timing:
        frame = frame.drop(columns=["total_ms", "mean_ms", "best_ms"])
    return frame
