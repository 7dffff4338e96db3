"""
Cross-method verification harness.

Every selected counting method is evaluated for p in 1..p_max and compared
with a brute-force tally of all triangles. The range can be split over
worker processes; the reported mismatch is always the one with the
smallest p, whatever order the workers finish in.

Side checks run after the sweep:
- sequence prefix T(0..24) against the published listing
- the generating-function product up to x^p_max
- closed-form maximum area against the brute-force argmax
- the fixed-base range lemma
- the odd-shift identity T(p) = T(p+3)
"""

import logging
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from alcuin.config.settings import settings
from alcuin.counting.methods import (
    CountMethod,
    bruteforce_table,
    first_odd_shift_failure,
    method_function,
)
from alcuin.geometry.heron import first_argmax_failure, range_lemma_sweep
from alcuin.series.coefficients import alcuin_coefficients, product_check

logger = logging.getLogger(__name__)

# Smallest share of perimeters a default-sized pool hands each worker.
_PERIMETERS_PER_WORKER = 1_000

SEQUENCE_PREFIX: tuple[int, ...] = (
    0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7, 5, 8, 7, 10, 8, 12, 10, 14, 12,
)


@dataclass(frozen=True)
class Mismatch:
    """First disagreement found by the harness."""

    p: int | None
    method: str
    expected: int | str
    actual: int | str


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one side check."""

    name: str
    passed: bool
    limit: int
    detail: str = ""


@dataclass
class VerifyReport:
    """
    Result of a verification sweep.

    first_mismatch is None exactly when every method agreed with the oracle
    and every side check passed.
    """

    p_min: int
    p_max: int
    methods: tuple[CountMethod, ...]
    first_mismatch: Mismatch | None = None
    elapsed_ms: dict[str, float] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)
    workers: int = 1

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def _check_chunk(
    perimeters: Sequence[int], method_names: Sequence[str]
) -> tuple[list[tuple[int, str, int, int]], dict[str, float]]:
    """
    Evaluate methods on a set of perimeters against the brute-force tally.

    Runs inside a worker process, so it takes and returns plain data.
    """
    mismatches: list[tuple[int, str, int, int]] = []
    elapsed: dict[str, float] = {}
    if not perimeters:
        return mismatches, elapsed

    top = max(perimeters)
    oracle = bruteforce_table(top)
    for name in method_names:
        method = CountMethod(name)
        start = time.perf_counter()
        if method is CountMethod.SERIES:
            table = alcuin_coefficients(top)
            values = [table[p] for p in perimeters]
        else:
            fn = method_function(method)
            values = [fn(p) for p in perimeters]
        elapsed[name] = (time.perf_counter() - start) * 1000.0
        for p, value in zip(perimeters, values, strict=True):
            if value != oracle[p]:
                mismatches.append((p, name, oracle[p], value))
                break
    return mismatches, elapsed


def _partition(p_max: int, workers: int) -> list[list[int]]:
    # Interleaved so every worker gets a share of the expensive large p.
    return [list(range(1 + i, p_max + 1, workers)) for i in range(workers)]


def _worker_count(p_max: int, workers: int | None) -> int:
    """Explicit counts are capped at p_max; the default also by _PERIMETERS_PER_WORKER."""
    if workers is None:
        workers = min(settings.verify_workers, max(1, p_max // _PERIMETERS_PER_WORKER))
    return max(1, min(workers, p_max))


SideCheck = tuple[CheckResult, Mismatch | None]


def _check_prefix(limit: int) -> SideCheck:
    got = bruteforce_table(limit)
    want = list(SEQUENCE_PREFIX[: limit + 1])
    if got == want:
        return CheckResult("sequence prefix", True, limit), None
    bad = next(p for p, (g, w) in enumerate(zip(got, want, strict=True)) if g != w)
    return (
        CheckResult("sequence prefix", False, limit, f"T({bad}) = {got[bad]}"),
        Mismatch(bad, "sequence prefix", want[bad], got[bad]),
    )


def _check_product(limit: int) -> SideCheck:
    if product_check(limit):
        return CheckResult("product check", True, limit), None
    return (
        CheckResult("product check", False, limit),
        Mismatch(None, "product check", "equal coefficients", "mismatch"),
    )


def _check_argmax(limit: int) -> SideCheck:
    bad_p = first_argmax_failure(limit)
    if bad_p is None:
        return CheckResult("max-area argmax", True, limit), None
    return (
        CheckResult("max-area argmax", False, limit),
        Mismatch(bad_p, "max-area argmax", "closed-form triple", "different argmax"),
    )


def _check_range_lemma(limit: int) -> SideCheck:
    counterexample = range_lemma_sweep(limit)
    if counterexample is None:
        return CheckResult("range lemma", True, limit), None
    first, second = counterexample
    return (
        CheckResult("range lemma", False, limit, f"{first} vs {second}"),
        Mismatch(sum(first), "range lemma", "larger area", f"{second} not larger than {first}"),
    )


def _check_odd_shift(limit: int) -> SideCheck:
    bad_p = first_odd_shift_failure(limit)
    if bad_p is None:
        return CheckResult("odd-shift identity", True, limit), None
    return (
        CheckResult("odd-shift identity", False, limit),
        Mismatch(bad_p, "odd-shift identity", "T(p+3)", "T(p)"),
    )


def _side_checks(p_max: int) -> list[tuple[Callable[[int], SideCheck], int]]:
    """Side checks in report order, each with its perimeter limit."""
    return [
        (_check_prefix, min(p_max, len(SEQUENCE_PREFIX) - 1)),
        (_check_product, p_max),
        (_check_argmax, min(p_max, settings.geometry_sweep_limit)),
        (_check_range_lemma, min(p_max, settings.range_lemma_limit)),
        (_check_odd_shift, min(p_max, settings.odd_shift_limit)),
    ]


def run_verification(
    p_max: int,
    methods: Sequence[CountMethod] | None = None,
    workers: int | None = None,
) -> VerifyReport:
    """
    Compare counting methods for p in 1..p_max and run the side checks.

    With more than one worker, the perimeter chunks and the side checks are
    all submitted to the same process pool.

    Args:
        p_max: Largest perimeter, >= 1
        methods: Methods to compare (default: all five)
        workers: Worker processes (default: settings.verify_workers, with at
            least _PERIMETERS_PER_WORKER perimeters per worker)

    Returns:
        VerifyReport with the smallest-p mismatch, per-method timings and checks
    """
    if p_max < 1:
        raise ValueError(f"p_max must be positive, got {p_max}")
    selected = tuple(methods) if methods else tuple(CountMethod)
    n_workers = _worker_count(p_max, workers)
    names = [m.value for m in selected]
    report = VerifyReport(p_min=1, p_max=p_max, methods=selected, workers=n_workers)
    logger.info(f"Verifying {', '.join(names)} for p in 1..{p_max} on {n_workers} worker(s)")

    chunks = _partition(p_max, n_workers)
    side_checks = _side_checks(p_max)
    if n_workers == 1:
        outcomes = [_check_chunk(chunks[0], names)]
        checks = [check(limit) for check, limit in side_checks]
    else:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            chunk_futures = [pool.submit(_check_chunk, chunk, names) for chunk in chunks]
            check_futures = [pool.submit(check, limit) for check, limit in side_checks]
            outcomes = [future.result() for future in chunk_futures]
            checks = [future.result() for future in check_futures]

    mismatches: list[tuple[int, str, int, int]] = []
    for chunk_mismatches, chunk_elapsed in outcomes:
        mismatches.extend(chunk_mismatches)
        for name, ms in chunk_elapsed.items():
            report.elapsed_ms[name] = report.elapsed_ms.get(name, 0.0) + ms
    report.elapsed_ms = {name: report.elapsed_ms.get(name, 0.0) for name in names}

    if mismatches:
        # Ties on p are broken by the method order given on the command line.
        p, name, expected, actual = min(mismatches, key=lambda m: (m[0], names.index(m[1])))
        report.first_mismatch = Mismatch(p, name, expected, actual)
        logger.warning(f"Method {name} disagrees at p={p}: expected {expected}, got {actual}")

    for check, mismatch in checks:
        report.checks.append(check)
        if mismatch is not None and report.first_mismatch is None:
            report.first_mismatch = mismatch
            logger.warning(f"Check '{check.name}' failed: {check.detail or mismatch}")

    return report
