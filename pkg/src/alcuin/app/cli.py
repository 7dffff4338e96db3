"""
Alcuin CLI.

Commands:
- count: T(p) by any of the five methods
- enumerate: list the triangles of a perimeter
- max-area: the maximum-area triangle with its exact 432E^2
- table: (p, T(p)) rows for plotting the sequence
- profile: triangles per largest side
- verify: cross-check every method against the brute-force oracle
- bench: time the methods against each other

Exit status is 0 on success, 1 on a domain or verification failure and 2
on a usage error.
"""

from pathlib import Path
from typing import NoReturn

import click

from alcuin import __version__
from alcuin.app.render import (
    OutputFormat,
    render_bench,
    render_count,
    render_max_area,
    render_profile,
    render_table,
    render_triples,
    render_verify,
)
from alcuin.config.settings import settings
from alcuin.counting.enumeration import enumerate_triples, largest_side_profile
from alcuin.counting.methods import CountMethod, count
from alcuin.errors import NoTriangle, OverflowRangeError
from alcuin.eval.bench import run_benchmark
from alcuin.eval.verify import run_verification
from alcuin.geometry.heron import max_area_triple
from alcuin.logging_config import configure_logging, logger


class MethodType(click.ParamType):
    """Counting method name, case-insensitive."""

    name = "method"

    def convert(self, value, param, ctx):  # type: ignore[no-untyped-def]
        if isinstance(value, CountMethod):
            return value
        try:
            return CountMethod.parse(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


METHOD = MethodType()

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat], case_sensitive=False),
    default=OutputFormat.PLAIN.value,
    show_default=True,
    help="Output format",
)


def _fail(message: str) -> NoReturn:
    click.echo(f"❌ Error: {message}", err=True)
    raise SystemExit(1)


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level (default: settings.log_level)",
)
def main(log_level: str | None) -> None:
    """Alcuin: counting and optimising integer triangles of a given perimeter."""
    configure_logging(log_level)


@main.command("count")
@click.argument("p", type=click.IntRange(min=1))
@click.option(
    "--method",
    type=METHOD,
    default=CountMethod.CLOSED_FORM.value,
    show_default=True,
    help="closed-form, mod12, bijection-sum, series or brute-force",
)
@format_option
def count_cmd(p: int, method: CountMethod, fmt: str) -> None:
    """Print T(p), the number of integer triangles with perimeter P."""
    try:
        value = count(p, method)
    except OverflowRangeError as exc:
        _fail(str(exc))
    click.echo(render_count(p, method.value, value, OutputFormat(fmt.lower())), nl=False)


@main.command("enumerate")
@click.argument("p", type=click.IntRange(min=1))
@format_option
def enumerate_cmd(p: int, fmt: str) -> None:
    """List every triangle with perimeter P, lexicographically."""
    triples = enumerate_triples(p)
    logger.debug(f"{len(triples)} triangles with perimeter {p}")
    click.echo(render_triples(triples, OutputFormat(fmt.lower())), nl=False)


@main.command("max-area")
@click.argument("p", type=click.IntRange(min=1))
@click.option(
    "--places",
    type=click.IntRange(min=0, max=50),
    default=None,
    help="Fractional digits for E (default: settings.area_decimal_places)",
)
@format_option
def max_area_cmd(p: int, places: int | None, fmt: str) -> None:
    """Show the maximum-area triangle of perimeter P and its exact area."""
    try:
        result = max_area_triple(p)
    except (NoTriangle, OverflowRangeError) as exc:
        _fail(str(exc))
    digits = settings.area_decimal_places if places is None else places
    click.echo(render_max_area(result, OutputFormat(fmt.lower()), digits), nl=False)


@main.command("table")
@click.argument("p_min", type=click.IntRange(min=0))
@click.argument("p_max", type=click.IntRange(min=0))
@click.option(
    "--method",
    type=METHOD,
    default=CountMethod.CLOSED_FORM.value,
    show_default=True,
    help="Counting method for each row",
)
@click.option(
    "--output",
    type=click.Path(path_type=Path),
    default=None,
    help="Write to this file instead of standard output",
)
@format_option
def table_cmd(
    p_min: int, p_max: int, method: CountMethod, output: Path | None, fmt: str
) -> None:
    """Emit (p, T(p)) rows for P_MIN <= p <= P_MAX."""
    if p_min > p_max:
        raise click.UsageError(f"P_MIN ({p_min}) must not exceed P_MAX ({p_max})")
    try:
        rows = [(p, count(p, method) if p > 0 else 0) for p in range(p_min, p_max + 1)]
    except OverflowRangeError as exc:
        _fail(str(exc))
    text = render_table(rows, OutputFormat(fmt.lower()))

    if output is None:
        click.echo(text, nl=False)
        return
    try:
        output.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        _fail(f"cannot write {output}: {exc.strerror or exc}")
    logger.info(f"Wrote {len(rows)} rows to {output}")


@main.command("profile")
@click.argument("p", type=click.IntRange(min=1))
@format_option
def profile_cmd(p: int, fmt: str) -> None:
    """Count the triangles of perimeter P by largest side."""
    click.echo(render_profile(largest_side_profile(p), OutputFormat(fmt.lower())), nl=False)


@main.command("verify")
@click.argument("p_max", type=click.IntRange(min=1))
@click.option(
    "--method",
    "methods",
    type=METHOD,
    multiple=True,
    help="Method to compare (repeatable; default: all five)",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Worker processes (default: settings.verify_workers)",
)
@click.option("--no-timing", is_flag=True, help="Omit timings for byte-identical output")
@format_option
def verify_cmd(
    p_max: int, methods: tuple[CountMethod, ...], workers: int | None, no_timing: bool, fmt: str
) -> None:
    """Cross-check all methods for p in 1..P_MAX against brute force."""
    try:
        report = run_verification(p_max, methods or None, workers)
    except OverflowRangeError as exc:
        _fail(str(exc))
    click.echo(render_verify(report, OutputFormat(fmt.lower()), timing=not no_timing), nl=False)
    if not report.ok:
        raise SystemExit(1)


@main.command("bench")
@click.argument("p_max", type=click.IntRange(min=1))
@click.option(
    "--reps",
    type=click.IntRange(min=1),
    default=None,
    help="Repetitions per method (default: settings.bench_reps)",
)
@click.option(
    "--method",
    "methods",
    type=METHOD,
    multiple=True,
    help="Method to time (repeatable; default: all five)",
)
@click.option("--no-timing", is_flag=True, help="Omit timing columns")
@format_option
def bench_cmd(
    p_max: int,
    reps: int | None,
    methods: tuple[CountMethod, ...],
    no_timing: bool,
    fmt: str,
) -> None:
    """Time every method computing T(1..P_MAX)."""
    frame = run_benchmark(
        p_max,
        reps=settings.bench_reps if reps is None else reps,
        methods=methods or None,
        include_timing=not no_timing,
    )
    click.echo(render_bench(frame, OutputFormat(fmt.lower())), nl=False)


if __name__ == "__main__":
    main()
