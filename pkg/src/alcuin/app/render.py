"""
Rendering of command results as plain text, CSV or JSON.

CSV is comma separated with LF line endings and a header row; every field
is numeric so nothing is quoted. JSON is compact. All renderers return the
complete text to print, newline-terminated unless it is empty.
"""

import json
from collections.abc import Sequence
from enum import Enum
from typing import Any

import pandas as pd

from alcuin.core.triple import TriangleTriple
from alcuin.eval.verify import VerifyReport
from alcuin.geometry.heron import MaxAreaResult


class OutputFormat(str, Enum):
    """Output format selector; plain text unless asked otherwise."""

    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


def _json(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _csv(frame: pd.DataFrame) -> str:
    return str(frame.to_csv(index=False, lineterminator="\n"))


def _records(frame: pd.DataFrame) -> str:
    return str(frame.to_json(orient="records")) + "\n"


def render_count(p: int, method: str, value: int, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _json({"p": p, "method": method, "count": value})
    if fmt is OutputFormat.CSV:
        return _csv(pd.DataFrame([{"p": p, "method": method, "count": value}]))
    return f"{value}\n"


def render_triples(triples: Sequence[TriangleTriple], fmt: OutputFormat) -> str:
    rows = [t.as_tuple() for t in triples]
    if fmt is OutputFormat.JSON:
        return _json([list(row) for row in rows])
    if fmt is OutputFormat.CSV:
        return _csv(pd.DataFrame(rows, columns=["a", "b", "c"]))
    return "".join(f"{a} {b} {c}\n" for a, b, c in rows)


def render_max_area(result: MaxAreaResult, fmt: OutputFormat, places: int = 6) -> str:
    approx = result.area_approx(places)
    a, b, c = result.triple.as_tuple()
    if fmt is OutputFormat.JSON:
        return _json(
            {
                "p": result.p,
                "triple": [a, b, c],
                "v": result.v,
                "area_sq_432": result.area_sq_432,
                "area_approx": float(approx),
            }
        )
    if fmt is OutputFormat.CSV:
        return (
            "p,a,b,c,v,area_sq_432,area_approx\n"
            f"{result.p},{a},{b},{c},{result.v},{result.area_sq_432},{approx}\n"
        )
    return (
        f"p: {result.p}\n"
        f"triple: {a} {b} {c}\n"
        f"v: {result.v}\n"
        f"area_sq_432: {result.area_sq_432}\n"
        f"area: {approx}\n"
    )


def render_table(rows: Sequence[tuple[int, int]], fmt: OutputFormat) -> str:
    """(p, T(p)) rows; plain text is the CSV body without the header."""
    frame = pd.DataFrame(list(rows), columns=["p", "count"])
    if fmt is OutputFormat.JSON:
        return _records(frame)
    if fmt is OutputFormat.CSV:
        return _csv(frame)
    return "".join(f"{p},{value}\n" for p, value in rows)


def render_profile(rows: Sequence[tuple[int, int]], fmt: OutputFormat) -> str:
    frame = pd.DataFrame(list(rows), columns=["c", "count"])
    if fmt is OutputFormat.JSON:
        return _records(frame)
    if fmt is OutputFormat.CSV:
        return _csv(frame)
    return "".join(f"c={c}: {value}\n" for c, value in rows)


def render_verify(report: VerifyReport, fmt: OutputFormat, timing: bool = True) -> str:
    mismatch = report.first_mismatch
    if fmt is OutputFormat.JSON:
        payload: dict[str, Any] = {
            "p_min": report.p_min,
            "p_max": report.p_max,
            "methods": [m.value for m in report.methods],
            "ok": report.ok,
            "first_mismatch": None
            if mismatch is None
            else {
                "p": mismatch.p,
                "method": mismatch.method,
                "expected": mismatch.expected,
                "actual": mismatch.actual,
            },
            "checks": [
                {"name": c.name, "passed": c.passed, "limit": c.limit, "detail": c.detail}
                for c in report.checks
            ],
        }
        if timing:
            payload["elapsed_ms"] = {k: round(v, 3) for k, v in report.elapsed_ms.items()}
        return _json(payload)

    lines = [
        f"verify p = {report.p_min}..{report.p_max}",
        f"methods: {', '.join(m.value for m in report.methods)}",
    ]
    if timing:
        width = max(len(name) for name in report.elapsed_ms) if report.elapsed_ms else 0
        lines.extend(
            f"  {name:<{width}}  {ms:10.2f} ms" for name, ms in report.elapsed_ms.items()
        )
    for check in report.checks:
        status = "OK" if check.passed else "FAILED"
        suffix = f": {check.detail}" if check.detail else ""
        lines.append(f"{check.name} {status} (p <= {check.limit}){suffix}")
    if mismatch is None:
        lines.append("all methods agree")
    else:
        where = "" if mismatch.p is None else f" at p={mismatch.p}"
        lines.append(
            f"MISMATCH{where}: {mismatch.method} expected {mismatch.expected}, got {mismatch.actual}"
        )
    return "\n".join(lines) + "\n"


def render_bench(frame: pd.DataFrame, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _records(frame)
    if fmt is OutputFormat.CSV:
        return _csv(frame)
    return str(frame.to_string(index=False, float_format=lambda v: f"{v:.3f}")) + "\n"
