"""Render suite results as a fixed-width symbol table, CSV, or JSON.

The text table mirrors the published layout: one row per case grouped
by function, "·" for a pass, sorted failure letters otherwise, "×" for
arguments the provider does not implement, and a final
"Pass rate N/D" line whose denominator excludes wholly-unimplemented
functions.  Output is deterministic byte-for-byte.
"""

from __future__ import annotations

import csv
import io
import json

from .fpcore import encode_bits
from .suite import SuiteRun, UNSUPPORTED_SYMBOL

__all__ = ["render_table", "render_csv", "render_json", "summary"]

CSV_COLUMNS = (
    "case_id",
    "function",
    "input_re_hex",
    "input_im_hex",
    "actual_re_hex",
    "actual_im_hex",
    "failures",
)


def _display_name(case_id: str) -> str:
    fn, _, args = case_id.partition("/")
    return f"{fn}({args})"


def render_table(run: SuiteRun) -> str:
    lines = [
        f"Provider: {run.provider_name}",
        f"Precision: {run.precision.value}",
        f"Mode: {run.mode}",
    ]
    width = max((len(_display_name(r.case_id)) for r in run.results), default=10) + 2
    rule = "-" * (width + 4)
    lines.append(rule)
    previous_function = None
    for r in run.results:
        if previous_function is not None and r.function != previous_function:
            lines.append(rule)
        previous_function = r.function
        lines.append(f"{_display_name(r.case_id):<{width}}{r.symbol}")
    lines.append(rule)
    passed, denom = run.pass_rate
    lines.append(f"Pass rate {passed}/{denom}")
    return "\n".join(lines) + "\n"


def _rows(run: SuiteRun) -> list[dict[str, str]]:
    rows = []
    for r in run.results:
        unsupported = r.actual is None
        rows.append(
            {
                "case_id": r.case_id,
                "function": r.function,
                "input_re_hex": encode_bits(r.input.re, run.precision),
                "input_im_hex": encode_bits(r.input.im, run.precision),
                "actual_re_hex": "" if unsupported else encode_bits(r.actual.re, run.precision),
                "actual_im_hex": "" if unsupported else encode_bits(r.actual.im, run.precision),
                "failures": UNSUPPORTED_SYMBOL if unsupported else "".join(sorted(r.failures)),
            }
        )
    return rows


def render_csv(run: SuiteRun) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(_rows(run))
    return buf.getvalue()


def render_json(run: SuiteRun) -> str:
    passed, denom = run.pass_rate
    doc = {
        "provider": run.provider_name,
        "precision": run.precision.value,
        "mode": run.mode,
        "passed": passed,
        "denominator": denom,
        "results": _rows(run),
    }
    return json.dumps(doc, indent=2) + "\n"


def summary(run: SuiteRun) -> str:
    """One line: "N/D" plus per-letter case counts."""
    passed, denom = run.pass_rate
    if not run.results:
        return "0/0 (warning: no results)"
    counts: dict[str, int] = {}
    for r in run.results:
        for letter in r.failures:
            counts[letter] = counts.get(letter, 0) + 1
    parts = [f"{passed}/{denom}"]
    for letter in sorted(counts):
        parts.append(f"{letter}={counts[letter]}")
    return " ".join(parts)
