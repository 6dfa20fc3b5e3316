"""Report rendering: one row per model, ACC / CPL / CLR / Average columns.

Each column marks a best and (given two or more models) a second-best row.
Ties on the mean go to the smaller spread, then the smaller model id. The
plain-text and CSV forms append ``*`` (best) and ``+`` (second best); the
markdown form bolds the best cell and italicises the second best.
"""

from __future__ import annotations

import csv
import io

from .aggregate import CRITERIA, EvalReport

FORMATS = ("table_text", "csv", "markdown")

COLUMNS = ("ACC", "CPL", "CLR", "Average")

_BEST, _SECOND = 0, 1


def _column_values(report: EvalReport, column: str) -> list[tuple[float, float, str]]:
    values = []
    for row in report.rows:
        if column == "Average":
            values.append((row.average, 0.0, row.model))
        else:
            stats = row.criterion(CRITERIA[COLUMNS.index(column)])
            values.append((stats.mean, stats.std, row.model))
    return values


def _rank_markers(report: EvalReport) -> dict[str, dict[int, int]]:
    """column -> row index -> marker (_BEST or _SECOND)."""
    markers: dict[str, dict[int, int]] = {}
    for column in COLUMNS:
        values = _column_values(report, column)
        order = sorted(
            range(len(values)),
            key=lambda i: (-values[i][0], values[i][1], values[i][2]),
        )
        column_markers = {order[0]: _BEST}
        if len(order) > 1:
            column_markers[order[_SECOND]] = _SECOND
        markers[column] = column_markers
    return markers


def _cells(report: EvalReport) -> list[list[str]]:
    rows = []
    for row in report.rows:
        cells = [
            f"{row.criterion(criterion).mean:.2f} (±{row.criterion(criterion).std:.2f})"
            for criterion in CRITERIA
        ]
        cells.append(f"{row.average:.2f}")
        rows.append(cells)
    return rows


def _decorate(cell: str, marker: int | None, fmt: str) -> str:
    if marker is None:
        return cell
    if fmt == "markdown":
        return f"**{cell}**" if marker == _BEST else f"*{cell}*"
    return f"{cell} *" if marker == _BEST else f"{cell} +"


def emit_report(report: EvalReport, format: str = "table_text") -> str:
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}")
    markers = _rank_markers(report)
    table = []
    for index, (row, cells) in enumerate(zip(report.rows, _cells(report))):
        decorated = [
            _decorate(cell, markers[column].get(index), format)
            for column, cell in zip(COLUMNS, cells)
        ]
        table.append([row.model, *decorated])
    header = ["model", *COLUMNS]

    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        return buffer.getvalue()

    if format == "markdown":
        lines = [
            "| " + " | ".join(header) + " |",
            "| " + " | ".join("---" for _ in header) + " |",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in table]
        return "\n".join(lines) + "\n"

    widths = [max(len(row[i]) for row in [header, *table]) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in [header, *table]
    ]
    lines.insert(1, "-" * max(len(line) for line in lines))
    return "\n".join(lines) + "\n"
