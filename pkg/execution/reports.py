#!/usr/bin/env python3
"""
Report emission
Renders command results as JSON, CSV, plain text or SVG documents.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from poly_core import ApolarityError, QuadExtScalar, format_scalar

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text", "svg")


class ReportFormatError(ApolarityError):
    """The result cannot be rendered in the requested format"""


@dataclass
class Report:
    """
    Outcome of one command.

    payload is the JSON body; rows, text and svg are the optional CSV, text and
    SVG renderings. verified is False when an identity check failed.
    """

    command: str
    payload: dict
    verified: bool = True
    rows: list = field(default=None)
    text: str = None
    svg: str = None

    def envelope(self):
        return {"success": True, "command": self.command, "verified": self.verified, **self.payload}


def _default(value):
    if isinstance(value, (Fraction, QuadExtScalar)):
        return format_scalar(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def to_json_text(data):
    return json.dumps(data, indent=2, ensure_ascii=False, default=_default)


def _csv_cell(value):
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, (list, tuple, dict, QuadExtScalar)):
        return json.dumps(value, default=_default)
    return value


def _render_csv(rows):
    buffer = io.StringIO()
    fieldnames = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buffer.getvalue()


def _render_text(report):
    if report.text is not None:
        return report.text + "\n"
    lines = [f"{report.command}: {'verified' if report.verified else 'FALSIFIED'}"]
    for key, value in report.payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, ensure_ascii=False, default=_default)
        elif isinstance(value, (Fraction, QuadExtScalar)):
            value = format_scalar(value)
        lines.append(f"  {key}: {value}")
    return "\n".join(lines) + "\n"


def emit_report(report, fmt="json"):
    """Render a Report; raises ReportFormatError for unsupported (result, format) pairs"""
    if fmt not in FORMATS:
        raise ReportFormatError(f"Unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
    if fmt == "json":
        return to_json_text(report.envelope()) + "\n"
    if fmt == "csv":
        if not report.rows:
            raise ReportFormatError(f"{report.command} has no CSV rendering")
        return _render_csv(report.rows)
    if fmt == "svg":
        if report.svg is None:
            raise ReportFormatError("SVG output is only available for atlas-plot")
        return report.svg
    return _render_text(report)


def error_envelope(message):
    return to_json_text({"success": False, "error": message}) + "\n"
