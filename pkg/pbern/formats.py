"""Renderers for tables, coefficient lists and verification reports."""

import csv
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .numeric import format_rational
from .pbernoulli import PBernTable
from .verify import VerifyReport


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"


def _json(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: List[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def latex_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return f"${value.numerator}$"
    sign = "-" if value < 0 else ""
    return f"${sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}$"


def _latex(header: Sequence[str], rows: List[Sequence[str]]) -> str:
    lines = [f"\\begin{{tabular}}{{r|{'r' * (len(header) - 1)}}}"]
    lines.append(" & ".join(header) + " \\\\")
    lines.append("\\hline")
    for row in rows:
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render_table(table: PBernTable, fmt: OutputFormat) -> str:
    """Render a B_{n,p} table; rows are n, columns are p."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _json(
            {
                "max_n": table.max_n,
                "max_p": table.max_p,
                "route": table.route.value,
                "values": [
                    [format_rational(v) for v in row] for row in table.values
                ],
            }
        )
    if fmt is OutputFormat.CSV:
        header = ["n"] + [f"p={p}" for p in range(table.max_p + 1)]
        rows = [
            [str(n)] + [format_rational(v) for v in row]
            for n, row in enumerate(table.values)
        ]
        return _csv(header, rows)
    header = ["$n$"] + [f"$p={p}$" for p in range(table.max_p + 1)]
    rows = [
        [str(n)] + [latex_rational(v) for v in row]
        for n, row in enumerate(table.values)
    ]
    return _latex(header, rows)


def render_coefficients(p: int, coefficients: Sequence[Fraction], fmt: OutputFormat) -> str:
    """Render B_{0,p}..B_{order-1,p}."""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _json(
            {
                "p": p,
                "order": len(coefficients),
                "coefficients": [format_rational(c) for c in coefficients],
            }
        )
    if fmt is OutputFormat.CSV:
        rows = [[str(n), format_rational(c)] for n, c in enumerate(coefficients)]
        return _csv(["n", "B"], rows)
    rows = [[str(n), latex_rational(c)] for n, c in enumerate(coefficients)]
    return _latex(["$n$", f"$B_{{n,{p}}}$"], rows)


def render_reports(max_n: int, max_p: int, reports: Sequence[VerifyReport]) -> str:
    return _json(
        {
            "max_n": max_n,
            "max_p": max_p,
            "passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
        }
    )
