"""Machine-readable report tables: CSV and JSON emission.

CSV carries 15 significant digits (`%.15g`); JSON floats use Python's native
shortest round-trip representation, so the two formats agree to formatting
precision.  Complex quantities are always pre-split into separate re/im
columns by the callers; empty cells are None (empty string in CSV, null in
JSON).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Table", "to_csv", "to_json", "render"]

CSV_DIGITS = 15


@dataclass
class Table:
    columns: list[str]
    rows: list[list]
    meta: dict = field(default_factory=dict)


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.{CSV_DIGITS}g}"
    if isinstance(v, int):
        return str(v)
    text = str(v)
    if any(c in text for c in ",\"\n"):
        text = '"' + text.replace('"', '""') + '"'
    return text


def to_csv(table: Table) -> str:
    lines = [",".join(table.columns)]
    for row in table.rows:
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def to_json(table: Table) -> str:
    payload = {"meta": table.meta, "columns": table.columns, "rows": table.rows}
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    raise ValueError(f"unknown output format {fmt!r}")
