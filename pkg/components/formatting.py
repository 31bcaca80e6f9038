# components/formatting.py
import io
import json

import pandas as pd

from algebra.errors import ParseError


def to_json_text(payload):
    """Serialize a result with sorted keys and compact separators, newline-terminated.

    Args:
        payload: Any JSON-compatible value.

    Returns:
        str: Identical text for identical payloads.
    """
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def _flatten(value):
    # nested lists/dicts go into a single CSV cell as compact JSON
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return value


def to_csv_text(rows, columns=None):
    """Project tabular results (a list of flat dicts) onto CSV.

    Args:
        rows (list[dict]): One dict per row.
        columns (list[str]): Column order; defaults to the sorted union of the keys.

    Returns:
        str: CSV text with a header line.
    """
    if columns is None:
        columns = sorted({k for row in rows for k in row})
    df = pd.DataFrame([{k: _flatten(row.get(k)) for k in columns} for row in rows], columns=columns)
    buffer = io.StringIO()
    df.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render(payload, fmt, table=None):
    """Render a command result in the requested format.

    ``table`` is the row view of ``payload`` for CSV; verbs without one reject CSV.
    """
    if fmt == "json":
        return to_json_text(payload)
    if fmt == "csv":
        if table is None:
            raise ParseError("this command has no tabular output; use --format json")
        return to_csv_text(table)
    raise ParseError(f"unknown output format {fmt!r}")
