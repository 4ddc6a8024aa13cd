"""CSV ingestion and emission for the CLI.

Input files carry two columns ``t,z`` (header optional, auto-detected),
UTF-8, ``#`` comment lines and blank lines ignored.  Output samples carry
``t,value,d1,d2`` printed with 17 significant digits so a round-trip
through the file reproduces every double bit-for-bit.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParseError
from .spline import SampleTable

__all__ = ["read_points", "write_samples", "read_samples"]

SAMPLE_HEADER = "t,value,d1,d2"


def _parse_float(token, line_no, col_no):
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"not a number: {token!r}", line=line_no, column=col_no) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite value: {token!r}", line=line_no, column=col_no)
    return value


def _data_lines(path):
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield line_no, line


def read_points(path):
    """Read a two-column knot/value file; returns (t, z) arrays.

    Raises :class:`ParseError` (with the offending line number) for wrong
    column counts, unparseable or non-finite numbers, and for abscissae
    that are not strictly increasing.
    """
    ts, zs = [], []
    first_data_line = True
    prev_t, prev_line = None, None
    for line_no, line in _data_lines(path):
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise ParseError(f"expected 2 comma-separated columns, got {len(fields)}", line=line_no)
        if first_data_line:
            first_data_line = False
            try:
                float(fields[0])
            except ValueError:
                continue  # header row
        t = _parse_float(fields[0], line_no, 1)
        z = _parse_float(fields[1], line_no, 2)
        if prev_t is not None and t <= prev_t:
            raise ParseError(
                f"t values must be strictly increasing ({t!r} after {prev_t!r} from line {prev_line})",
                line=line_no,
                column=1,
            )
        prev_t, prev_line = t, line_no
        ts.append(t)
        zs.append(z)
    if len(ts) < 2:
        raise ParseError(f"need at least 2 data rows, found {len(ts)}")
    return np.array(ts), np.array(zs)


def write_samples(table, path):
    """Write a :class:`SampleTable` as CSV with 17 significant digits."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(SAMPLE_HEADER + "\n")
        for t, val, d1, d2 in zip(table.t, table.value, table.deriv1, table.deriv2):
            handle.write(f"{t:.17g},{val:.17g},{d1:.17g},{d2:.17g}\n")


def read_samples(path):
    """Re-read a sample CSV written by :func:`write_samples`."""
    rows = []
    first_data_line = True
    for line_no, line in _data_lines(path):
        fields = line.split(",")
        if len(fields) != 4:
            raise ParseError(f"expected 4 columns, got {len(fields)}", line=line_no)
        if first_data_line:
            first_data_line = False
            try:
                float(fields[0])
            except ValueError:
                continue  # header row
        rows.append([_parse_float(f, line_no, i + 1) for i, f in enumerate(fields)])
    data = np.array(rows).reshape(-1, 4)
    return SampleTable(t=data[:, 0], value=data[:, 1], deriv1=data[:, 2], deriv2=data[:, 3])
