"""CSV import/export of labeled square matrices.

Layout: one comment line recording kind and unit, a header row of ISO codes,
then one row per location with the ISO code first and the values at three
decimal places. Files round-trip losslessly at that precision (5e-4).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError, ValidationError

_UNITS = {"distance": "km", "delay": "ms"}


@dataclass(frozen=True)
class LabeledMatrix:
    """A square matrix with ISO-coded rows/columns, as read from a CSV file.

    Unlike DistanceMatrix this carries no symmetry or range guarantees; it is
    the shape reference tables and exported delay matrices travel in.
    """

    iso_codes: tuple[str, ...]
    cells: np.ndarray
    kind: str
    unit: str

    def __post_init__(self):
        n = len(self.iso_codes)
        cells = np.asarray(self.cells, dtype=np.float64).copy()
        if cells.shape != (n, n):
            raise ValidationError(f"cells shape {cells.shape} does not match {n} labels")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "iso_codes", tuple(self.iso_codes))


def format_matrix_csv(iso_codes, cells, kind: str) -> str:
    """Render a labeled matrix as CSV text (deterministic, '\\n' line ends)."""
    if kind not in _UNITS:
        raise ValidationError(f"kind must be one of {sorted(_UNITS)}, got {kind!r}")
    out = io.StringIO()
    out.write(f"# kind={kind} unit={_UNITS[kind]}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(iso_codes))
    for iso, row in zip(iso_codes, np.asarray(cells)):
        writer.writerow([iso] + [f"{v:.3f}" for v in row])
    return out.getvalue()


def export_matrix(matrix, kind: str, path) -> None:
    """Write a matrix to CSV.

    Args:
        matrix: Anything with iso_codes and cells (DistanceMatrix,
            LabeledMatrix, ...).
        kind: "distance" (km) or "delay" (ms); recorded in the comment line.
        path: Destination file path.
    """
    text = format_matrix_csv(matrix.iso_codes, matrix.cells, kind)
    Path(path).write_text(text, encoding="utf-8")


def import_matrix(path) -> LabeledMatrix:
    """Read a CSV written by export_matrix back into a LabeledMatrix."""
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise ParseError(f"{path}: missing '# kind=... unit=...' comment line", line=1)
    fields = dict(
        part.split("=", 1) for part in lines[0].lstrip("#").split() if "=" in part
    )
    kind = fields.get("kind")
    unit = fields.get("unit")
    if kind not in _UNITS or unit != _UNITS[kind]:
        raise ParseError(f"{path}: unrecognized kind/unit in {lines[0]!r}", line=1)

    rows = list(csv.reader(lines[1:]))
    if not rows:
        raise ParseError(f"{path}: no header row", line=2)
    header = rows[0]
    if header[0] != "":
        raise ParseError(f"{path}: header row must start with an empty cell", line=2)
    iso_codes = tuple(header[1:])
    n = len(iso_codes)
    if n == 0:
        raise ParseError(f"{path}: header row has no ISO codes", line=2)
    if len(rows) - 1 != n:
        raise ParseError(f"{path}: expected {n} data rows, found {len(rows) - 1}")

    cells = np.zeros((n, n), dtype=np.float64)
    for r, row in enumerate(rows[1:]):
        lineno = r + 3  # 1 comment + 1 header, 1-based
        if len(row) != n + 1:
            raise ParseError(f"{path}: row {row[:1]} has {len(row) - 1} values, expected {n}",
                             line=lineno)
        if row[0] != iso_codes[r]:
            raise ParseError(
                f"{path}: row label {row[0]!r} does not match header {iso_codes[r]!r}",
                line=lineno,
            )
        try:
            cells[r, :] = [float(v) for v in row[1:]]
        except ValueError as exc:
            raise ParseError(f"{path}: non-numeric value in row {row[0]!r}: {exc}",
                             line=lineno) from None
    return LabeledMatrix(iso_codes=iso_codes, cells=cells, kind=kind, unit=unit)
