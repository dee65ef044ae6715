"""Total-color-matrix CSV and coloring JSON files.

The CSV grid has a header row and column of 0-based vertex indices; blank cells are
non-edges. Lines end with a bare newline, as in the shipped golden tables.
"""

import csv
import io
import json
from importlib import resources
from pathlib import Path
from typing import Any

from ..exceptions import ColoringFormatError
from ..utils.files import dump_json, write_text
from .models import EdgeColoring, TotalColorMatrix, VertexColoring

GOLDEN_TABLES = ("table1.csv", "table2.csv")


def format_matrix(t: TotalColorMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["", *range(t.n)])
    for i, row in enumerate(t.entries):
        writer.writerow([i, *("" if c is None else c for c in row)])
    return buf.getvalue()


def parse_matrix(text: str) -> TotalColorMatrix:
    """Parse matrix CSV, completing one-sided cells symmetrically.

    Raises:
        ColoringFormatError: ragged rows, bad headers, non-integer cells or conflicting
            (i,j)/(j,i) entries
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise ColoringFormatError("empty matrix file")
    header = rows[0]
    n = len(header) - 1
    if header[0].strip() or [h.strip() for h in header[1:]] != [str(i) for i in range(n)]:
        raise ColoringFormatError("header row must be ',0,1,...,n-1'")
    body = rows[1:]
    if len(body) != n:
        raise ColoringFormatError(f"expected {n} rows, found {len(body)}")

    cells: list[list[int | None]] = []
    for i, row in enumerate(body):
        if len(row) != n + 1:
            raise ColoringFormatError(f"row {i} has {len(row) - 1} cells, expected {n}")
        if row[0].strip() != str(i):
            raise ColoringFormatError(f"row {i} is labelled {row[0]!r}")
        parsed: list[int | None] = []
        for j, cell in enumerate(row[1:]):
            cell = cell.strip()
            if not cell:
                parsed.append(None)
                continue
            try:
                parsed.append(int(cell))
            except ValueError as e:
                raise ColoringFormatError(f"cell ({i},{j}) is not an integer: {cell!r}") from e
        cells.append(parsed)

    for i in range(n):
        for j in range(i + 1, n):
            a, b = cells[i][j], cells[j][i]
            if a is not None and b is not None and a != b:
                raise ColoringFormatError(f"asymmetric cell ({i},{j}): {a} vs ({j},{i}): {b}")
            cells[i][j] = cells[j][i] = a if a is not None else b
    return TotalColorMatrix(n=n, entries=tuple(tuple(r) for r in cells))


def read_matrix(path: str | Path) -> TotalColorMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(path: str | Path, t: TotalColorMatrix) -> Path:
    return write_text(path, format_matrix(t))


def golden_text(name: str) -> str:
    """Contents of a shipped golden table ("table1.csv" or "table2.csv")."""
    if name not in GOLDEN_TABLES:
        raise ColoringFormatError(f"unknown golden table {name!r}")
    return resources.files("cayleycolor.golden").joinpath(name).read_text(encoding="utf-8")


def coloring_to_json(c: VertexColoring | EdgeColoring) -> dict[str, Any]:
    if isinstance(c, VertexColoring):
        return {"kind": "vertex", "colors": list(c.colors)}
    return {"kind": "edge", "edges": c.triples()}


def coloring_from_json(data: Any) -> VertexColoring | EdgeColoring:
    """Build a vertex or edge coloring from its JSON form.

    Raises:
        ColoringFormatError: unknown kind or malformed entries
    """
    try:
        kind = data["kind"]
        if kind == "vertex":
            return VertexColoring.of(data["colors"])
        if kind == "edge":
            return EdgeColoring.from_triples(data["edges"])
    except (KeyError, TypeError, ValueError) as e:
        raise ColoringFormatError(f"malformed coloring JSON: {e}") from e
    raise ColoringFormatError(f"unknown coloring kind {kind!r}")


def read_coloring(path: str | Path) -> VertexColoring | EdgeColoring:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ColoringFormatError(f"{path} is not valid JSON: {e}") from e
    return coloring_from_json(data)


def write_coloring(path: str | Path, c: VertexColoring | EdgeColoring) -> Path:
    return write_text(path, dump_json(coloring_to_json(c)))
