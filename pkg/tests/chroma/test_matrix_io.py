"""Tests for matrix CSV and coloring JSON files."""

import json
from pathlib import Path

import pytest

from cayleycolor.chroma.matrix_io import (
    coloring_from_json,
    format_matrix,
    golden_text,
    parse_matrix,
    read_coloring,
    read_matrix,
    write_coloring,
    write_matrix,
)
from cayleycolor.chroma.models import EdgeColoring, TotalColorMatrix, VertexColoring
from cayleycolor.exceptions import ColoringFormatError

SMALL = ",0,1,2\n0,1,3,\n1,3,2,1\n2,,1,3\n"


class TestParseMatrix:
    """Test the matrix CSV parser."""

    def test_parse_small_matrix(self) -> None:
        t = parse_matrix(SMALL)
        assert t.n == 3
        assert t[(0, 1)] == 3
        assert t[(0, 2)] is None
        assert format_matrix(t) == SMALL

    def test_one_sided_cells_completed(self) -> None:
        t = parse_matrix(",0,1\n0,1,2\n1,,3\n")
        assert t[(1, 0)] == 2

    def test_conflicting_cells_rejected(self) -> None:
        with pytest.raises(ColoringFormatError, match="asymmetric"):
            parse_matrix(",0,1\n0,1,2\n1,4,3\n")

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "x,0,1\n0,1,2\n1,2,3\n",
            ",0,1\n0,1,2\n",
            ",0,1\n0,1,2\n1,2\n",
            ",0,1\n0,1,a\n1,2,3\n",
            ",0,1\n1,1,2\n0,2,3\n",
        ],
    )
    def test_malformed_rejected(self, text: str) -> None:
        with pytest.raises(ColoringFormatError):
            parse_matrix(text)


class TestGoldenTables:
    """The shipped golden tables parse into proper matrices."""

    def test_table_one_spot_values(self) -> None:
        t = parse_matrix(golden_text("table1.csv"))
        assert t.n == 13
        assert t[(0, 1)] == 5
        assert t[(1, 6)] == 8
        assert t[(0, 8)] == 12
        assert t[(12, 12)] == 7
        assert t[(0, 6)] is None
        assert t.num_colors == 12

    def test_table_two_spot_values(self) -> None:
        t = parse_matrix(golden_text("table2.csv"))
        assert t.n == 25
        assert t[(20, 0)] == 12
        assert t[(0, 0)] == 1

    def test_golden_text_is_canonical(self) -> None:
        text = golden_text("table1.csv")
        assert format_matrix(parse_matrix(text)) == text

    def test_unknown_golden_table(self) -> None:
        with pytest.raises(ColoringFormatError):
            golden_text("table3.csv")


class TestFiles:
    """Test reading and writing artifacts."""

    def test_matrix_file_round_trip(self, tmp_path: Path) -> None:
        t = parse_matrix(SMALL)
        path = write_matrix(tmp_path / "m.csv", t)
        assert path.read_text(encoding="utf-8") == SMALL
        assert read_matrix(path) == t

    def test_vertex_coloring_file(self, tmp_path: Path) -> None:
        path = write_coloring(tmp_path / "v.json", VertexColoring.of([1, 2, 1]))
        assert json.loads(path.read_text()) == {"colors": [1, 2, 1], "kind": "vertex"}
        assert read_coloring(path) == VertexColoring.of([1, 2, 1])

    def test_edge_coloring_file(self, tmp_path: Path) -> None:
        coloring = EdgeColoring({(0, 1): 2, (1, 2): 1})
        path = write_coloring(tmp_path / "e.json", coloring)
        assert read_coloring(path) == coloring

    def test_output_is_deterministic(self, tmp_path: Path) -> None:
        coloring = VertexColoring.of([3, 1, 2])
        a = write_coloring(tmp_path / "a.json", coloring).read_bytes()
        b = write_coloring(tmp_path / "b.json", coloring).read_bytes()
        assert a == b
        assert a.endswith(b"\n")

    def test_invalid_json_file(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ColoringFormatError):
            read_coloring(path)

    @pytest.mark.parametrize(
        "data", [{"kind": "face", "colors": [1]}, {"kind": "vertex"}, {"kind": "edge", "edges": 3}]
    )
    def test_malformed_coloring_json(self, data: dict) -> None:
        with pytest.raises(ColoringFormatError):
            coloring_from_json(data)

    def test_total_matrix_from_file_matches_colorings(self, tmp_path: Path) -> None:
        t = TotalColorMatrix.from_colorings(
            VertexColoring.of([1, 2]), EdgeColoring({(0, 1): 3})
        )
        assert read_matrix(write_matrix(tmp_path / "t.csv", t)) == t
