"""Tests for the gyrogroup Cayley graph colorings."""

import pytest

from cayleycolor.construct import (
    gyro_edge_color,
    gyro_generators,
    gyro_total_color,
    gyro_vertex_color,
)
from cayleycolor.exceptions import GeneratorSetError, InvalidParameterError
from cayleycolor.gyrocore import GyroTable


class TestGyroGenerators:
    def test_m8_k2(self) -> None:
        assert gyro_generators(8, 2) == [1, 2, 6, 7, 12]

    @pytest.mark.parametrize(("m", "k"), [(5, 1), (2, 1), (8, 4), (8, 0)])
    def test_invalid(self, m: int, k: int) -> None:
        with pytest.raises(InvalidParameterError):
            gyro_generators(m, k)


class TestGyroVertexColor:
    """Test the two-copy vertex coloring."""

    def test_uses_circulant_chromatic_number(self, gyro8: GyroTable) -> None:
        result = gyro_vertex_color(gyro8, [1, 2, 6, 7, 12])
        assert result.graph.n == 16
        assert result.report.proper
        assert result.report.colors_used == 4
        assert result.notes["chi_circulant"] == 4
        assert result.notes["matches_circulant_chi"]

    def test_reflection_graph(self, gyro8: GyroTable) -> None:
        result = gyro_vertex_color(gyro8, [1, 7, 12])
        assert result.report.colors_used == 2

    def test_missing_reflection(self, gyro8: GyroTable) -> None:
        with pytest.raises(GeneratorSetError):
            gyro_vertex_color(gyro8, [1, 7])

    def test_missing_residues(self, gyro8: GyroTable) -> None:
        with pytest.raises(GeneratorSetError):
            gyro_vertex_color(gyro8, [12])


class TestGyroTotalColor:
    """Test the total coloring with a fresh matching color."""

    def test_m8_k2(self, gyro8: GyroTable) -> None:
        result = gyro_total_color(gyro8, [1, 2, 6, 7, 12])
        assert result.report.proper
        assert result.report.colors_used == 6
        assert result.report.bound_class == "type I"
        assert result.notes["circulant_total"] == 5
        assert result.notes["matching_color"] == 6
        assert result.notes["type_i"]


class TestGyroEdgeColor:
    """Test the edge coloring with one color per reflection."""

    def test_reflection_graph_is_class_one(self, gyro8: GyroTable) -> None:
        result = gyro_edge_color(gyro8, [1, 7, 12])
        assert result.report.proper
        assert result.report.colors_used == 3
        assert result.notes["verdict"] == "class I"

    def test_m8_k2(self, gyro8: GyroTable) -> None:
        result = gyro_edge_color(gyro8, [1, 2, 6, 7, 12])
        assert result.report.proper
        assert result.report.colors_used == 5
        assert result.notes["circulant_method"] == "oracle"
