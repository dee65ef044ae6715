"""Tests for the proper-coloring verifiers."""

import pytest

from cayleycolor.chroma.models import EdgeColoring, TotalColorMatrix, VertexColoring
from cayleycolor.chroma.verify import (
    verify_conformable,
    verify_edge,
    verify_total,
    verify_vertex,
)
from cayleycolor.construct import (
    conformable_partition,
    total_color_power_cycle,
    total_color_sym,
)
from cayleycolor.exceptions import ColoringFormatError, GraphError
from cayleycolor.graphcore import Graph, circulant


def _triangle_total(edge_colors: dict[tuple[int, int], int]) -> TotalColorMatrix:
    return TotalColorMatrix.from_colorings(VertexColoring.of([1, 2, 3]), EdgeColoring(edge_colors))


class TestVerifyVertex:
    """Test vertex coloring verification."""

    def test_bipartite_cycle(self) -> None:
        c8 = circulant(8, [1, 7])
        report = verify_vertex(c8, VertexColoring.of([1, 2] * 4))
        assert report.proper
        assert report.colors_used == 2
        assert report.witness is None

    def test_monochromatic_edge_witness(self) -> None:
        c8 = circulant(8, [1, 7])
        report = verify_vertex(c8, VertexColoring.of([1] * 8))
        assert not report.proper
        assert report.witness == (0, 1)

    def test_length_mismatch_raises(self) -> None:
        with pytest.raises(ColoringFormatError):
            verify_vertex(circulant(8, [1, 7]), VertexColoring.of([1, 2]))


class TestVerifyEdge:
    """Test edge coloring verification and the Vizing classification."""

    def test_k4_is_class_one(self, k4: Graph) -> None:
        coloring = EdgeColoring({(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2, (0, 3): 3, (1, 2): 3})
        report = verify_edge(k4, coloring)
        assert report.proper
        assert report.bound_class == "class I"

    def test_odd_cycle_is_class_two(self) -> None:
        c5 = circulant(5, [1, 4])
        coloring = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (3, 4): 2, (0, 4): 3})
        report = verify_edge(c5, coloring)
        assert report.proper
        assert report.bound_class == "class II"

    def test_incident_edges_witness(self) -> None:
        c5 = circulant(5, [1, 4])
        coloring = EdgeColoring({(0, 1): 1, (1, 2): 2, (2, 3): 1, (3, 4): 2, (0, 4): 1})
        report = verify_edge(c5, coloring)
        assert not report.proper
        assert report.witness == ((0, 1), (0, 4))
        assert report.bound_class == "n/a"

    def test_domain_mismatch_raises(self, k4: Graph) -> None:
        with pytest.raises(ColoringFormatError):
            verify_edge(k4, EdgeColoring({(0, 1): 1}))


class TestVerifyTotal:
    """Test total coloring verification."""

    def test_triangle_type_one(self, triangle: Graph) -> None:
        report = verify_total(triangle, _triangle_total({(0, 1): 3, (1, 2): 1, (0, 2): 2}))
        assert report.proper
        assert report.colors_used == 3
        assert report.bound_class == "type I"

    def test_edge_endpoint_clash(self, triangle: Graph) -> None:
        report = verify_total(triangle, _triangle_total({(0, 1): 1, (1, 2): 3, (0, 2): 2}))
        assert not report.proper
        assert report.witness == ((0, 1), 0)

    def test_beyond_tcc_classification(self, triangle: Graph) -> None:
        matrix = TotalColorMatrix.from_colorings(
            VertexColoring.of([1, 2, 3]), EdgeColoring({(0, 1): 4, (1, 2): 5, (0, 2): 6})
        )
        assert verify_total(triangle, matrix).bound_class == "beyond-TCC"

    def test_missing_edge_raises(self, triangle: Graph) -> None:
        with pytest.raises(ColoringFormatError):
            verify_total(triangle, _triangle_total({(0, 1): 3, (1, 2): 1}))


class TestVerifyConformable:
    """Test the conformability check."""

    def test_even_cycle_with_empty_class(self) -> None:
        c4 = circulant(4, [1, 3])
        report = verify_conformable(c4, VertexColoring.of([1, 2, 1, 2]))
        assert report.conformable
        assert report.ok

    def test_wrong_parity_is_reported(self) -> None:
        c5 = circulant(5, [1, 4])
        report = verify_conformable(c5, VertexColoring.of([1, 2, 1, 2, 3]))
        assert report.proper
        assert report.conformable is False
        assert "parity" in report.detail

    def test_too_many_classes(self) -> None:
        c4 = circulant(4, [1, 3])
        report = verify_conformable(c4, VertexColoring.of([1, 2, 3, 4]))
        assert report.conformable is False

    def test_irregular_graph_raises(self) -> None:
        path = Graph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(GraphError):
            verify_conformable(path, VertexColoring.of([1, 2, 1]))


class TestTotalColorClasses:
    """Every color class of a proper total coloring is an independent set plus a matching."""

    @staticmethod
    def _assert_classes_decompose(g: Graph, t: TotalColorMatrix) -> None:
        vertex = t.vertex_coloring().colors
        for color in t.colors:
            verts = [v for v in range(g.n) if vertex[v] == color]
            edges = [e for e, c in t.edge_coloring().colors.items() if c == color]
            assert not any(g.has_edge(u, v) for u in verts for v in verts if u < v)
            ends = [v for e in edges for v in e]
            assert len(ends) == len(set(ends))
            assert not set(ends) & set(verts)

    def test_block_total_coloring(self) -> None:
        result = total_color_power_cycle(13, 5)
        assert verify_total(result.graph, result.coloring).proper
        self._assert_classes_decompose(result.graph, result.coloring)

    def test_symmetric_group_total_coloring(self) -> None:
        result = total_color_sym(3)
        self._assert_classes_decompose(result.graph, result.coloring)


class TestConformableRelabeling:
    """Conformability depends on the class sizes, not on the color names."""

    @pytest.mark.parametrize("relabel", [lambda c: 6 - c, lambda c: 10 + c, lambda c: 2 * c])
    def test_relabeled_partition_stays_conformable(self, relabel) -> None:
        result = conformable_partition(10, 2)
        renamed = VertexColoring.of(relabel(c) for c in result.coloring.colors)
        original = verify_conformable(result.graph, result.coloring)
        assert original.conformable
        assert verify_conformable(result.graph, renamed).conformable == original.conformable

    @pytest.mark.parametrize("relabel", [lambda c: 4 - c, lambda c: 7 * c])
    def test_relabeled_failure_stays_failure(self, relabel) -> None:
        c5 = circulant(5, [1, 4])
        renamed = VertexColoring.of(relabel(c) for c in [1, 2, 1, 2, 3])
        assert verify_conformable(c5, renamed).conformable is False
