"""Tests for tabu repair and Misra-Gries edge coloring."""

import pytest

from cayleycolor.chroma.models import VertexColoring
from cayleycolor.chroma.verify import verify_edge, verify_vertex
from cayleycolor.construct import misra_gries_edge_coloring, tabu_recolor
from cayleycolor.exceptions import InvalidParameterError, SearchExhaustedError
from cayleycolor.graphcore import Graph, circulant, power_cycle


class TestTabuRecolor:
    """Test the tabu local search."""

    def test_fixes_monochromatic_cycle(self) -> None:
        c8 = circulant(8, [1, 7])
        result = tabu_recolor(c8, VertexColoring.of([1] * 8), 2, seed=3)
        assert verify_vertex(c8, result.coloring).proper
        assert result.recolored >= 4
        assert result.iterations > 0

    def test_proper_start_is_untouched(self, triangle: Graph) -> None:
        result = tabu_recolor(triangle, VertexColoring.of([1, 2, 3]), 3, iterations=0)
        assert result.coloring.colors == (1, 2, 3)
        assert result.iterations == 0
        assert result.recolored == 0

    def test_repairs_power_of_cycle(self) -> None:
        g = power_cycle(13, 5)
        result = tabu_recolor(g, VertexColoring.of([1 + v % 6 for v in range(13)]), 7, seed=0)
        assert verify_vertex(g, result.coloring).proper
        assert result.coloring.num_colors == 7

    def test_forbidden_colors(self) -> None:
        edge = Graph.from_edges(2, [(0, 1)])
        result = tabu_recolor(edge, VertexColoring.of([1, 2]), 2, forbidden={0: [1]})
        assert result.coloring.colors == (2, 1)

    def test_impossible_target_exhausts(self, k4: Graph) -> None:
        with pytest.raises(SearchExhaustedError):
            tabu_recolor(k4, VertexColoring.of([1, 2, 3, 1]), 3, iterations=50)

    def test_zero_budget_with_conflict(self, triangle: Graph) -> None:
        with pytest.raises(SearchExhaustedError):
            tabu_recolor(triangle, VertexColoring.of([1, 1, 2]), 3, iterations=0)

    def test_length_mismatch(self, triangle: Graph) -> None:
        with pytest.raises(InvalidParameterError):
            tabu_recolor(triangle, VertexColoring.of([1, 2]), 3)

    def test_color_out_of_range(self, triangle: Graph) -> None:
        with pytest.raises(InvalidParameterError):
            tabu_recolor(triangle, VertexColoring.of([1, 2, 4]), 3)


class TestMisraGries:
    """Test the Delta+1 edge coloring."""

    @pytest.mark.parametrize(
        "graph",
        [
            lambda: circulant(5, [1, 2, 3, 4]),
            lambda: circulant(4, [1, 2, 3]),
            lambda: circulant(7, [1, 6]),
            lambda: power_cycle(13, 5),
            lambda: Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
        ],
    )
    def test_at_most_delta_plus_one(self, graph) -> None:
        g = graph()
        coloring = misra_gries_edge_coloring(g)
        report = verify_edge(g, coloring)
        assert report.proper
        assert report.colors_used <= g.max_degree + 1
        assert len(coloring) == g.edge_count

    def test_prism(self, prism: Graph) -> None:
        coloring = misra_gries_edge_coloring(prism)
        assert coloring.num_colors <= 4
