"""Tests for the alternating-group colorings."""

import pytest

from cayleycolor.chroma.models import VertexColoring
from cayleycolor.construct import (
    alt_generators,
    alt_graph,
    alt_three_coloring,
    lift_alt_coloring,
    literal_shift_plan,
    total_color_alt,
)
from cayleycolor.construct.alternating import hypothesis_failure, lift_frame
from cayleycolor.exceptions import InvalidParameterError
from cayleycolor.oracle import enumerate_colorings

LIFT_STAGES = {"literal", "plan-search", "repair"}


class TestGenerators:
    """Test the generating sets and graphs."""

    def test_even_n_uses_cycle_from_two(self) -> None:
        assert [str(g) for g in alt_generators(4)] == ["(1,2,3)", "(1,3,2)", "(2,3,4)", "(2,4,3)"]

    def test_odd_n_uses_full_cycle(self) -> None:
        assert str(alt_generators(5)[2]) == "(1,2,3,4,5)"

    def test_a3_collapses_duplicates(self) -> None:
        assert len(alt_generators(3)) == 2

    def test_graph_is_four_regular(self) -> None:
        g = alt_graph(4)
        assert g.n == 12
        assert all(g.degree(v) == 4 for v in range(12))

    def test_too_small(self) -> None:
        with pytest.raises(InvalidParameterError):
            alt_generators(2)


class TestShiftPlan:
    """Test the literal offset plan."""

    @pytest.mark.parametrize(
        ("n", "plan"),
        [
            (5, (0, 1, 2, 0, 1)),
            (6, (0, 1, 2, 1, 2, 0)),
            (7, (0, 1, 2, 0, 1, 2, 0)),
            (9, (0, 1, 2, 0, 1, 2, 0, 1, 1)),
        ],
    )
    def test_plans(self, n: int, plan: tuple[int, ...]) -> None:
        assert literal_shift_plan(n) == plan

    @pytest.mark.parametrize("n", [5, 6])
    def test_one_offset_per_coset(self, n: int) -> None:
        assert len(literal_shift_plan(n)) == lift_frame(n).cosets == n


class TestLiftFrame:
    """Test the left-coset frame the lift colors through."""

    def test_odd_labels(self) -> None:
        assert lift_frame(5).labels == ("H", "Htau^1", "Htau^2", "Htau^3", "Htau^4")

    def test_even_ends_with_remainder(self) -> None:
        labels = lift_frame(6).labels
        assert labels[0] == "H"
        assert labels[-1] == "L"

    @pytest.mark.parametrize("n", [5, 6])
    def test_cosets_cover_base_group(self, n: int) -> None:
        frame = lift_frame(n)
        size = len(frame.base_elements)
        for c in range(frame.cosets):
            assert sorted(frame.base_index[frame.coset_of == c]) == list(range(size))

    @pytest.mark.parametrize("n", [5, 6])
    def test_internal_edges_are_base_edges(self, n: int) -> None:
        frame = lift_frame(n)
        base = alt_graph(n - 1)
        internal = [(i, j) for i, j in alt_graph(n).edges if frame.coset_of[i] == frame.coset_of[j]]
        # two 3-cycle neighbours per vertex stay in its coset
        assert len(internal) == len(frame.elements)
        for i, j in internal:
            assert base.has_edge(int(frame.base_index[i]), int(frame.base_index[j]))


class TestLift:
    """Test lifting 3-colorings up the alternating groups."""

    def test_lift_a4_to_a5(self) -> None:
        base = next(enumerate_colorings(alt_graph(4), 3))
        result = lift_alt_coloring(5, base, seed=1)
        assert result.method == "thm2-lift"
        assert result.graph.n == 60
        assert result.report.proper
        assert result.report.colors_used == 3
        assert result.notes["stage"] in LIFT_STAGES
        assert len(result.notes["plan"]) == 5

    @pytest.mark.parametrize("which", range(4))
    def test_summary_names_repair_stage(self, which: int) -> None:
        base = list(enumerate_colorings(alt_graph(4), 3))[which]
        result = lift_alt_coloring(5, base, seed=1)
        if result.notes["stage"] == "repair":
            recolored = result.notes["recolored"]
            expected = f"proper, 3 colors (stage=repair, {recolored} recolored)"
            assert result.report.summary == expected
            assert result.report.to_dict()["note"].startswith("stage=repair")
        else:
            assert "(" not in result.report.summary

    @pytest.mark.slow
    def test_chain_to_a6(self) -> None:
        coloring = alt_three_coloring(6, seed=1)
        assert coloring.n == 360
        assert coloring.num_colors == 3

    def test_base_must_be_proper(self) -> None:
        with pytest.raises(InvalidParameterError, match="improper"):
            lift_alt_coloring(5, VertexColoring.of([1] * 12))

    def test_lift_needs_n_at_least_five(self) -> None:
        with pytest.raises(InvalidParameterError):
            lift_alt_coloring(4, VertexColoring.of([1, 2, 3]))

    def test_chain_starts_at_four(self) -> None:
        with pytest.raises(InvalidParameterError):
            alt_three_coloring(3)


class TestTotalColorAlt:
    """Test the total coloring with Delta+1 colors."""

    def test_a4_takes_the_matching_route(self) -> None:
        result = total_color_alt(4)
        assert result.method == "cor-alt-total"
        assert result.notes == {"path": "matching"}
        assert result.report.colors_used == 5
        assert result.report.bound_class == "type I"

    def test_every_a4_coloring_meets_the_hypothesis(self) -> None:
        g = alt_graph(4)
        colorings = list(enumerate_colorings(g, 3))
        assert len(colorings) == 4
        assert all(hypothesis_failure(g, c) is None for c in colorings)

    def test_hypothesis_rejects_two_colors(self) -> None:
        g = alt_graph(4)
        assert hypothesis_failure(g, VertexColoring.of([1, 2] * 6)) == "2 colors instead of 3"

    @pytest.mark.slow
    def test_a5(self) -> None:
        result = total_color_alt(5, seed=1)
        assert result.report.colors_used == 5
        assert result.notes["path"] in {"matching", "exact-fallback"}

    def test_too_small(self) -> None:
        with pytest.raises(InvalidParameterError):
            total_color_alt(3)
