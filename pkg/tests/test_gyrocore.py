"""Tests for the 2-gyrogroup operation tables and the axiom checker."""

import numpy as np
import pytest

from cayleycolor.exceptions import GyroTableError
from cayleycolor.gyrocore import (
    GyroTable,
    GyroVariant,
    build_table,
    enumerate_variants,
    format_table,
    gyr,
    gyro_inverse,
    left_translation,
    select_variant,
    structural_facts,
    verify_axioms,
)


class TestVariants:
    """Test the enumeration and selection of case assignments."""

    def test_variant_count(self) -> None:
        variants = enumerate_variants()
        assert len(variants) == 384
        assert len(set(variants)) == 384
        assert [v.index for v in variants] == list(range(384))

    def test_selected_variant_formulas(self) -> None:
        variant = select_variant(8)
        assert variant.formulas == ("sum", "sum", "mix", "twist_b")
        # (T1,T2) and (T2,T1) land in T2
        assert variant.offsets == 0b0110
        assert variant.index == 198

    @pytest.mark.parametrize("m", [4, 16])
    def test_same_variant_across_orders(self, m: int) -> None:
        assert select_variant(m) == select_variant(8)

    @pytest.mark.parametrize("m", [0, 3, 6, 12])
    def test_bad_half_order_rejected(self, m: int) -> None:
        with pytest.raises(GyroTableError):
            build_table(m)

    def test_unknown_formula_rejected(self) -> None:
        with pytest.raises(GyroTableError):
            GyroVariant(formulas=("sum", "sum", "sum", "cube"), offsets=0)  # type: ignore[arg-type]

    def test_describe_mentions_offsets(self) -> None:
        text = select_variant(8).describe()
        assert "(T1,T2): i+j +m" in text
        assert "(T1,T1): i+j;" in text


class TestOperation:
    """Test the default m=8 table."""

    def test_cyclic_part_adds_mod_m(self, gyro8: GyroTable) -> None:
        assert gyro8.op(5, 6) == 3
        assert gyro8.order == 16

    def test_reflection_is_involutive(self, gyro8: GyroTable) -> None:
        assert gyro8.reflection == 12
        assert gyro8.op(12, 12) == 0

    def test_left_identity(self, gyro8: GyroTable) -> None:
        assert all(gyro8.op(0, a) == a for a in range(16))

    def test_table_is_read_only(self, gyro8: GyroTable) -> None:
        with pytest.raises(ValueError):
            gyro8.add[0, 0] = 1

    def test_left_inverses(self, gyro8: GyroTable) -> None:
        assert gyro_inverse(gyro8, 0) == 0
        assert gyro_inverse(gyro8, 3) == 5
        for r in range(8):
            assert gyro_inverse(gyro8, r + 8) == r + 8

    def test_gyrations_with_trivial_arguments(self, gyro8: GyroTable) -> None:
        for a in range(16):
            for c in range(16):
                assert gyr(gyro8, a, a, c) == c
                assert gyr(gyro8, 0, a, c) == c

    def test_gyration_is_a_bijection(self, gyro8: GyroTable) -> None:
        images = [gyr(gyro8, 8, 9, c) for c in range(16)]
        assert sorted(images) == list(range(16))

    def test_left_translation_of_reflection_is_involution(self, gyro8: GyroTable) -> None:
        images = left_translation(gyro8, 12)
        assert all(images[images[x]] == x for x in range(16))
        assert all(images[x] != x for x in range(16))


class TestAxioms:
    """Test the exhaustive axiom checker."""

    @pytest.mark.parametrize("m", [4, 8, 16])
    def test_selected_variant_passes(self, m: int) -> None:
        t = build_table(m)
        report = verify_axioms(t)
        assert report.passed, report.failed
        assert structural_facts(t).passed

    @pytest.mark.slow
    def test_selected_variant_passes_at_32(self) -> None:
        assert verify_axioms(build_table(32)).passed

    def test_degenerate_variant_reports_failures(self) -> None:
        # i+j everywhere, +m whenever the right argument is in T2
        variant = GyroVariant(formulas=("sum", "sum", "sum", "sum"), offsets=0b1010)
        t = build_table(8, variant)
        report = verify_axioms(t)
        assert not report.passed
        assert report["left_identity"].passed
        assert not report["left_inverse"].passed
        assert "gyroassociativity" in report.failed

    def test_missing_inverse_raises(self) -> None:
        variant = GyroVariant(formulas=("sum", "sum", "sum", "sum"), offsets=0b1010)
        t = build_table(8, variant)
        assert t.inverses is None
        with pytest.raises(GyroTableError):
            gyro_inverse(t, 9)

    def test_failed_check_carries_counterexample(self) -> None:
        variant = GyroVariant(formulas=("sum", "sum", "sum", "sum"), offsets=0)
        report = verify_axioms(build_table(4, variant))
        check = report["left_translations"]
        assert not check.passed
        assert check.counterexample is not None

    def test_structural_facts_of_selected_table(self, gyro8: GyroTable) -> None:
        facts = structural_facts(gyro8)
        assert facts.t1_closed and facts.t1_cyclic
        assert facts.t2_pairs_in_t1 and facts.t2_involutive


class TestFormatTable:
    """Test the CSV dump."""

    def test_header_and_rows(self, gyro8: GyroTable) -> None:
        lines = format_table(gyro8).splitlines()
        assert lines[0].startswith("# variant 198 m=8:")
        assert lines[1] == "," + ",".join(str(i) for i in range(16))
        assert len(lines) == 18
        assert lines[2] == "0," + ",".join(str(i) for i in range(16))

    def test_rows_match_table(self, gyro8: GyroTable) -> None:
        rows = format_table(gyro8).splitlines()[2:]
        parsed = np.array([[int(x) for x in r.split(",")[1:]] for r in rows])
        assert (parsed == gyro8.add).all()
