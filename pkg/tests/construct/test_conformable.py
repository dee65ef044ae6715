"""Tests for conformable partitions of powers of cycles."""

import pytest

from cayleycolor.chroma.verify import verify_conformable
from cayleycolor.construct import conformable_partition
from cayleycolor.exceptions import InvalidParameterError

EVEN_CASES = [(n, k) for n in range(4, 31, 2) for k in range(1, 6) if 2 * k < n]
ODD_CASES = [(n, k) for n in range(7, 32, 2) for k in range(1, 10) if 3 * (k + 1) < n]


class TestConformablePartition:
    """Test conformable partitions into 2k+1 classes."""

    @pytest.mark.parametrize(("n", "k"), EVEN_CASES)
    def test_even_n(self, n: int, k: int) -> None:
        result = conformable_partition(n, k)
        assert result.report.conformable
        sizes = result.notes["class_sizes"]
        assert len(sizes) == 2 * k + 1
        assert all(s % 2 == 0 for s in sizes)

    @pytest.mark.parametrize(("n", "k"), ODD_CASES)
    def test_odd_n(self, n: int, k: int) -> None:
        result = conformable_partition(n, k)
        assert result.report.conformable
        sizes = result.notes["class_sizes"]
        assert len(sizes) == 2 * k + 1
        assert all(s % 2 == 1 for s in sizes)
        assert sum(sizes) == n

    def test_result_rechecks(self) -> None:
        result = conformable_partition(13, 2)
        assert verify_conformable(result.graph, result.coloring).conformable

    @pytest.mark.parametrize(
        ("n", "k"),
        [
            (8, 4),  # even n, k not below n/2
            (9, 2),  # odd n, k+1 = n/3
            (11, 3),  # odd n, k+1 > n/3
            (7, 0),
        ],
    )
    def test_out_of_range(self, n: int, k: int) -> None:
        with pytest.raises(InvalidParameterError):
            conformable_partition(n, k)
