"""Shared test fixtures for CayleyColor."""

from pathlib import Path

import pytest

from cayleycolor.graphcore import Graph, circulant, power_cycle
from cayleycolor.gyrocore import GyroTable, build_table


@pytest.fixture(scope="session")
def gyro8() -> GyroTable:
    """Operation table of the order-16 gyrogroup under the selected variant."""
    return build_table(8)


@pytest.fixture
def triangle() -> Graph:
    return circulant(3, [1, 2])


@pytest.fixture
def c8_squared() -> Graph:
    """C_8^2, the circulant both gyrogroup halves copy at m=8, k=2."""
    return power_cycle(8, 2)


@pytest.fixture
def k4() -> Graph:
    return circulant(4, [1, 2, 3])


@pytest.fixture
def prism() -> Graph:
    """Two triangles joined by a perfect matching."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return Graph.from_edges(6, edges)


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    """Empty artifact directory."""
    path = tmp_path / "artifacts"
    path.mkdir()
    return path
