"""Exact oracles: chromatic number, chromatic index, total chromatic number, independence."""

from .cliques import CliqueResult, max_clique, max_independent_set
from .exact import (
    OracleResult,
    chromatic_index,
    chromatic_number,
    independence_number,
    total_chromatic_number,
)
from .search import SearchOutcome, colorable, enumerate_colorings
from .transforms import line_graph, total_graph

__all__ = [
    "CliqueResult",
    "OracleResult",
    "SearchOutcome",
    "chromatic_index",
    "chromatic_number",
    "colorable",
    "enumerate_colorings",
    "independence_number",
    "line_graph",
    "max_clique",
    "max_independent_set",
    "total_chromatic_number",
    "total_graph",
]
