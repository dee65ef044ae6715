"""Coloring data model, verifiers and file formats."""

from .matrix_io import (
    format_matrix,
    golden_text,
    parse_matrix,
    read_coloring,
    read_matrix,
    write_coloring,
    write_matrix,
)
from .models import (
    ColoringReport,
    EdgeColoring,
    TotalColorMatrix,
    VertexColoring,
    class_sizes,
    is_equitable,
)
from .verify import verify_conformable, verify_edge, verify_total, verify_vertex

__all__ = [
    "ColoringReport",
    "EdgeColoring",
    "TotalColorMatrix",
    "VertexColoring",
    "class_sizes",
    "format_matrix",
    "golden_text",
    "is_equitable",
    "parse_matrix",
    "read_coloring",
    "read_matrix",
    "verify_conformable",
    "verify_edge",
    "verify_total",
    "verify_vertex",
    "write_coloring",
    "write_matrix",
]
