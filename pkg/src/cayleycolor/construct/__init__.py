"""Constructive colorings, each verified before it is returned."""

from .alternating import (
    alt_generators,
    alt_graph,
    alt_three_coloring,
    lift_alt_coloring,
    literal_shift_plan,
    total_color_alt,
)
from .base import Construction
from .conformable import conformable_partition
from .gyro import gyro_edge_color, gyro_generators, gyro_total_color, gyro_vertex_color
from .misra_gries import misra_gries_edge_coloring
from .power_cycle import PseudoLatin, power_cycle_stride_coloring, total_color_power_cycle
from .repair import RepairResult, tabu_recolor
from .symmetric import sym_generators, total_color_sym

__all__ = [
    "Construction",
    "PseudoLatin",
    "RepairResult",
    "alt_generators",
    "alt_graph",
    "alt_three_coloring",
    "conformable_partition",
    "gyro_edge_color",
    "gyro_generators",
    "gyro_total_color",
    "gyro_vertex_color",
    "lift_alt_coloring",
    "literal_shift_plan",
    "misra_gries_edge_coloring",
    "power_cycle_stride_coloring",
    "sym_generators",
    "tabu_recolor",
    "total_color_alt",
    "total_color_power_cycle",
]
