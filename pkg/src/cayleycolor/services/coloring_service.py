"""Coloring service - graph building, constructions, verification and oracles for the CLI.

Single responsibility: turn command parameters into library calls and write artifacts.
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import zip_longest
from pathlib import Path
from typing import Any, Literal

from ..chroma.matrix_io import (
    GOLDEN_TABLES,
    format_matrix,
    golden_text,
    read_coloring,
    read_matrix,
    write_coloring,
    write_matrix,
)
from ..chroma.models import ColoringReport, EdgeColoring, TotalColorMatrix, VertexColoring
from ..chroma.verify import verify_conformable, verify_edge, verify_total, verify_vertex
from ..config import settings
from ..construct import (
    Construction,
    alt_generators,
    alt_three_coloring,
    conformable_partition,
    gyro_edge_color,
    gyro_generators,
    gyro_total_color,
    gyro_vertex_color,
    lift_alt_coloring,
    sym_generators,
    total_color_alt,
    total_color_power_cycle,
    total_color_sym,
)
from ..exceptions import ColoringFormatError, InvalidParameterError
from ..graphcore import Graph, cayley_group, cayley_gyro, circulant, iso_multiplier, power_cycle
from ..gyrocore import GyroTable, build_table, enumerate_variants, format_table, verify_axioms
from ..oracle.exact import (
    OracleParameter,
    OracleResult,
    chromatic_index,
    chromatic_number,
    independence_number,
    total_chromatic_number,
)
from ..permcore import Permutation, enumerate_group, parse_cycles
from ..utils.files import write_json
from ..utils.logging import get_logger, log_elapsed
from .manifest import RunManifest

logger = get_logger(__name__)

Family = Literal["power-cycle", "circulant", "sym", "alt", "gyro", "file"]
Method = Literal[
    "thm1",
    "thm2-lift",
    "cor-alt-total",
    "conformable",
    "thm5-total",
    "gyro-vertex",
    "gyro-total",
    "gyro-edge",
]
VerifyKind = Literal["vertex", "edge", "total", "conformable"]

FAMILIES: tuple[Family, ...] = ("power-cycle", "circulant", "sym", "alt", "gyro", "file")
METHODS: tuple[Method, ...] = (
    "thm1",
    "thm2-lift",
    "cor-alt-total",
    "conformable",
    "thm5-total",
    "gyro-vertex",
    "gyro-total",
    "gyro-edge",
)
# instances the shipped golden tables were derived from
GOLDEN_INSTANCES = {"table1.csv": (13, 5), "table2.csv": (25, 5)}


@dataclass
class GraphRequest:
    """Graph selection shared by build, verify and oracle."""

    family: Family
    n: int | None = None
    k: int | None = None
    m: int | None = None
    connection: list[int] = field(default_factory=list)
    gens: str | None = None
    graph_path: Path | None = None

    def parameters(self) -> dict[str, Any]:
        data: dict[str, Any] = {"family": self.family}
        for key in ("n", "k", "m", "gens"):
            if (value := getattr(self, key)) is not None:
                data[key] = value
        if self.connection:
            data["connection"] = self.connection
        if self.graph_path is not None:
            data["graph"] = str(self.graph_path)
        return data


@dataclass
class ColorOutcome:
    construction: Construction
    manifest: RunManifest
    artifact: Path
    report_path: Path


@dataclass(frozen=True)
class GoldenDiff:
    name: str
    n: int
    k: int
    identical: bool
    first_difference: tuple[int, str, str] | None = None


def _require(value: int | None, name: str, what: str) -> int:
    if value is None:
        raise InvalidParameterError(f"{what} needs --{name}")
    return value


def artifact_stem(method: str, params: dict[str, Any]) -> str:
    """File stem from the method and its set parameters, e.g. "thm5-total-k5-n13"."""
    parts = [method, *(f"{k}{v}" for k, v in sorted(params.items()) if v is not None)]
    return "-".join(parts).replace(",", "_").replace(" ", "")


def parse_gyro_gens(text: str) -> list[int]:
    try:
        return [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError as e:
        raise InvalidParameterError(f"gyro generators must be comma-separated labels: {e}") from e


def parse_perm_gens(text: str, degree: int) -> list[Permutation]:
    """';'-separated cycle notation, e.g. "(1,2);(1,2,3)"."""
    return [parse_cycles(part, degree) for part in text.split(";") if part.strip()]


class ColoringService:
    """Service behind every CLI command.

    Supports dependency injection for testing:
        service = ColoringService(output_dir=tmp_path)
    """

    def __init__(self, output_dir: Path | None = None) -> None:
        self._output_dir = output_dir

    @property
    def output_dir(self) -> Path:
        return settings.ensure_output_dir(self._output_dir)

    # graphs

    def gyro_table(self, m: int) -> GyroTable:
        return build_table(m)

    def gyro_gens(self, m: int, k: int | None, gens: str | None) -> list[int]:
        if gens:
            return parse_gyro_gens(gens)
        return gyro_generators(m, _require(k, "k", "gyro generators"))

    def build_graph(self, req: GraphRequest) -> Graph:
        """Build the requested graph.

        Raises:
            InvalidParameterError: missing or invalid parameters for the family
            ColoringFormatError: unreadable graph file
        """
        family = req.family
        if family == "power-cycle":
            return power_cycle(_require(req.n, "n", family), _require(req.k, "k", family))
        if family == "circulant":
            if not req.connection:
                raise InvalidParameterError("circulant needs --connection")
            return circulant(_require(req.n, "n", family), req.connection)
        if family in ("sym", "alt"):
            n = _require(req.n, "n", family)
            kind = "symmetric" if family == "sym" else "alternating"
            if req.gens:
                gens = parse_perm_gens(req.gens, n)
            else:
                gens = sym_generators(n) if family == "sym" else alt_generators(n)
            return cayley_group(enumerate_group(kind, n), gens)
        if family == "gyro":
            m = _require(req.m, "m", family)
            return cayley_gyro(self.gyro_table(m), self.gyro_gens(m, req.k, req.gens))
        if family == "file":
            if req.graph_path is None:
                raise InvalidParameterError("file family needs --graph")
            return self.read_graph(req.graph_path)
        raise InvalidParameterError(f"unknown family {family!r}; choose from {FAMILIES}")

    def read_graph(self, path: Path) -> Graph:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ColoringFormatError(f"cannot read graph {path}: {e}") from e
        return Graph.from_json(data)

    def write_graph(self, g: Graph, name: str) -> Path:
        return write_json(self.output_dir / f"{name}.json", g.to_json())

    # constructions

    def construct(
        self,
        method: Method,
        *,
        n: int | None = None,
        k: int | None = None,
        m: int | None = None,
        gens: str | None = None,
        seed: int | None = None,
    ) -> Construction:
        """Run one construction; its output is already verified."""
        if method == "thm1":
            return total_color_sym(_require(n, "n", method))
        if method == "thm2-lift":
            n = _require(n, "n", method)
            if n < 5:
                raise InvalidParameterError(f"thm2-lift needs n >= 5, got {n}")
            return lift_alt_coloring(n, alt_three_coloring(n - 1, seed=seed), seed=seed)
        if method == "cor-alt-total":
            return total_color_alt(_require(n, "n", method), seed=seed)
        if method == "conformable":
            return conformable_partition(_require(n, "n", method), _require(k, "k", method))
        if method == "thm5-total":
            return total_color_power_cycle(_require(n, "n", method), _require(k, "k", method))
        if method in ("gyro-vertex", "gyro-total", "gyro-edge"):
            m = _require(m, "m", method)
            t = self.gyro_table(m)
            gyro_gens = self.gyro_gens(m, k, gens)
            if method == "gyro-vertex":
                return gyro_vertex_color(t, gyro_gens)
            if method == "gyro-total":
                return gyro_total_color(t, gyro_gens)
            return gyro_edge_color(t, gyro_gens)
        raise InvalidParameterError(f"unknown method {method!r}; choose from {METHODS}")

    def color(self, method: Method, **params: Any) -> ColorOutcome:
        """Construct, then write the artifact, its report and a manifest to the output dir."""
        manifest = RunManifest(
            "color", {"method": method, **{k: v for k, v in params.items() if v is not None}}
        )
        with log_elapsed(logger, f"color {method}", logging.INFO):
            result = self.construct(method, **params)
        stem = artifact_stem(method, params)
        out = self.output_dir
        if isinstance(result.coloring, TotalColorMatrix):
            artifact = write_matrix(out / f"{stem}.csv", result.coloring)
            kind = "total-matrix"
        else:
            artifact = write_coloring(out / f"{stem}.json", result.coloring)
            kind = f"{result.report.kind}-coloring"
        report_data = {
            "method": result.method,
            "graph": {
                "vertices": result.graph.n,
                "edges": result.graph.edge_count,
                "max_degree": result.graph.max_degree,
            },
            "report": result.report.to_dict(),
            "notes": result.notes,
        }
        report_path = write_json(out / f"{stem}.report.json", report_data)
        manifest.add_artifact(artifact, kind, result.report.summary)
        manifest.add_artifact(report_path, "report", result.report.summary)
        manifest.verdicts[method] = result.report.summary
        manifest.finish().write(out / f"{stem}.manifest.json")
        logger.info("%s wrote %s (%s)", method, artifact, result.report.summary)
        return ColorOutcome(result, manifest, artifact, report_path)

    # checks

    def verify(self, kind: VerifyKind, g: Graph, artifact: Path) -> ColoringReport:
        """Verify an artifact file against ``g``; improper colorings come back as reports.

        Raises:
            ColoringFormatError: unreadable artifact or a coloring of the wrong kind
        """
        if kind == "total":
            return verify_total(g, read_matrix(artifact))
        coloring = read_coloring(artifact)
        if kind == "edge":
            if not isinstance(coloring, EdgeColoring):
                raise ColoringFormatError("edge verification needs an edge coloring")
            return verify_edge(g, coloring)
        if not isinstance(coloring, VertexColoring):
            raise ColoringFormatError(f"{kind} verification needs a vertex coloring")
        if kind == "conformable":
            return verify_conformable(g, coloring)
        return verify_vertex(g, coloring)

    def oracle(
        self,
        parameter: OracleParameter,
        g: Graph,
        *,
        node_budget: int | None = None,
        time_budget: float | None = None,
    ) -> OracleResult:
        if parameter == "chi":
            return chromatic_number(g, node_budget=node_budget, time_budget=time_budget)
        if parameter == "chi-prime":
            return chromatic_index(g, node_budget=node_budget, time_budget=time_budget)
        if parameter == "chi-double-prime":
            return total_chromatic_number(g, node_budget=node_budget, time_budget=time_budget)
        if parameter == "alpha":
            return independence_number(g, node_budget=node_budget)
        raise InvalidParameterError(f"unknown oracle parameter {parameter!r}")

    def iso(self, n: int, s1: list[int], s2: list[int]) -> dict[str, Any]:
        a = iso_multiplier(n, s1, s2)
        return {
            "n": n,
            "s1": sorted({s % n for s in s1}),
            "s2": sorted({s % n for s in s2}),
            "isomorphic_by_multiplier": a is not None,
            "multiplier": a,
        }

    def golden(self) -> list[GoldenDiff]:
        """Re-derive each golden table and compare it line by line with the shipped file."""
        diffs = []
        for name in GOLDEN_TABLES:
            n, k = GOLDEN_INSTANCES[name]
            derived = format_matrix(total_color_power_cycle(n, k).coloring)
            expected = golden_text(name)
            first = None
            lines = zip_longest(expected.splitlines(), derived.splitlines(), fillvalue="")
            for row, (want, got) in enumerate(lines):
                if want != got:
                    first = (row, want, got)
                    break
            diffs.append(GoldenDiff(name, n, k, derived == expected, first))
        return diffs

    def gyro_table_dump(self, m: int, variant: int | None = None) -> tuple[str, bool]:
        """CSV dump of the table and whether it passes the axioms."""
        if variant is None:
            t = self.gyro_table(m)
        else:
            variants = enumerate_variants()
            if not 0 <= variant < len(variants):
                raise InvalidParameterError(f"variant must lie in 0..{len(variants) - 1}")
            t = build_table(m, variants[variant])
        return format_table(t), verify_axioms(t).passed

