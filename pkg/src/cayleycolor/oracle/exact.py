"""Exact chromatic number, chromatic index, total chromatic number and independence number.

Each value is certified from both sides: a witness at ``value`` colors that passes the chroma
verifier, and below it either a proven bound (clique size, Delta, Delta+1) or an exhausted
search at every count between the bound and ``value``.
"""

import logging
import time
from dataclasses import dataclass
from typing import Any, Literal

from ..chroma.models import EdgeColoring, TotalColorMatrix, VertexColoring
from ..chroma.verify import verify_edge, verify_total, verify_vertex
from ..config import settings
from ..exceptions import VerificationError
from ..graphcore import Graph
from .cliques import max_clique, max_independent_set
from .search import colorable
from .transforms import line_graph, total_graph

logger = logging.getLogger(__name__)

OracleParameter = Literal["chi", "chi-prime", "chi-double-prime", "alpha"]
OracleStatus = Literal["exact", "budget-exceeded"]
Witness = VertexColoring | EdgeColoring | TotalColorMatrix | tuple[int, ...]

_EXHAUSTED = "node or time budget exhausted"


@dataclass(frozen=True)
class OracleResult:
    """Exact value with its witness, or a budget-exceeded status and no guess."""

    parameter: OracleParameter
    status: OracleStatus
    value: int | None
    witness: Witness | None
    nodes_explored: int
    lower_bound: int
    max_degree: int
    detail: str = ""

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    @property
    def bound_class(self) -> str:
        if self.value is None:
            return "n/a"
        delta = self.max_degree
        if self.parameter == "chi-prime":
            return "class I" if self.value <= delta else "class II"
        if self.parameter == "chi-double-prime":
            if self.value <= delta + 1:
                return "type I"
            return "type II" if self.value == delta + 2 else "beyond-TCC"
        return "n/a"

    def to_dict(self) -> dict[str, Any]:
        w = self.witness
        if isinstance(w, VertexColoring):
            witness: Any = list(w.colors)
        elif isinstance(w, EdgeColoring):
            witness = w.triples()
        elif isinstance(w, TotalColorMatrix):
            witness = {
                "vertices": list(w.vertex_coloring().colors),
                "edges": w.edge_coloring().triples(),
            }
        else:
            witness = list(w) if w is not None else None
        data: dict[str, Any] = {
            "parameter": self.parameter,
            "status": self.status,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "max_degree": self.max_degree,
            "bound_class": self.bound_class,
            "nodes_explored": self.nodes_explored,
            "witness": witness,
        }
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class _Budget:
    nodes: int
    deadline: float
    used: int = 0

    @classmethod
    def create(cls, node_budget: int | None, time_budget: float | None) -> "_Budget":
        seconds = time_budget if time_budget is not None else settings.oracle_time_budget
        return cls(
            nodes=node_budget if node_budget is not None else settings.oracle_node_budget,
            deadline=time.monotonic() + seconds,
        )

    @property
    def remaining_nodes(self) -> int:
        return max(self.nodes - self.used, 0)

    @property
    def remaining_seconds(self) -> float:
        return max(self.deadline - time.monotonic(), 0.0)


def _min_colors(g: Graph, lower: int, budget: _Budget) -> tuple[int | None, VertexColoring | None]:
    """Smallest x >= lower with a coloring; ``lower`` must be a proven lower bound."""
    if g.n == 0:
        return 0, VertexColoring(())
    x = max(lower, 1)
    while True:
        out = colorable(
            g, x, node_budget=budget.remaining_nodes, time_budget=budget.remaining_seconds
        )
        budget.used += out.nodes
        if out.status == "budget-exceeded":
            return None, None
        if out.status == "found":
            return x, out.coloring
        x += 1


def _exceeded(
    parameter: OracleParameter, g: Graph, lower: int, nodes: int, detail: str
) -> OracleResult:
    logger.info("Oracle %s stopped: %s", parameter, detail)
    return OracleResult(
        parameter=parameter,
        status="budget-exceeded",
        value=None,
        witness=None,
        nodes_explored=nodes,
        lower_bound=lower,
        max_degree=g.max_degree,
        detail=detail,
    )


def _element_cap(count: int) -> str | None:
    cap = settings.oracle_max_elements
    if count > cap:
        return f"{count} elements exceed oracle_max_elements={cap}"
    return None


def chromatic_number(
    g: Graph, *, node_budget: int | None = None, time_budget: float | None = None
) -> OracleResult:
    """Exact chi(g): clique lower bound, then saturation-ordered branch and bound."""
    budget = _Budget.create(node_budget, time_budget)
    clique = max_clique(g, node_budget=budget.remaining_nodes)
    budget.used += clique.nodes
    lower = clique.size
    value, coloring = _min_colors(g, lower, budget)
    if value is None or coloring is None:
        return _exceeded("chi", g, lower, budget.used, _EXHAUSTED)
    report = verify_vertex(g, coloring)
    if not report.proper:
        raise VerificationError("chromatic number witness is improper", report)
    return OracleResult("chi", "exact", value, coloring, budget.used, lower, g.max_degree)


def chromatic_index(
    g: Graph, *, node_budget: int | None = None, time_budget: float | None = None
) -> OracleResult:
    """Exact chi'(g) as the chromatic number of the line graph."""
    lower = g.max_degree
    if (why := _element_cap(g.edge_count)) is not None:
        return _exceeded("chi-prime", g, lower, 0, why)
    budget = _Budget.create(node_budget, time_budget)
    line, edges = line_graph(g)
    value, coloring = _min_colors(line, lower, budget)
    if value is None or coloring is None:
        return _exceeded("chi-prime", g, lower, budget.used, _EXHAUSTED)
    witness = EdgeColoring({e: coloring.colors[k] for k, e in enumerate(edges)})
    report = verify_edge(g, witness)
    if not report.proper:
        raise VerificationError("chromatic index witness is improper", report)
    return OracleResult("chi-prime", "exact", value, witness, budget.used, lower, g.max_degree)


def total_chromatic_number(
    g: Graph, *, node_budget: int | None = None, time_budget: float | None = None
) -> OracleResult:
    """Exact chi''(g) as the chromatic number of the total graph."""
    delta = g.max_degree
    lower = delta + 1 if g.n else 0
    if (why := _element_cap(g.n + g.edge_count)) is not None:
        return _exceeded("chi-double-prime", g, lower, 0, why)
    budget = _Budget.create(node_budget, time_budget)
    tg, _ = total_graph(g)
    value, coloring = _min_colors(tg, lower, budget)
    if value is None or coloring is None:
        return _exceeded("chi-double-prime", g, lower, budget.used, _EXHAUSTED)
    vertex = VertexColoring(coloring.colors[: g.n])
    edge = EdgeColoring({e: coloring.colors[g.n + k] for k, e in enumerate(g.sorted_edges)})
    witness = TotalColorMatrix.from_colorings(vertex, edge)
    report = verify_total(g, witness)
    if not report.proper:
        raise VerificationError("total chromatic number witness is improper", report)
    if value > delta + 2:
        logger.warning("Total chromatic number %d exceeds Delta+2 = %d", value, delta + 2)
    return OracleResult("chi-double-prime", "exact", value, witness, budget.used, lower, delta)


def independence_number(g: Graph, *, node_budget: int | None = None) -> OracleResult:
    """Exact alpha(g) as a maximum clique of the complement."""
    result = max_independent_set(g, node_budget=node_budget)
    if any(g.has_edge(u, v) for u in result.vertices for v in result.vertices if u < v):
        raise VerificationError("independence witness contains an edge")
    if not result.exact:
        return _exceeded("alpha", g, result.size, result.nodes, "node budget exhausted")
    return OracleResult(
        "alpha", "exact", result.size, result.vertices, result.nodes, result.size, g.max_degree
    )
