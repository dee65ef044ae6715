"""Result type shared by the constructions."""

from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

from ..chroma.models import ColoringReport, EdgeColoring, TotalColorMatrix, VertexColoring
from ..exceptions import VerificationError
from ..graphcore import Graph

C = TypeVar("C", VertexColoring, EdgeColoring, TotalColorMatrix)


@dataclass(frozen=True)
class Construction(Generic[C]):
    """A constructed coloring together with the verdict of its own verification.

    ``notes`` records how the coloring was obtained (stage, plan, fallbacks).
    """

    method: str
    graph: Graph
    coloring: C
    report: ColoringReport
    notes: dict[str, Any] = field(default_factory=dict)


def ensure_verified(report: ColoringReport, what: str) -> ColoringReport:
    """Raise VerificationError unless ``report`` is a passing verdict."""
    if not report.ok:
        raise VerificationError(f"{what} failed verification: {report.summary}", report)
    return report
