"""Proper-coloring verifiers and the conformability check.

Improper colorings are report content with a witness; only shape or domain mismatches raise.
"""

import logging

from ..exceptions import ColoringFormatError, GraphError
from ..graphcore import Graph, is_regular
from .models import (
    BoundClass,
    ColoringReport,
    EdgeColoring,
    Element,
    TotalColorMatrix,
    VertexColoring,
)

logger = logging.getLogger(__name__)


def _edge_bound(colors_used: int, delta: int) -> BoundClass:
    if colors_used <= delta:
        return "class I"
    if colors_used == delta + 1:
        return "class II"
    return "beyond-Vizing"


def _total_bound(colors_used: int, delta: int) -> BoundClass:
    if colors_used <= delta + 1:
        return "type I"
    if colors_used == delta + 2:
        return "type II"
    return "beyond-TCC"


def _vertex_conflict(g: Graph, colors: tuple[int, ...]) -> tuple[Element, Element] | None:
    for i, j in g.sorted_edges:
        if colors[i] == colors[j]:
            return (i, j)
    return None


def _edge_conflict(g: Graph, colors: dict[tuple[int, int], int]) -> tuple[Element, Element] | None:
    for v in range(g.n):
        seen: dict[int, tuple[int, int]] = {}
        for u in sorted(g.adjacency[v]):
            e = (v, u) if v < u else (u, v)
            c = colors[e]
            if c in seen:
                return (seen[c], e)
            seen[c] = e
    return None


def _check_edge_domain(g: Graph, e: EdgeColoring) -> None:
    if set(e.colors) != g.edges:
        extra = sorted(set(e.colors) - g.edges)[:1]
        missing = sorted(g.edges - set(e.colors))[:1]
        raise ColoringFormatError(
            f"edge coloring domain differs from the edge set (extra {extra}, missing {missing})"
        )


def verify_vertex(g: Graph, c: VertexColoring) -> ColoringReport:
    """Proper iff no edge is monochromatic.

    Raises:
        ColoringFormatError: coloring length differs from the vertex count
    """
    if c.n != g.n:
        raise ColoringFormatError(f"{c.n} vertex colors for {g.n} vertices")
    witness = _vertex_conflict(g, c.colors)
    return ColoringReport(
        kind="vertex",
        proper=witness is None,
        colors_used=c.num_colors,
        max_degree=g.max_degree,
        witness=witness,
        detail=f"adjacent vertices {witness[0]} and {witness[1]} share a color" if witness else "",
    )


def verify_edge(g: Graph, e: EdgeColoring) -> ColoringReport:
    """Proper iff no two edges at a vertex share a color; classified against Vizing's bound.

    Raises:
        ColoringFormatError: the coloring's domain is not exactly the edge set
    """
    _check_edge_domain(g, e)
    witness = _edge_conflict(g, e.colors)
    delta = g.max_degree
    return ColoringReport(
        kind="edge",
        proper=witness is None,
        colors_used=e.num_colors,
        max_degree=delta,
        bound_class=_edge_bound(e.num_colors, delta) if witness is None else "n/a",
        witness=witness,
        detail=f"incident edges {witness[0]} and {witness[1]} share a color" if witness else "",
    )


def verify_total(g: Graph, t: TotalColorMatrix) -> ColoringReport:
    """Vertex, edge and edge-endpoint conditions together; classified against Delta+1/Delta+2.

    Raises:
        ColoringFormatError: matrix size or off-diagonal support differs from the graph
    """
    if t.n != g.n:
        raise ColoringFormatError(f"{t.n}x{t.n} matrix for {g.n} vertices")
    edges = t.edge_coloring()
    _check_edge_domain(g, edges)
    vertex = t.vertex_coloring()
    delta = g.max_degree

    witness: tuple[Element, Element] | None = None
    detail = ""
    if (vw := _vertex_conflict(g, vertex.colors)) is not None:
        witness, detail = vw, f"adjacent vertices {vw[0]} and {vw[1]} share a color"
    elif (ew := _edge_conflict(g, edges.colors)) is not None:
        witness, detail = ew, f"incident edges {ew[0]} and {ew[1]} share a color"
    else:
        for (i, j), c in sorted(edges.colors.items()):
            clash = i if vertex.colors[i] == c else j if vertex.colors[j] == c else None
            if clash is not None:
                witness = ((i, j), clash)
                detail = f"edge {(i, j)} has the color of its endpoint {clash}"
                break

    colors_used = t.num_colors
    return ColoringReport(
        kind="total",
        proper=witness is None,
        colors_used=colors_used,
        max_degree=delta,
        bound_class=_total_bound(colors_used, delta) if witness is None else "n/a",
        witness=witness,
        detail=detail,
    )


def verify_conformable(
    g: Graph, c: VertexColoring, num_classes: int | None = None
) -> ColoringReport:
    """Proper coloring into Delta+1 classes, empty classes counted, all sizes = n mod 2.

    ``num_classes`` defaults to Delta+1; colors are opaque, unused classes are the empty ones.

    Raises:
        GraphError: the graph is not regular
    """
    if not is_regular(g):
        raise GraphError("conformability is checked on regular graphs only")
    base = verify_vertex(g, c)
    target = g.max_degree + 1 if num_classes is None else num_classes
    parity = g.n % 2
    sizes = sorted(len(v) for v in c.classes().values())
    empty = target - len(sizes)

    detail = ""
    if not base.proper:
        detail = base.detail
    elif empty < 0:
        detail = f"{len(sizes)} classes exceed the {target} allowed"
    elif bad := [s for s in sizes if s % 2 != parity]:
        detail = f"class of size {bad[0]} has the wrong parity for n={g.n}"
    elif empty > 0 and parity == 1:
        detail = f"{empty} empty classes have even size but n={g.n} is odd"

    report = ColoringReport(
        kind="conformable",
        proper=base.proper,
        colors_used=c.num_colors,
        max_degree=g.max_degree,
        witness=base.witness,
        detail=detail,
        conformable=base.proper and not detail,
    )
    if base.proper and detail:
        logger.debug("Coloring is proper but not conformable: %s", detail)
    return report
