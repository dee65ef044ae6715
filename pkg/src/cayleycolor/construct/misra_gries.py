"""Misra-Gries edge coloring with at most Delta+1 colors."""

import logging

import networkx as nx

from ..chroma.models import EdgeColoring
from ..chroma.verify import verify_edge
from ..graphcore import Graph, edge_key
from .base import ensure_verified

logger = logging.getLogger(__name__)

_ATTR = "misra_gries_color"


def _color(G: nx.Graph, u: int, v: int) -> int | None:
    return G[u][v][_ATTR]


def _free(G: nx.Graph, v: int, palette: range) -> int:
    used = {G[v][w][_ATTR] for w in G.neighbors(v)}
    return next(c for c in palette if c not in used)


def _is_free(G: nx.Graph, v: int, c: int) -> bool:
    return all(G[v][w][_ATTR] != c for w in G.neighbors(v))


def _maximal_fan(G: nx.Graph, u: int, v: int) -> list[int]:
    """[v, f1, f2, ...]: each (u, f_i) colored with a color free at the previous fan vertex."""
    fan = [v]
    grown = True
    while grown:
        grown = False
        for w in sorted(G.neighbors(u)):
            c = _color(G, u, w)
            if w in fan or c is None:
                continue
            if _is_free(G, fan[-1], c):
                fan.append(w)
                grown = True
                break
    return fan


def _invert_path(G: nx.Graph, u: int, c: int, d: int) -> None:
    """Swap c and d along the path from u that starts with a d-colored edge."""
    path = []
    prev, cur, want = None, u, d
    while True:
        nxt = next(
            (w for w in G.neighbors(cur) if w != prev and _color(G, cur, w) == want), None
        )
        if nxt is None:
            break
        path.append((cur, nxt))
        prev, cur, want = cur, nxt, c if want == d else d
    for a, b in path:
        G[a][b][_ATTR] = c if G[a][b][_ATTR] == d else d


def _is_fan(G: nx.Graph, u: int, fan: list[int]) -> bool:
    return all(
        (c := _color(G, u, fan[i])) is not None and _is_free(G, fan[i - 1], c)
        for i in range(1, len(fan))
    )


def _rotate(G: nx.Graph, u: int, fan: list[int]) -> None:
    for i in range(len(fan) - 1):
        G[u][fan[i]][_ATTR] = _color(G, u, fan[i + 1])
    G[u][fan[-1]][_ATTR] = None


def misra_gries_edge_coloring(g: Graph) -> EdgeColoring:
    """Proper edge coloring of ``g`` with at most Delta+1 colors.

    Raises:
        VerificationError: the result is improper
    """
    G = g.to_networkx()
    nx.set_edge_attributes(G, values=None, name=_ATTR)
    palette = range(g.max_degree + 1)
    for u, v in g.sorted_edges:
        fan = _maximal_fan(G, u, v)
        c = _free(G, u, palette)
        d = _free(G, fan[-1], palette)
        _invert_path(G, u, c, d)
        w = next(
            i for i in range(len(fan)) if _is_free(G, fan[i], d) and _is_fan(G, u, fan[: i + 1])
        )
        _rotate(G, u, fan[: w + 1])
        G[u][fan[w]][_ATTR] = d

    coloring = EdgeColoring({edge_key(a, b): data[_ATTR] + 1 for a, b, data in G.edges(data=True)})
    ensure_verified(verify_edge(g, coloring), "Misra-Gries edge coloring")
    logger.debug("Misra-Gries used %d colors at Delta=%d", coloring.num_colors, g.max_degree)
    return coloring
