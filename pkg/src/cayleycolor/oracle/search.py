"""DSATUR-ordered exact colorability search.

Branching picks the uncolored vertex with the most distinct neighbour colors, then the
highest degree, then the lowest index. Without forbidden colors a vertex may only open the
next unused color, which removes color-permutation symmetry. The search keeps an explicit
stack so total graphs of a few thousand elements do not hit the recursion limit.
"""

import logging
import time
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Literal

from ..chroma.models import VertexColoring
from ..config import settings
from ..graphcore import Graph

logger = logging.getLogger(__name__)

SearchStatus = Literal["found", "infeasible", "budget-exceeded"]

# Wall-clock checks happen once per this many nodes
_CLOCK_INTERVAL = 1024


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    nodes: int
    coloring: VertexColoring | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def colorable(
    g: Graph,
    x: int,
    *,
    node_budget: int | None = None,
    time_budget: float | None = None,
    forbidden: Mapping[int, Iterable[int]] | None = None,
) -> SearchOutcome:
    """Decide whether ``g`` has a proper coloring with colors 1..x.

    Args:
        g: Graph to color
        x: Number of available colors
        node_budget: Search nodes before giving up (default: settings.oracle_node_budget)
        time_budget: Seconds before giving up (default: settings.oracle_time_budget)
        forbidden: Per-vertex colors (1-based) the vertex may not take

    Returns:
        SearchOutcome; ``coloring`` is set when found
    """
    budget = node_budget if node_budget is not None else settings.oracle_node_budget
    seconds = time_budget if time_budget is not None else settings.oracle_time_budget
    deadline = time.monotonic() + seconds
    n = g.n
    if n == 0:
        return SearchOutcome("found", 0, VertexColoring(()))
    if x < 1:
        return SearchOutcome("infeasible", 0)

    adj = [tuple(a) for a in g.adjacency]
    degree = [len(a) for a in adj]
    color = [-1] * n
    sat = [[0] * x for _ in range(n)]
    satc = [0] * n

    symmetric = not forbidden
    if forbidden:
        for v, cols in forbidden.items():
            for c in cols:
                if 1 <= c <= x and sat[v][c - 1] == 0:
                    sat[v][c - 1] = 1
                    satc[v] += 1

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in adj[v]:
            row = sat[u]
            if row[c] == 0:
                satc[u] += 1
            row[c] += 1

    def unassign(v: int) -> None:
        c = color[v]
        color[v] = -1
        for u in adj[v]:
            row = sat[u]
            row[c] -= 1
            if row[c] == 0:
                satc[u] -= 1

    def pick() -> int:
        best, best_sat, best_deg = -1, -1, -1
        for v in range(n):
            if color[v] >= 0:
                continue
            s = satc[v]
            if s > best_sat or (s == best_sat and degree[v] > best_deg):
                best, best_sat, best_deg = v, s, degree[v]
        return best

    # frames: [vertex, next color to try, highest color index in use before this vertex]
    stack: list[list[int]] = []
    nodes = 0
    colored = 0
    highest = -1
    while True:
        if colored == n:
            result = VertexColoring(tuple(c + 1 for c in color))
            logger.debug("Colorable with %d colors after %d nodes", x, nodes)
            return SearchOutcome("found", nodes, result)
        nodes += 1
        if nodes > budget or (nodes % _CLOCK_INTERVAL == 0 and time.monotonic() > deadline):
            logger.debug("Colorability search at %d colors stopped after %d nodes", x, nodes)
            return SearchOutcome("budget-exceeded", nodes)
        stack.append([pick(), 0, highest])

        while True:
            if not stack:
                logger.debug("Not colorable with %d colors (%d nodes)", x, nodes)
                return SearchOutcome("infeasible", nodes)
            frame = stack[-1]
            v, start, before = frame
            if color[v] >= 0:
                unassign(v)
                colored -= 1
            limit = min(before + 1, x - 1) if symmetric else x - 1
            row = sat[v]
            chosen = next((c for c in range(start, limit + 1) if row[c] == 0), -1)
            if chosen < 0:
                stack.pop()
                continue
            frame[1] = chosen + 1
            assign(v, chosen)
            colored += 1
            highest = max(before, chosen)
            break


def enumerate_colorings(
    g: Graph, x: int, limit: int | None = None
) -> Iterator[VertexColoring]:
    """Yield every proper coloring with at most x colors, colors in first-use order.

    Colorings that differ only by renaming colors are yielded once. Vertices are assigned in
    index order, so this is meant for small graphs.
    """
    n = g.n
    if n == 0:
        yield VertexColoring(())
        return
    earlier = [tuple(u for u in g.adjacency[v] if u < v) for v in range(n)]
    colors = [-1] * n
    next_color = [0] * n
    highest = [-1] * (n + 1)
    count = 0
    v = 0
    while v >= 0:
        if v == n:
            yield VertexColoring(tuple(c + 1 for c in colors))
            count += 1
            if limit is not None and count >= limit:
                return
            v -= 1
            continue
        top = min(highest[v] + 1, x - 1)
        c = next_color[v]
        while c <= top and any(colors[u] == c for u in earlier[v]):
            c += 1
        if c > top:
            next_color[v] = 0
            v -= 1
            continue
        colors[v] = c
        next_color[v] = c + 1
        highest[v + 1] = max(highest[v], c)
        v += 1
