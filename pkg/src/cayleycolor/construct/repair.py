"""Tabu local search for proper vertex colorings with a fixed number of colors.

A vertex is in conflict when a neighbour, or its own forbidden list, holds its color. Each
step moves one conflicting vertex to the color that lowers the conflict count the most;
the color it leaves is tabu for it for a while. Neighbour color counts are kept in a
vertices-by-colors array so a move costs one row update per neighbour.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from ..chroma.models import VertexColoring
from ..config import settings
from ..exceptions import InvalidParameterError, SearchExhaustedError
from ..graphcore import Graph

logger = logging.getLogger(__name__)

# tabu tenure = TENURE_FACTOR * conflicts + a random 0..TENURE_SPREAD-1
TENURE_FACTOR = 0.6
TENURE_SPREAD = 10


@dataclass(frozen=True)
class RepairResult:
    coloring: VertexColoring
    iterations: int
    recolored: int


def tabu_recolor(
    g: Graph,
    colors: VertexColoring,
    x: int,
    *,
    seed: int | None = None,
    iterations: int | None = None,
    forbidden: Mapping[int, Iterable[int]] | None = None,
) -> RepairResult:
    """Repair ``colors`` into a proper coloring with colors 1..x.

    Args:
        g: Graph to color
        colors: Starting coloring, colors in 1..x
        x: Number of colors
        seed: Random seed for tie-breaking and tenure (default: settings.seed)
        iterations: Move budget (default: settings.repair_iterations)
        forbidden: Per-vertex colors the vertex may not keep

    Returns:
        RepairResult with the proper coloring, moves made and vertices changed

    Raises:
        InvalidParameterError: length mismatch or colors outside 1..x
        SearchExhaustedError: conflicts remain after the move budget
    """
    n = g.n
    if colors.n != n:
        raise InvalidParameterError(f"{colors.n} colors for {n} vertices")
    if x < 1 or any(not 1 <= c <= x for c in colors.colors):
        raise InvalidParameterError(f"starting colors must lie in 1..{x}")
    budget = iterations if iterations is not None else settings.repair_iterations
    rng = np.random.default_rng(settings.seed if seed is None else seed)

    c = np.array(colors.colors, dtype=np.int64) - 1
    start = c.copy()
    neighbors = [np.fromiter(g.adjacency[v], dtype=np.int64) for v in range(n)]

    # gamma[v, k]: neighbours of v colored k, plus 1 if k is forbidden at v
    gamma = np.zeros((n, x), dtype=np.int64)
    for i, j in g.edges:
        gamma[i, c[j]] += 1
        gamma[j, c[i]] += 1
    if forbidden:
        for v, cols in forbidden.items():
            for k in set(cols):
                if 1 <= k <= x:
                    gamma[v, k - 1] += 1
    vertices = np.arange(n)
    # gamma counts a monochromatic edge from both ends, a forbidden hit once
    edge_conflicts = sum(1 for i, j in g.edges if c[i] == c[j])
    f = int(gamma[vertices, c].sum()) - edge_conflicts

    tabu = np.zeros((n, x), dtype=np.int64)
    blocked = np.iinfo(np.int64).max
    it = 0
    while f > 0 and it < budget:
        conflicted = np.flatnonzero(gamma[vertices, c] > 0)
        cur = c[conflicted]
        delta = gamma[conflicted] - gamma[conflicted, cur][:, None]
        allowed = (tabu[conflicted] <= it) | (f + delta == 0)
        allowed[np.arange(len(conflicted)), cur] = False
        masked = np.where(allowed, delta, blocked)
        best = masked.min()
        it += 1
        if best == blocked:
            continue
        candidates = np.argwhere(masked == best)
        row, new = candidates[rng.integers(len(candidates))]
        v = int(conflicted[row])
        old = int(c[v])
        tabu[v, old] = it + int(TENURE_FACTOR * f) + int(rng.integers(TENURE_SPREAD))
        nbrs = neighbors[v]
        gamma[nbrs, old] -= 1
        gamma[nbrs, new] += 1
        c[v] = new
        f += int(best)

    if f > 0:
        logger.info("Tabu repair left %d conflicts after %d moves", f, it)
        raise SearchExhaustedError(f"{f} conflicts remain after {it} repair moves", nodes=it)
    recolored = int(np.count_nonzero(c != start))
    logger.debug("Tabu repair finished in %d moves, %d vertices recolored", it, recolored)
    return RepairResult(VertexColoring(tuple(int(k) + 1 for k in c)), it, recolored)
