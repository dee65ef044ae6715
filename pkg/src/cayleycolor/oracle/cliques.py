"""Exact maximum clique by bitset branch and bound with a greedy-coloring bound."""

import logging
from dataclasses import dataclass

from ..config import settings
from ..graphcore import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple[int, ...]
    nodes: int
    exact: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


class _BudgetExceeded(Exception):
    pass


class _CliqueSearch:
    def __init__(self, neighbors: list[int], node_budget: int) -> None:
        self.neighbors = neighbors
        self.node_budget = node_budget
        self.nodes = 0
        self.best: list[int] = []

    def _color_order(self, candidates: int) -> tuple[list[int], list[int]]:
        """Greedy coloring of the candidates; bound[i] is the color of order[i]."""
        order: list[int] = []
        bound: list[int] = []
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            q = uncolored
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~self.neighbors[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                order.append(v)
                bound.append(color)
        return order, bound

    def expand(self, clique: list[int], candidates: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExceeded
        order, bound = self._color_order(candidates)
        for v, b in zip(reversed(order), reversed(bound), strict=True):
            if len(clique) + b <= len(self.best):
                return
            clique.append(v)
            rest = candidates & self.neighbors[v]
            if rest:
                self.expand(clique, rest)
            elif len(clique) > len(self.best):
                self.best = clique.copy()
            clique.pop()
            candidates &= ~(1 << v)


def _masks(g: Graph, complement: bool) -> list[int]:
    full = (1 << g.n) - 1
    masks = []
    for v in range(g.n):
        m = 0
        for u in g.adjacency[v]:
            m |= 1 << u
        masks.append((full & ~m & ~(1 << v)) if complement else m)
    return masks


def _run(g: Graph, complement: bool, node_budget: int | None) -> CliqueResult:
    search = _CliqueSearch(_masks(g, complement), node_budget or settings.oracle_node_budget)
    exact = True
    try:
        if g.n:
            search.expand([], (1 << g.n) - 1)
    except _BudgetExceeded:
        exact = False
    logger.debug("Clique search: best %d after %d nodes", len(search.best), search.nodes)
    return CliqueResult(vertices=tuple(sorted(search.best)), nodes=search.nodes, exact=exact)


def max_clique(g: Graph, node_budget: int | None = None) -> CliqueResult:
    """Largest clique; ``exact`` is False when the budget cut the search short."""
    return _run(g, complement=False, node_budget=node_budget)


def max_independent_set(g: Graph, node_budget: int | None = None) -> CliqueResult:
    return _run(g, complement=True, node_budget=node_budget)
