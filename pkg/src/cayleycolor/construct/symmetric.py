"""Type I total coloring of C(S_n, {(1,2), sigma, sigma^-1}) for 3 | n.

The sigma = (1,...,n) edges split the graph into n-cycles, one per left coset of <sigma>;
the (1,2) edges form a perfect matching between them. The matching takes color 4 and every
cycle is 3-total-colored with colors 1..3 along its walk x, x*sigma, x*sigma^2, ... Each coset
picks one of the six arrangements of the three colors so that no matching edge joins two
vertices of the same color.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..chroma.models import EdgeColoring, TotalColorMatrix, VertexColoring
from ..chroma.verify import verify_total
from ..config import settings
from ..exceptions import InvalidParameterError, SearchExhaustedError
from ..graphcore import Edge, Graph, cayley_group, edge_key
from ..permcore import (
    Permutation,
    compose,
    coset_decompose,
    enumerate_group,
    from_cycles,
    inverse,
    long_cycle,
)
from .base import Construction, ensure_verified

logger = logging.getLogger(__name__)

# Rotations and reflections of the palette along a coset cycle. Rotations alone leave
# n = 3 without a solution.
ARRANGEMENTS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
ROTATIONS = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
MATCHING_COLOR = 4

Arrangements = Sequence[tuple[int, int, int]]


def sym_generators(n: int) -> list[Permutation]:
    """{(1,2), (1,2,...,n), (1,n,...,2)}."""
    sigma = long_cycle(n)
    return [from_cycles(n, [[1, 2]]), sigma, inverse(sigma)]


@dataclass(frozen=True)
class _Link:
    """A matching edge seen from one coset: the other coset and both positions mod 3."""

    other: int
    here: int
    there: int


class _ArrangementSearch:
    """Smallest-domain-first backtracking with forward checking over coset arrangements."""

    def __init__(
        self, links: list[list[_Link]], node_budget: int, arrangements: Arrangements
    ) -> None:
        self.links = links
        self.node_budget = node_budget
        self.arrangements = arrangements
        self.nodes = 0
        self.domains = [set(range(len(arrangements))) for _ in links]
        self.values = [-1] * len(links)

    def _clash(self, a: int, link: _Link, b: int) -> bool:
        return self.arrangements[a][link.here] == self.arrangements[b][link.there]

    def solve(self) -> bool:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchExhaustedError(
                f"coset arrangement search exceeded {self.node_budget} nodes", nodes=self.nodes
            )
        open_cosets = [c for c, v in enumerate(self.values) if v < 0]
        if not open_cosets:
            return True
        coset = min(open_cosets, key=lambda c: len(self.domains[c]))
        for a in sorted(self.domains[coset]):
            self.values[coset] = a
            removed: list[tuple[int, int]] = []
            dead = False
            for link in self.links[coset]:
                b = self.values[link.other]
                if b >= 0:
                    dead = dead or self._clash(a, link, b)
                    continue
                for w in sorted(self.domains[link.other]):
                    if self._clash(a, link, w):
                        self.domains[link.other].discard(w)
                        removed.append((link.other, w))
                if not self.domains[link.other]:
                    dead = True
            if not dead and self.solve():
                return True
            for other, w in removed:
                self.domains[other].add(w)
            self.values[coset] = -1
        return False


def total_color_sym(
    n: int, *, search_budget: int | None = None, arrangements: Arrangements = ARRANGEMENTS
) -> Construction[TotalColorMatrix]:
    """Total coloring of C(S_n, {(1,2), sigma, sigma^-1}) with 4 = Delta+1 colors.

    ``arrangements`` are the palette orders a coset may take; the default needs reflections
    as well as rotations.

    Raises:
        InvalidParameterError: n not divisible by 3
        GroupBudgetError: n above the group budget
        SearchExhaustedError: no arrangement per coset separates the matching endpoints
        VerificationError: the assembled matrix is improper
    """
    if n < 3 or n % 3:
        raise InvalidParameterError(f"n must be a positive multiple of 3, got {n}")
    elements = enumerate_group("symmetric", n)
    gens = sym_generators(n)
    transposition, sigma = gens[0], gens[1]
    g: Graph = cayley_group(elements, gens)
    index = elements.index_map

    cosets = coset_decompose(elements, sigma, side="left", subgroup="cyclic")
    coset_of = [0] * len(elements)
    position = [0] * len(elements)
    for c, coset in enumerate(cosets):
        for p, x in enumerate(coset.elements):
            coset_of[index[x]] = c
            position[index[x]] = p

    links: list[list[_Link]] = [[] for _ in cosets]
    matching: list[Edge] = []
    for i, x in enumerate(elements):
        j = index[compose(x, transposition)]
        if i < j:
            matching.append((i, j))
            pi, pj = position[i] % 3, position[j] % 3
            links[coset_of[i]].append(_Link(coset_of[j], pi, pj))
            links[coset_of[j]].append(_Link(coset_of[i], pj, pi))

    search = _ArrangementSearch(
        links, search_budget or settings.search_node_budget, arrangements
    )
    if not search.solve():
        logger.warning("No coset arrangement separates the matching for n=%d", n)
        raise SearchExhaustedError(
            f"no arrangement of the {len(cosets)} cosets works for n={n}", nodes=search.nodes
        )
    logger.debug("Arranged %d cosets in %d search nodes", len(cosets), search.nodes)

    vertex = [0] * len(elements)
    edges: dict[Edge, int] = {e: MATCHING_COLOR for e in matching}
    for c, coset in enumerate(cosets):
        arrangement = arrangements[search.values[c]]
        walk = [index[x] for x in coset.elements]
        for p, v in enumerate(walk):
            vertex[v] = arrangement[p % 3] + 1
            edges[edge_key(v, walk[(p + 1) % n])] = arrangement[(p + 2) % 3] + 1

    matrix = TotalColorMatrix.from_colorings(VertexColoring(tuple(vertex)), EdgeColoring(edges))
    report = ensure_verified(verify_total(g, matrix), f"total coloring of C(S_{n}, S)")
    notes = {"cosets": len(cosets), "search_nodes": search.nodes}
    return Construction("thm1", g, matrix, report, notes)
