"""Colorings of C(A_n, S), S = {(1,2,3), (1,3,2), c, c^-1}.

c is (2,3,...,n) for even n and (1,2,...,n) for odd n.

Vertex colorings are lifted from A_{n-1}: every element h of A_n is r * g for one left coset
representative r of the stabilizer of n and one g fixing n, and h takes g's color shifted by
the offset of its coset. The 3-cycle edges stay inside a coset, where they are base edges.
The total coloring uses an equitable 3-coloring whose cross-class graphs are 2-regular; when no such
coloring is at hand it falls back to exact search.
"""

import dataclasses
import itertools
import logging
from dataclasses import dataclass
from functools import cache

import numpy as np

from ..chroma.models import EdgeColoring, TotalColorMatrix, VertexColoring, is_equitable
from ..chroma.verify import verify_total, verify_vertex
from ..config import settings
from ..exceptions import InvalidParameterError, SearchExhaustedError
from ..graphcore import Edge, Graph, cayley_group, edge_key
from ..oracle.search import colorable, enumerate_colorings
from ..oracle.transforms import total_graph
from ..permcore import (
    GroupElements,
    Permutation,
    compose,
    coset_decompose,
    enumerate_group,
    from_cycles,
    inverse,
    long_cycle,
)
from .base import Construction, ensure_verified
from .repair import tabu_recolor

logger = logging.getLogger(__name__)

LEFTOVER_COLORS = (4, 5)


def alt_generators(n: int) -> list[Permutation]:
    if n < 3:
        raise InvalidParameterError(f"alternating Cayley graphs need n >= 3, got {n}")
    c = long_cycle(n, start=2) if n % 2 == 0 else long_cycle(n)
    gens = [from_cycles(n, [[1, 2, 3]]), from_cycles(n, [[1, 3, 2]]), c, inverse(c)]
    return list(dict.fromkeys(gens))


def alt_graph(n: int) -> Graph:
    return cayley_group(enumerate_group("alternating", n), alt_generators(n))


def literal_shift_plan(n: int) -> tuple[int, ...]:
    """Offsets per coset in representative order; the principal coset never moves.

    Even n: 1, 2, 1, 2, ... over the tau-power cosets and 0 on L. Odd n: 1, 2, 0, 1, 2, 0, ...
    with the last coset at 1 when 3 | n.
    """
    if n % 2 == 0:
        return (0, *(1 if i % 2 else 2 for i in range(1, n - 1)), 0)
    plan = [0, *(i % 3 for i in range(1, n))]
    if n % 3 == 0:
        plan[-1] = 1
    return tuple(plan)


@dataclass(frozen=True)
class LiftFrame:
    """Left cosets r*H of the stabilizer H of n, and the A_{n-1} index of every element.

    An element h in coset r*H is r*g for one g fixing n; ``base_index`` locates g in A_{n-1}.
    """

    n: int
    elements: GroupElements
    base_elements: GroupElements
    labels: tuple[str, ...]
    coset_of: np.ndarray
    base_index: np.ndarray

    @property
    def cosets(self) -> int:
        return len(self.labels)


@cache
def lift_frame(n: int) -> LiftFrame:
    elements = enumerate_group("alternating", n)
    base_elements = enumerate_group("alternating", n - 1)
    tau = alt_generators(n)[2]
    cosets = coset_decompose(elements, tau, side="left", subgroup="stabilizer")
    index = elements.index_map
    last = n - 1
    coset_of = np.empty(len(elements), dtype=np.int64)
    base_index = np.empty(len(elements), dtype=np.int64)
    for i, coset in enumerate(cosets):
        r_inv = inverse(coset.representative)
        for h in coset.elements:
            g = compose(r_inv, h)
            coset_of[index[h]] = i
            base_index[index[h]] = base_elements.index(Permutation(g.images[:last]))
    labels = tuple(c.label for c in cosets)
    return LiftFrame(n, elements, base_elements, labels, coset_of, base_index)


def _edge_array(g: Graph) -> np.ndarray:
    return np.array(g.sorted_edges, dtype=np.int64).reshape(-1, 2)


def lift_alt_coloring(
    n: int,
    base: VertexColoring,
    *,
    seed: int | None = None,
    search_budget: int | None = None,
    repair_iterations: int | None = None,
) -> Construction[VertexColoring]:
    """Lift a proper coloring of C(A_{n-1}, S) to C(A_n, S) with the same number of colors.

    Stages, first success wins: the literal shift plan, every offset plan in lexicographic
    order with the principal coset at 0, then tabu repair from the literal-plan coloring.
    ``notes`` records the stage, the plan and how many vertices the repair changed.

    Raises:
        InvalidParameterError: n < 5 or the base coloring is improper or too small
        SearchExhaustedError: the repair ran out of moves
        VerificationError: the lifted coloring is improper
    """
    if n < 5:
        raise InvalidParameterError(f"lifting needs n >= 5, got {n}")
    frame = lift_frame(n)
    base_graph = cayley_group(frame.base_elements, alt_generators(n - 1))
    base_report = verify_vertex(base_graph, base)
    if not base_report.proper:
        raise InvalidParameterError(f"base coloring is improper: {base_report.detail}")
    x = base.num_colors
    if x < 3:
        raise InvalidParameterError(f"base coloring needs at least 3 colors, got {x}")
    if set(base.colors) != set(range(1, x + 1)):
        base = base.normalized()

    g = alt_graph(n)
    edges = _edge_array(g)
    base_colors = np.array(base.colors, dtype=np.int64)[frame.base_index] - 1

    def apply(plan: tuple[int, ...]) -> np.ndarray:
        return (base_colors + np.array(plan, dtype=np.int64)[frame.coset_of]) % x

    def is_proper(colors: np.ndarray) -> bool:
        return not np.any(colors[edges[:, 0]] == colors[edges[:, 1]])

    def finish(colors: np.ndarray, notes: dict) -> Construction[VertexColoring]:
        coloring = VertexColoring(tuple(int(c) + 1 for c in colors))
        report = ensure_verified(verify_vertex(g, coloring), f"lifted coloring of C(A_{n}, S)")
        if notes["stage"] == "repair":
            note = f"stage=repair, {notes['recolored']} recolored"
            report = dataclasses.replace(report, note=note)
        return Construction("thm2-lift", g, coloring, report, notes)

    literal = literal_shift_plan(n)
    literal_colors = apply(literal)
    if is_proper(literal_colors):
        return finish(literal_colors, {"stage": "literal", "plan": list(literal), "recolored": 0})

    budget = search_budget or settings.search_node_budget
    logger.info("Literal shift plan fails for A_%d; searching offset plans", n)
    tried = 0
    for tail in itertools.product(range(x), repeat=frame.cosets - 1):
        tried += 1
        if tried > budget:
            break
        plan = (0, *tail)
        colors = apply(plan)
        if is_proper(colors):
            notes = {
                "stage": "plan-search",
                "plan": list(plan),
                "recolored": 0,
                "plans_tried": tried,
            }
            return finish(colors, notes)

    logger.info("No offset plan works for A_%d after %d plans; repairing", n, tried)
    start = VertexColoring(tuple(int(c) + 1 for c in literal_colors))
    repaired = tabu_recolor(g, start, x, seed=seed, iterations=repair_iterations)
    notes = {
        "stage": "repair",
        "plan": list(literal),
        "recolored": repaired.recolored,
        "plans_tried": tried,
        "repair_moves": repaired.iterations,
    }
    return finish(np.array(repaired.coloring.colors, dtype=np.int64) - 1, notes)


def alt_three_coloring(n: int, *, seed: int | None = None) -> VertexColoring:
    """A proper 3-coloring of C(A_n, S): the first exhaustive one at n = 4, lifted upward."""
    if n < 4:
        raise InvalidParameterError(f"the coloring chain starts at n = 4, got {n}")
    coloring = next(enumerate_colorings(alt_graph(4), 3))
    for m in range(5, n + 1):
        coloring = lift_alt_coloring(m, coloring, seed=seed).coloring
    return coloring


def hypothesis_failure(g: Graph, coloring: VertexColoring) -> str | None:
    """Why ``coloring`` cannot seed the matching construction, or None if it can.

    It must be an equitable 3-coloring in which every vertex has exactly two neighbours in
    each of the other two classes.
    """
    if coloring.num_colors != 3:
        return f"{coloring.num_colors} colors instead of 3"
    if not is_equitable(coloring) or g.n % 3:
        return "color classes are not equal thirds"
    for v in range(g.n):
        counts = {c: 0 for c in set(coloring.colors) - {coloring.colors[v]}}
        for u in g.adjacency[v]:
            if coloring.colors[u] in counts:
                counts[coloring.colors[u]] += 1
        if any(k != 2 for k in counts.values()):
            return f"vertex {v} does not have two neighbours in each other class"
    return None


def _cycles(edges: list[Edge]) -> list[list[int]]:
    """Vertex sequences of the cycles of a 2-regular edge set."""
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    seen: set[int] = set()
    cycles = []
    for v in sorted(nbrs):
        if v in seen:
            continue
        walk = [v]
        seen.add(v)
        cur = v
        while (nxt := next((u for u in sorted(nbrs[cur]) if u not in seen), None)) is not None:
            walk.append(nxt)
            seen.add(nxt)
            cur = nxt
        cycles.append(walk)
    return cycles


def _alternate(cycle: list[int], parity: int) -> list[Edge]:
    return [
        edge_key(cycle[t], cycle[(t + 1) % len(cycle)])
        for t in range(len(cycle))
        if t % 2 == parity
    ]


def _matching_total(g: Graph, coloring: VertexColoring, budget: int) -> TotalColorMatrix | None:
    """Color i on class i and on a perfect matching M_i of the other two classes; 4/5 on the rest.

    Tries the per-cycle choices of M_i until the leftover edges form only even cycles.
    """
    palette = sorted(set(coloring.colors))
    cols = coloring.colors
    # (color, cycle) for every cycle of every cross-class graph
    choices: list[tuple[int, list[int]]] = []
    for c in palette:
        cross = [(i, j) for i, j in g.sorted_edges if c not in (cols[i], cols[j])]
        choices += [(c, cyc) for cyc in _cycles(cross)]

    for tried, pick in enumerate(itertools.product((0, 1), repeat=len(choices))):
        if tried >= budget:
            logger.info("Matching choice search stopped after %d combinations", tried)
            return None
        edges: dict[Edge, int] = {}
        for (c, cyc), parity in zip(choices, pick, strict=True):
            for e in _alternate(cyc, parity):
                edges[e] = palette.index(c) + 1
        leftover = [e for e in g.sorted_edges if e not in edges]
        cycles = _cycles(leftover)
        if sum(len(cyc) for cyc in cycles) != len(leftover) or any(len(c) % 2 for c in cycles):
            continue
        for cyc in cycles:
            for parity, color in enumerate(LEFTOVER_COLORS):
                for e in _alternate(cyc, parity):
                    edges[e] = color
        vertex = VertexColoring(tuple(palette.index(c) + 1 for c in cols))
        logger.debug("Matching choice found after %d combinations", tried + 1)
        return TotalColorMatrix.from_colorings(vertex, EdgeColoring(edges))
    return None


def _exact_total(g: Graph, x: int) -> TotalColorMatrix:
    size = g.n + g.edge_count
    if size > settings.oracle_max_elements:
        raise SearchExhaustedError(
            f"total graph of {size} elements exceeds oracle_max_elements"
        )
    tg, _ = total_graph(g)
    out = colorable(tg, x)
    if not out.found or out.coloring is None:
        raise SearchExhaustedError(
            f"exact total coloring with {x} colors: {out.status}", nodes=out.nodes
        )
    logger.debug("Exact total coloring found in %d nodes", out.nodes)
    colors = out.coloring.colors
    vertex = VertexColoring(colors[: g.n])
    edge = EdgeColoring({e: colors[g.n + k] for k, e in enumerate(g.sorted_edges)})
    return TotalColorMatrix.from_colorings(vertex, edge)


def total_color_alt(
    n: int, *, seed: int | None = None, search_budget: int | None = None
) -> Construction[TotalColorMatrix]:
    """Total coloring of C(A_n, S) with 5 = Delta+1 colors.

    n = 4 uses an exhaustively found 3-coloring that meets the matching hypothesis. Larger n
    lift a 3-coloring; if it misses the hypothesis the failure is logged and an exact search
    on the total graph supplies the coloring. ``notes["path"]`` names the route taken.

    Raises:
        InvalidParameterError: n < 4
        SearchExhaustedError: the exact fallback is out of budget or infeasible
        VerificationError: the matrix is improper
    """
    if n < 4:
        raise InvalidParameterError(f"total coloring of C(A_n, S) needs n >= 4, got {n}")
    budget = search_budget or settings.search_node_budget
    g = alt_graph(n)
    if n == 4:
        candidates = list(enumerate_colorings(g, 3))
    else:
        candidates = [alt_three_coloring(n, seed=seed)]

    failures = []
    for coloring in candidates:
        why = hypothesis_failure(g, coloring)
        if why is None:
            matrix = _matching_total(g, coloring, budget)
            if matrix is not None:
                report = ensure_verified(verify_total(g, matrix), f"total coloring of A_{n}")
                return Construction("cor-alt-total", g, matrix, report, {"path": "matching"})
            why = "no matching choice leaves only even cycles"
        failures.append(why)

    logger.warning("Matching hypothesis fails for A_%d (%s); using exact search", n, failures[0])
    matrix = _exact_total(g, g.max_degree + 1)
    report = ensure_verified(verify_total(g, matrix), f"total coloring of A_{n}")
    notes = {"path": "exact-fallback", "hypothesis": failures[0]}
    return Construction("cor-alt-total", g, matrix, report, notes)
