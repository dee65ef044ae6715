"""Colorings of Cayley graphs on the gyrogroups of order 2m.

For S = S1 + {m/2 + m} with S1 a symmetric subset of Z_m, the graph is two copies of
circulant(m, S1), one on T1 = {0..m-1} and one on T2 = {m..2m-1}, joined by the perfect
matching x ~ (m/2 + m) (+) x. T1 takes an optimal coloring of the circulant; T2 takes the
same coloring with its palette permuted so that no matching edge is monochromatic.
"""

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..chroma.models import EdgeColoring, TotalColorMatrix, VertexColoring
from ..chroma.verify import verify_edge, verify_total, verify_vertex
from ..config import settings
from ..exceptions import (
    GeneratorSetError,
    InvalidParameterError,
    SearchExhaustedError,
    VerificationError,
)
from ..graphcore import (
    Edge,
    Graph,
    cayley_gyro,
    circulant,
    edge_key,
    induced,
    is_perfect_matching,
    power_connection,
)
from ..gyrocore import GyroTable
from ..oracle.exact import chromatic_index, chromatic_number, total_chromatic_number
from ..oracle.search import colorable
from ..oracle.transforms import total_graph
from .base import Construction, ensure_verified
from .misra_gries import misra_gries_edge_coloring
from .power_cycle import power_cycle_stride_coloring

logger = logging.getLogger(__name__)


def gyro_generators(m: int, k: int) -> list[int]:
    """{1..k} + {m-k..m-1} + {m/2 + m}."""
    if m < 4 or m % 2:
        raise InvalidParameterError(f"m must be even and at least 4, got {m}")
    if k < 1 or 2 * k >= m:
        raise InvalidParameterError(f"k must satisfy 1 <= k < m/2, got k={k} for m={m}")
    return sorted(power_connection(m, k)) + [m // 2 + m]


@dataclass(frozen=True)
class _Split:
    """A generating set split at m: circulant residues and reflection labels."""

    residues: list[int]
    reflections: list[int]


def _split(t: GyroTable, gens: Sequence[int]) -> _Split:
    m = t.m
    residues = sorted({s for s in gens if s < m})
    reflections = sorted({s for s in gens if s >= m})
    for s in reflections:
        if t.op(s, s) != 0:
            raise GeneratorSetError(f"{s} is not a gyro-reflection (s (+) s != 0)")
    return _Split(residues, reflections)


def _translate_split(t: GyroTable, gens: Sequence[int]) -> list[int]:
    """Residues S1 of a generating set S1 + {m/2 + m}."""
    split = _split(t, gens)
    if split.reflections != [t.reflection]:
        raise GeneratorSetError(
            f"expected the single reflection {t.reflection}, got {split.reflections}"
        )
    if not split.residues:
        raise GeneratorSetError("S1 must contain at least one residue")
    return split.residues


def _partners(t: GyroTable) -> list[int]:
    """T2 residue matched to each x in T1 by the reflection."""
    return [t.op(t.reflection, x) - t.m for x in range(t.m)]


def _power_k(m: int, residues: list[int]) -> int | None:
    k = len(residues) // 2
    if k >= 1 and 2 * k < m and set(residues) == power_connection(m, k):
        return k
    return None


def _circulant_coloring(
    m: int, residues: list[int], node_budget: int | None
) -> tuple[VertexColoring, int | None, str]:
    """Optimal coloring of circulant(m, S1), its oracle chi if computed, and the method."""
    circ = circulant(m, residues)
    result = chromatic_number(circ, node_budget=node_budget)
    if result.exact and isinstance(result.witness, VertexColoring):
        return result.witness, result.value, "oracle"
    if (k := _power_k(m, residues)) is not None:
        logger.info("Oracle out of budget on circulant(%d); using the stride coloring", m)
        return power_cycle_stride_coloring(m, k).coloring, None, "stride"
    raise SearchExhaustedError(f"no optimal coloring of circulant({m}, {residues}) in budget")


def _permuted_copy(
    colors: Sequence[int], partners: list[int], x: int, budget: int
) -> tuple[int, ...] | None:
    """First palette permutation p with p(c[partner(v)]) != c[v] for every v, or None."""
    for tried, perm in enumerate(itertools.permutations(range(1, x + 1))):
        if tried >= budget:
            return None
        if all(perm[colors[partners[v]] - 1] != colors[v] for v in range(len(partners))):
            return perm
    return None


def _t2_graph(g: Graph, m: int) -> Graph:
    return induced(g, range(m, 2 * m))


def gyro_vertex_color(
    t: GyroTable, gens: Sequence[int], *, node_budget: int | None = None
) -> Construction[VertexColoring]:
    """Vertex coloring of C(Gamma, S1 + {m/2 + m}) with chi(circulant(m, S1)) colors.

    ``notes["chi_circulant"]`` is the oracle's chi of the circulant when it was computed.

    Raises:
        GeneratorSetError: S is not S1 plus the single reflection
        SearchExhaustedError: no T2 copy separates the matching within budget
        VerificationError: the coloring is improper
    """
    m = t.m
    residues = _translate_split(t, gens)
    g = cayley_gyro(t, gens)
    c1, chi, method = _circulant_coloring(m, residues, node_budget)
    x = c1.num_colors
    partners = _partners(t)
    t2 = _t2_graph(g, m)
    budget = settings.search_node_budget

    copy = "permutation"
    perm = None
    if t2.edges == circulant(m, residues).edges:
        perm = _permuted_copy(c1.colors, partners, x, budget)
    if perm is not None:
        c2 = tuple(perm[c - 1] for c in c1.colors)
    else:
        logger.info("No palette permutation separates the matching; searching T2 directly")
        copy = "exact"
        forbidden = {partners[v]: [c1.colors[v]] for v in range(m)}
        out = colorable(t2, x, node_budget=node_budget, forbidden=forbidden)
        if not out.found or out.coloring is None:
            raise SearchExhaustedError(
                f"no {x}-coloring of T2 avoids the matching partners ({out.status})",
                nodes=out.nodes,
            )
        c2 = out.coloring.colors

    coloring = VertexColoring(c1.colors + c2)
    report = ensure_verified(verify_vertex(g, coloring), f"vertex coloring of gyro graph m={m}")
    notes = {
        "circulant_method": method,
        "chi_circulant": chi,
        "t2_copy": copy,
        "permutation": list(perm) if perm is not None else None,
        "matches_circulant_chi": chi is None or report.colors_used == chi,
    }
    return Construction("gyro-vertex", g, coloring, report, notes)


def gyro_total_color(
    t: GyroTable, gens: Sequence[int], *, node_budget: int | None = None
) -> Construction[TotalColorMatrix]:
    """Total coloring with chi''(circulant(m, S1)) + 1 colors; the matching gets the extra one.

    That is Delta+1 when the circulant is type I and Delta+2 otherwise.

    Raises:
        GeneratorSetError: S is not S1 plus the single reflection
        SearchExhaustedError: the circulant's total coloring or the T2 copy is out of budget
        VerificationError: the matrix is improper
    """
    m = t.m
    residues = _translate_split(t, gens)
    g = cayley_gyro(t, gens)
    circ = circulant(m, residues)
    result = total_chromatic_number(circ, node_budget=node_budget)
    if not result.exact or not isinstance(result.witness, TotalColorMatrix):
        raise SearchExhaustedError(
            f"total coloring of circulant({m}, {residues}) unavailable: {result.detail}",
            nodes=result.nodes_explored,
        )
    tc = result.witness
    x = tc.num_colors
    v1 = tc.vertex_coloring().colors
    e1 = tc.edge_coloring().colors
    partners = _partners(t)
    t2 = _t2_graph(g, m)

    copy = "permutation"
    perm = None
    if t2.edges == circ.edges:
        perm = _permuted_copy(v1, partners, x, settings.search_node_budget)
    if perm is not None:
        v2 = tuple(perm[c - 1] for c in v1)
        e2 = {e: perm[c - 1] for e, c in e1.items()}
    else:
        logger.info("No palette permutation separates the matching; searching T2 directly")
        copy = "exact"
        tg, _ = total_graph(t2)
        forbidden = {partners[v]: [v1[v]] for v in range(m)}
        out = colorable(tg, x, node_budget=node_budget, forbidden=forbidden)
        if not out.found or out.coloring is None:
            raise SearchExhaustedError(
                f"no {x}-total-coloring of T2 avoids the matching partners ({out.status})",
                nodes=out.nodes,
            )
        v2 = out.coloring.colors[:m]
        e2 = {e: out.coloring.colors[m + k] for k, e in enumerate(t2.sorted_edges)}

    fresh = x + 1
    edges: dict[Edge, int] = dict(e1)
    edges.update({(m + i, m + j): c for (i, j), c in e2.items()})
    edges.update({edge_key(v, m + partners[v]): fresh for v in range(m)})
    matrix = TotalColorMatrix.from_colorings(VertexColoring(v1 + v2), EdgeColoring(edges))
    report = ensure_verified(verify_total(g, matrix), f"total coloring of gyro graph m={m}")
    delta = g.max_degree
    notes = {
        "circulant_total": x,
        "t2_copy": copy,
        "matching_color": fresh,
        "tcc_bound": delta + 2,
        "type_i": report.colors_used <= delta + 1,
    }
    return Construction("gyro-total", g, matrix, report, notes)


def gyro_edge_color(
    t: GyroTable, gens: Sequence[int], *, node_budget: int | None = None
) -> Construction[EdgeColoring]:
    """Edge coloring: one color per reflection matching, a shared palette on both circulants.

    The circulant palette comes from the exact chromatic index when it fits the oracle budget
    and from Misra-Gries otherwise; ``notes["circulant_method"]`` says which.

    Raises:
        GeneratorSetError: a T2 generator is not a gyro-reflection
        VerificationError: a reflection color class is not a perfect matching, or the
            coloring is improper
    """
    m = t.m
    split = _split(t, gens)
    g = cayley_gyro(t, gens)
    circ = circulant(m, split.residues)

    palette: dict[Edge, int] = {}
    method = "edgeless"
    if circ.edge_count:
        result = chromatic_index(circ, node_budget=node_budget)
        if result.exact and isinstance(result.witness, EdgeColoring):
            palette, method = dict(result.witness.colors), "oracle"
        else:
            palette, method = dict(misra_gries_edge_coloring(circ).colors), "misra-gries"
    base = max(palette.values(), default=0)

    edges: dict[Edge, int] = {}
    for (i, j), c in palette.items():
        edges[(i, j)] = c
        edges[(m + i, m + j)] = c
    for k, s in enumerate(split.reflections, start=1):
        matching = {edge_key(x, t.op(s, x)) for x in range(t.order)}
        if not is_perfect_matching(g, matching):
            raise VerificationError(f"reflection {s} does not give a perfect matching")
        for e in matching:
            edges.setdefault(e, base + k)

    coloring = EdgeColoring(edges)
    report = ensure_verified(verify_edge(g, coloring), f"edge coloring of gyro graph m={m}")
    notes = {"circulant_method": method, "verdict": report.bound_class}
    return Construction("gyro-edge", g, coloring, report, notes)
