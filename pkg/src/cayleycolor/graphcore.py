"""Graphs with canonical vertex indexing and the Cayley, power-of-cycle and circulant builders."""

import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import networkx as nx

from .exceptions import GeneratorSetError, GraphError
from .gyrocore import GyroTable, gyro_inverse
from .permcore import GroupElements, Permutation, compose, format_cycles, inverse

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def edge_key(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise GraphError(f"edge ({i}, {j}) is a loop, unsorted or out of range")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError(f"{len(self.labels)} labels for {self.n} vertices")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        """Build from unordered pairs; duplicates collapse, loops are rejected."""
        normalized = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            normalized.add(edge_key(i, j))
        return cls(n=n, edges=frozenset(normalized), labels=tuple(labels) if labels else None)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def has_edge(self, i: int, j: int) -> bool:
        return edge_key(i, j) in self.edges

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Graph":
        try:
            return cls.from_edges(int(data["n"]), data["edges"], data.get("labels"))
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise GraphError(f"malformed graph JSON: {e}") from e

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges)
        return g


def cayley_group(elements: GroupElements, gens: Sequence[Permutation]) -> Graph:
    """C(G, S): edge {x, x*s} for every element x and generator s.

    Raises:
        GeneratorSetError: identity in S, a generator outside the group, or S not
            closed under inverse
    """
    gen_set = set(gens)
    for s in gen_set:
        if s.is_identity:
            raise GeneratorSetError("the identity cannot be a generator")
        if s not in elements:
            raise GeneratorSetError(f"generator {s} is not a group element")
        if inverse(s) not in gen_set:
            raise GeneratorSetError(f"generating set is not symmetric: {inverse(s)} missing")
    index = elements.index_map
    edges = {
        edge_key(i, index[compose(x, s)]) for i, x in enumerate(elements) for s in gen_set
    }
    labels = tuple(format_cycles(x) for x in elements)
    g = Graph(n=len(elements), edges=frozenset(edges), labels=labels)
    logger.debug("Cayley graph of %s group: %d vertices, %d edges", elements.kind, g.n, len(edges))
    return g


def cayley_gyro(t: GyroTable, gens: Sequence[int]) -> Graph:
    """C(Gamma, S) with left-translation adjacency: edge {x, s (+) x}.

    Raises:
        GeneratorSetError: 0 in S, a label out of range, or S not closed under left inverse
    """
    gen_set = set(gens)
    for s in gen_set:
        if not 0 < s < t.order:
            raise GeneratorSetError(f"generator {s} must be a non-zero label below {t.order}")
        if gyro_inverse(t, s) not in gen_set:
            raise GeneratorSetError(f"generating set is not symmetric: inverse of {s} missing")
    edges = {edge_key(x, t.op(s, x)) for x in range(t.order) for s in gen_set}
    return Graph(n=t.order, edges=frozenset(edges), labels=tuple(str(x) for x in range(t.order)))


def circulant(n: int, connection: Iterable[int]) -> Graph:
    """Graph on Z_n with edge {i, j} iff (j - i) mod n is in ``connection``.

    Raises:
        GeneratorSetError: 0 in the connection set or the set is not symmetric mod n
    """
    if n < 1:
        raise GraphError("circulant needs at least one vertex")
    conn = {c % n for c in connection}
    if 0 in conn:
        raise GeneratorSetError("connection set must exclude 0")
    for c in conn:
        if (-c) % n not in conn:
            raise GeneratorSetError(f"connection set is not symmetric mod {n}: {-c % n} missing")
    edges = {edge_key(i, (i + c) % n) for i in range(n) for c in conn}
    return Graph(n=n, edges=frozenset(edges))


def power_connection(n: int, k: int) -> set[int]:
    return {d % n for d in range(1, k + 1)} | {(-d) % n for d in range(1, k + 1)}


def power_cycle(n: int, k: int) -> Graph:
    """C_n^k, the k-th power of the n-cycle.

    Raises:
        GraphError: k outside 1 <= k < n/2
    """
    if k < 1 or 2 * k >= n:
        raise GraphError(f"power of cycle needs 1 <= k < n/2, got n={n}, k={k}")
    return circulant(n, power_connection(n, k))


def exponent_distribution(
    elements: GroupElements, sigma: Sequence[Permutation], gens: Sequence[Permutation]
) -> tuple[int, ...] | None:
    """Exponents (i_1, ...) with gens[j] = pi^(i_j), pi the product of ``sigma`` in order.

    Returns None when some generator is not a power of pi.

    Raises:
        GeneratorSetError: sigma is not a subset of gens, or contains non-elements
    """
    if not sigma:
        raise GeneratorSetError("sigma must be non-empty")
    if not set(sigma) <= set(gens):
        raise GeneratorSetError("sigma must be a subset of the generating set")
    for s in gens:
        if s not in elements:
            raise GeneratorSetError(f"generator {s} is not a group element")
    pi = sigma[0]
    for s in sigma[1:]:
        pi = compose(pi, s)
    powers: dict[Permutation, int] = {}
    p = Permutation.identity(pi.degree)
    for e in range(pi.order):
        powers.setdefault(p, e)
        p = compose(p, pi)
    exps = []
    for s in gens:
        if s not in powers:
            return None
        exps.append(powers[s])
    return tuple(exps)


def is_isomorphism(g1: Graph, g2: Graph, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` (vertex i of g1 -> mapping[i] of g2) maps edges onto edges."""
    if g1.n != g2.n or len(mapping) != g1.n or sorted(mapping) != list(range(g1.n)):
        return False
    if g1.edge_count != g2.edge_count:
        return False
    return all(edge_key(mapping[i], mapping[j]) in g2.edges for i, j in g1.edges)


def _check_symmetric(n: int, residues: Iterable[int]) -> set[int]:
    conn = {r % n for r in residues}
    if 0 in conn or any((-r) % n not in conn for r in conn):
        raise GeneratorSetError(f"residue set {sorted(conn)} is not symmetric mod {n} without 0")
    return conn


def iso_multiplier(n: int, s1: Iterable[int], s2: Iterable[int]) -> int | None:
    """A unit a with a*S1 = S2 mod n whose map x -> a*x is a checked isomorphism, else None."""
    conn1 = _check_symmetric(n, s1)
    conn2 = _check_symmetric(n, s2)
    if len(conn1) != len(conn2):
        return None
    for a in range(1, n):
        if math.gcd(a, n) != 1 or {(a * s) % n for s in conn1} != conn2:
            continue
        mapping = [(a * x) % n for x in range(n)]
        if not is_isomorphism(circulant(n, conn1), circulant(n, conn2), mapping):
            raise GraphError(f"multiplier {a} failed edge-set validation")
        return a
    return None


def induced(g: Graph, verts: Iterable[int]) -> Graph:
    """Subgraph induced on ``verts``, reindexed in ascending vertex order."""
    chosen = sorted(set(verts))
    for v in chosen:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(chosen)}
    edges = {edge_key(pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos}
    labels = tuple(g.labels[v] for v in chosen) if g.labels is not None else None
    return Graph(n=len(chosen), edges=frozenset(edges), labels=labels)


def is_perfect_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    covered = [0] * g.n
    for e in edges:
        i, j = int(e[0]), int(e[1])
        g._check_vertex(i)
        g._check_vertex(j)
        if not g.has_edge(i, j):
            return False
        covered[i] += 1
        covered[j] += 1
    return all(c == 1 for c in covered)


def is_regular(g: Graph, d: int | None = None) -> bool:
    degrees = {len(a) for a in g.adjacency}
    if len(degrees) > 1:
        return False
    return d is None or not degrees or degrees == {d}


@dataclass(frozen=True)
class RightTranslationAudit:
    """Whether x ~ x (+) s would also give an undirected graph."""

    symmetric: bool
    matchings: dict[int, bool]
    asymmetric_pair: Edge | None = None


def right_translation_audit(t: GyroTable, gens: Sequence[int]) -> RightTranslationAudit:
    """Audit the right-translation reading of the Cayley adjacency for ``gens``.

    ``matchings[s]`` reports, for each involutive generator s, whether x -> x (+) s is a
    fixed-point-free involution.
    """
    gen_set = set(gens)
    arcs = {(x, t.op(x, s)) for x in range(t.order) for s in gen_set}
    asym = next(((x, y) for x, y in sorted(arcs) if (y, x) not in arcs), None)
    matchings: dict[int, bool] = {}
    for s in sorted(gen_set):
        if t.op(s, s) != 0:
            continue
        images = [t.op(x, s) for x in range(t.order)]
        matchings[s] = all(images[y] == x and y != x for x, y in enumerate(images))
    return RightTranslationAudit(symmetric=asym is None, matchings=matchings, asymmetric_pair=asym)
