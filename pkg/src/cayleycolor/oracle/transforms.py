"""Line and total graphs, materialized with an element map back to the source graph."""

from ..graphcore import Edge, Graph, edge_key


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Line graph; vertex i stands for the i-th edge of ``g`` in sorted order."""
    edges = g.sorted_edges
    index = {e: i for i, e in enumerate(edges)}
    out: set[Edge] = set()
    for v in range(g.n):
        incident = sorted(index[edge_key(v, u)] for u in g.adjacency[v])
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                out.add((incident[a], incident[b]))
    return Graph(n=len(edges), edges=frozenset(out)), edges


def total_graph(g: Graph) -> tuple[Graph, tuple[int | Edge, ...]]:
    """Total graph; elements are the vertices of ``g`` followed by its sorted edges.

    Two elements are adjacent when they are adjacent vertices, incident edges, or an edge
    and one of its endpoints.
    """
    n = g.n
    edges = g.sorted_edges
    line, _ = line_graph(g)
    out: set[Edge] = set(g.edges)
    out.update((n + a, n + b) for a, b in line.edges)
    for k, (i, j) in enumerate(edges):
        out.add((i, n + k))
        out.add((j, n + k))
    elements: tuple[int | Edge, ...] = (*range(n), *edges)
    return Graph(n=n + len(edges), edges=frozenset(out)), elements
