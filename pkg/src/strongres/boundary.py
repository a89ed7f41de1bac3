"""Maximally distant vertices, the boundary, and the strong resolving graph."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import DistanceMatrix, Graph, graph_to_edge_list, is_connected
from .errors import NotConnectedError


@dataclass(frozen=True)
class SrGraph:
    """Strong resolving graph on the boundary vertices.

    ``graph`` has one vertex per boundary vertex; ``back_map[i]`` is the
    original vertex that SR-vertex ``i`` stands for (ascending).
    """

    graph: Graph
    back_map: tuple[int, ...]

    def to_edge_list(self) -> str:
        mapping = " ".join(f"{i}->{v}" for i, v in enumerate(self.back_map))
        return graph_to_edge_list(self.graph, comments=[f"back_map: {mapping}"])


def is_maximally_distant(d: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    """Whether ``u`` is maximally distant *from* ``v`` (directional)."""
    duv = d[u][v]
    dv = d[v]
    return all(dv[w] <= duv for w in g.adj[u])


def maximally_distant_matrix(g: Graph, d: DistanceMatrix) -> list[list[bool]]:
    return [[u != v and is_maximally_distant(d, g, u, v) for v in range(g.n)]
            for u in range(g.n)]


def mutually_maximally_distant_pairs(g: Graph, d: DistanceMatrix) -> list[tuple[int, int]]:
    md = maximally_distant_matrix(g, d)
    return [(u, v) for u, v in combinations(range(g.n), 2) if md[u][v] and md[v][u]]


def boundary(g: Graph, d: DistanceMatrix) -> tuple[int, ...]:
    verts = set()
    for u, v in mutually_maximally_distant_pairs(g, d):
        verts.update((u, v))
    return tuple(sorted(verts))


def simplicial_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose neighborhood induces a complete graph.

    This set is written both as epsilon(G) and sigma(G) in the literature.
    """
    return tuple(
        v
        for v in range(g.n)
        if all(b in g.adj[a] for a, b in combinations(sorted(g.adj[v]), 2))
    )


def end_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if len(g.adj[v]) == 1)


def strong_resolving_graph(g: Graph, d: DistanceMatrix) -> SrGraph:
    if not is_connected(g):
        raise NotConnectedError()
    pairs = mutually_maximally_distant_pairs(g, d)
    verts = sorted({v for p in pairs for v in p})
    index = {v: i for i, v in enumerate(verts)}
    sr = Graph.from_edges(len(verts), [(index[u], index[v]) for u, v in pairs])
    return SrGraph(sr, tuple(verts))


def is_two_antipodal(g: Graph, d: DistanceMatrix) -> bool:
    diam = max(max(row) for row in d.rows)
    return all(sum(1 for x in row if x == diam) == 1 for row in d.rows)
