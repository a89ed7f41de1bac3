"""Simple undirected graphs on dense integer vertices, distances and constructions.

Vertices are ``0..n-1``.  A :class:`Graph` is immutable; every construction
returns a new one.  Set-valued results are returned as sorted tuples so that
output is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphError, NotConnectedError, ParseError

ISOMORPHISM_MAX_N = 10


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as integer bitmasks (bit ``v`` set for neighbor ``v``)."""
        return [sum(1 << u for u in nbrs) for nbrs in self.adj]

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; ``rows[u][v]`` is ``d(u, v)``."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, u):
        return self.rows[u]

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def to_set(self, v: int, w: Iterable[int]) -> int:
        """Distance from ``v`` to the nearest vertex of ``w``."""
        row = self.rows[v]
        return min(row[x] for x in w)


# ---------------------------------------------------------------------------
# I/O


def graph_from_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Blank lines and lines starting with ``#`` are ignored.  Duplicate edges
    collapse to one.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex index out of range [0, {n})", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    return Graph.from_edges(header[0], edges)


def graph_to_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    edges = g.edges()
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural queries


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return min(_bfs(g, 0)) >= 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for v in range(g.n):
        dist = _bfs(g, v)
        if min(dist, default=0) < 0:
            raise NotConnectedError()
        rows.append(tuple(dist))
    if g.n == 0:
        raise NotConnectedError()
    return DistanceMatrix(g.n, tuple(rows))


def diameter(g: Graph, d: DistanceMatrix | None = None) -> int:
    if d is None:
        d = all_pairs_distances(g)
    return max(max(row) for row in d.rows)


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range [0, {g.n})")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adj[v])


def open_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(g, v)
    return tuple(sorted(g.adj[v]))


def is_path(g: Graph) -> bool:
    return (
        g.n >= 1
        and g.m == g.n - 1
        and max(g.degrees(), default=0) <= 2
        and is_connected(g)
    )


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def cut_vertices(g: Graph) -> tuple[int, ...]:
    """Articulation points by Hopcroft-Tarjan lowpoints (iterative DFS)."""
    if not is_connected(g):
        raise NotConnectedError()
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(sorted(g.adj[root])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(sorted(g.adj[w]))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[v])
        if parent == root:
            root_children += 1
        elif low[v] >= disc[parent]:
            cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return tuple(sorted(cuts))


# ---------------------------------------------------------------------------
# constructions


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H``; vertex ``(a, b)`` gets index ``a * h.n + b``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product of an empty graph")
    edges = []
    for a in range(g.n):
        for b, d in h.edges():
            edges.append((a * h.n + b, a * h.n + d))
    for a, c in g.edges():
        for b in range(h.n):
            edges.append((a * h.n + b, c * h.n + b))
    return Graph.from_edges(g.n * h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``G ∪ H`` with the vertices of ``h`` shifted by ``g.n``."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """``G + H``: the disjoint union plus every edge between the two sides."""
    if g.n == 0 or h.n == 0:
        raise GraphError("join with an empty graph")
    union = disjoint_union(g, h)
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(union.n, union.edges() + cross)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertices relabeled ascending to ``0..|s|-1``."""
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph of an empty vertex set")
    for v in verts:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v]) for u in verts for v in g.adj[u] if v in index and u < v
    ]
    return Graph.from_edges(len(verts), edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling is not a permutation")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# ---------------------------------------------------------------------------
# isomorphism


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test with degree pruning, for ``n <= 10``."""
    if g.n != h.n or g.m != h.m:
        return False
    if g.n > ISOMORPHISM_MAX_N:
        raise GraphError(
            f"are_isomorphic is limited to n <= {ISOMORPHISM_MAX_N} (got {g.n})"
        )
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gdeg, hdeg = g.degrees(), h.degrees()
    # map high-degree vertices first, they constrain the search the most
    order = sorted(range(n), key=lambda v: (-gdeg[v], v))
    hmask = h.adjacency_masks()
    image = [-1] * n
    used = 0

    def extend(i):
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            ok = True
            for u in order[:i]:
                if (u in g.adj[v]) != bool(hmask[image[u]] >> w & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)
