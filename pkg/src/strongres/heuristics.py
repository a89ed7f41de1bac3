"""Constructive strong resolving partitions.

Every function here returns a partition that has been checked with
:func:`is_strong_resolving_partition`; the sizes are upper bounds on the
strong partition dimension, never claims of optimality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .boundary import end_vertices
from .errors import CertificateError, DomainError, GraphError, NotConnectedError
from .graph import DistanceMatrix, Graph, is_connected
from .resolving import VertexPartition, is_strong_resolving_partition


@dataclass(frozen=True)
class UnicyclicStructure:
    """The unique cycle of a unicyclic graph and the trees hanging off it.

    ``cycle`` lists ``u_0 .. u_{t-1}`` in cyclic order, starting at the
    lowest-index major vertex (or the lowest-index cycle vertex when there is
    none).  ``majors`` maps each major vertex to its terminal vertices;
    ``legs`` maps each terminal vertex to the shortest path from its major
    vertex, major first.
    """

    cycle: tuple[int, ...]
    majors: dict[int, tuple[int, ...]] = field(default_factory=dict)
    legs: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def t(self) -> int:
        return len(self.cycle)

    @property
    def tau(self) -> int:
        return len(self.legs)

    def ter(self, v: int) -> int:
        return len(self.majors.get(v, ()))


def _verified(g, d, blocks, what) -> VertexPartition:
    p = VertexPartition(blocks)
    if not is_strong_resolving_partition(g, d, p):
        raise CertificateError(f"{what} produced a partition that does not strongly resolve")
    return p


def _restricted_bfs(g: Graph, source: int, allowed: set[int]) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _walk_back(g: Graph, dist: dict[int, int], target: int) -> list[int]:
    """Shortest path from the BFS source to ``target``, lowest-index predecessors."""
    path = [target]
    cur = target
    while dist[cur] > 0:
        cur = min(w for w in g.adj[cur] if dist.get(w) == dist[cur] - 1)
        path.append(cur)
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# unicyclic graphs


def is_unicyclic(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and is_connected(g)


def unicyclic_analysis(g: Graph, d: DistanceMatrix) -> UnicyclicStructure:
    if not is_connected(g):
        raise NotConnectedError()
    if g.m != g.n:
        raise DomainError("graph is not unicyclic")

    # peel end-vertices until only the cycle is left
    deg = g.degrees()
    removed = [False] * g.n
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        removed[v] = True
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    on_cycle = [v for v in range(g.n) if not removed[v]]

    terminals: dict[int, list[int]] = {}
    for leaf in end_vertices(g):
        row = d[leaf]
        nearest = min(row[c] for c in on_cycle)
        closest = [c for c in on_cycle if row[c] == nearest]
        if len(closest) != 1:
            raise DomainError(f"ambiguous terminal assignment for end-vertex {leaf}")
        terminals.setdefault(closest[0], []).append(leaf)

    start = min(terminals) if terminals else on_cycle[0]
    cyc = set(on_cycle)
    cycle = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in g.adj[cur] if w in cyc and w != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(on_cycle):
            raise GraphError("cycle walk did not close")

    legs = {}
    for major, leaves in terminals.items():
        dist = _restricted_bfs(g, major, set(range(g.n)) - (cyc - {major}))
        for leaf in leaves:
            legs[leaf] = tuple(_walk_back(g, dist, leaf))
    majors = {c: tuple(sorted(terminals[c])) for c in cycle if c in terminals}
    return UnicyclicStructure(tuple(cycle), majors, dict(sorted(legs.items())))


def unicyclic_partition(g: Graph, d: DistanceMatrix) -> VertexPartition:
    """Partition built from the trees hanging off the cycle.

    With some cycle vertex not major, the blocks are the leg pieces
    ``A(i, j)``, the antipodal block ``B`` and the far arc ``C``, giving at most
    ``|tau| + 2`` blocks.  When ``u_0`` carries at least two legs, folding
    ``C`` into its last leg (the construction used for the single-major
    family) is also tried, and the smaller verified partition is returned.
    When every cycle vertex is major, the leg pieces alone form a partition
    of size ``|tau|``.
    """
    s = unicyclic_analysis(g, d)
    if not s.majors:
        raise DomainError("graph has no major vertex; use p2_partition for a pure cycle")
    cycle, t = s.cycle, s.t

    if len(s.majors) == t:
        blocks = []
        for ui in cycle:
            taken = set()
            for leaf in s.majors[ui]:
                piece = [v for v in s.legs[leaf] if v not in taken]
                taken.update(piece)
                blocks.append(piece)
        return _verified(g, d, [b for b in blocks if b], "unicyclic_partition")

    half_lo, half_hi = t // 2, (t + 1) // 2
    leg_blocks: dict[int, list[list[int]]] = {}
    for ui in cycle:
        if ui not in s.majors:
            continue
        taken = {ui}
        pieces = []
        for leaf in s.majors[ui]:
            piece = [v for v in s.legs[leaf] if v not in taken]
            taken.update(piece)
            pieces.append(piece)
        leg_blocks[ui] = pieces
    u0 = cycle[0]
    leg_blocks[u0][0] = leg_blocks[u0][0] + [u0] + list(cycle[1:half_lo])
    b_block = [cycle[half_lo]] if t % 2 == 0 else [cycle[half_lo], cycle[half_hi]]
    c_block = list(cycle[half_hi + 1:])
    legs = [piece for ui in cycle if ui in leg_blocks for piece in leg_blocks[ui]]

    candidate = VertexPartition(b for b in legs + [b_block, c_block] if b)
    if not is_strong_resolving_partition(g, d, candidate):
        # with an empty far arc nothing separates the two antipodal vertices
        candidate = _verified(
            g, d, [b for b in legs + [[v] for v in b_block] + [c_block] if b],
            "unicyclic_partition",
        )

    u0_legs = leg_blocks[u0]
    if len(u0_legs) >= 2 and c_block:
        folded = [piece for piece in legs if piece is not u0_legs[-1]]
        folded.append(u0_legs[-1] + c_block)
        merged = VertexPartition(b for b in folded + [b_block] if b)
        if len(merged) < len(candidate) and is_strong_resolving_partition(g, d, merged):
            return merged
    return candidate


# ---------------------------------------------------------------------------
# geodesic partitions


def p1_partition(g: Graph, d: DistanceMatrix) -> VertexPartition:
    """Greedy geodesic peeling.

    Repeatedly removes a longest geodesic of ``g`` whose vertices are all
    still unused (ties: lowest ``(start, end)``).  Each peeled path
    ``a_1 .. a_k`` contributes the blocks ``{a_1}`` and ``{a_2 .. a_k}``;
    leftover vertices are singletons.  Size ``2r + t`` for ``r`` paths and
    ``t`` leftovers.
    """
    remaining = set(range(g.n))
    paths = []
    while True:
        best = None
        for s in sorted(remaining):
            dist = _restricted_bfs(g, s, remaining)
            for e, de in dist.items():
                if e > s and de == d[s][e] and de >= 1:
                    key = (-de, s, e)
                    if best is None or key < best[0]:
                        best = (key, s, e, dist)
        if best is None:
            break
        _, s, e, dist = best
        path = _walk_back(g, dist, e)
        paths.append(path)
        remaining.difference_update(path)
    blocks = [[v] for v in remaining]
    for path in paths:
        blocks.append([path[0]])
        blocks.append(path[1:])
    return _verified(g, d, blocks, "p1_partition")


def _p2_from(g: Graph, d: DistanceMatrix, b: int) -> list[list[int]] | None:
    uncovered = set(range(g.n)) - {b}
    sets = []
    while uncovered:
        dist = _restricted_bfs(g, b, uncovered | {b})
        target = None
        for x in sorted(uncovered, key=lambda v: (-d[b][v], v)):
            if dist.get(x) == d[b][x]:
                target = x
                break
        if target is None:
            return None
        piece = _walk_back(g, dist, target)[1:]
        sets.append(piece)
        uncovered.difference_update(piece)
    return [[b]] + sets


def p2_partition(g: Graph, d: DistanceMatrix, center: int | None = None) -> VertexPartition | None:
    """Partition ``{b}, A_1 .. A_r`` with every ``A_i + b`` a geodesic ending at ``b``.

    Each candidate ``b`` (or only ``center`` if given) is tried with a greedy
    cover that always extends to the farthest uncovered vertex.  Returns the
    smallest partition found (ties: lowest ``b``), or ``None`` when no
    candidate yields anything better than all singletons.
    """
    if not is_connected(g):
        raise NotConnectedError()
    centers = range(g.n) if center is None else [center]
    best = None
    for b in centers:
        blocks = _p2_from(g, d, b)
        if blocks is None or len(blocks) >= g.n:
            continue
        if best is None or len(blocks) < len(best):
            best = blocks
    if best is None:
        return None
    return _verified(g, d, best, "p2_partition")
