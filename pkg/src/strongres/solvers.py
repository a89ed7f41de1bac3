"""Exact strong metric dimension and strong partition dimension.

``strong_metric_dimension`` goes through the vertex cover number of the strong
resolving graph; ``brute_force_strong_metric_dimension`` enumerates subsets
and serves as its independent check.

``strong_partition_dimension`` searches partitions level by level between a
lower and an upper bound.  The search enumerates restricted-growth strings
over the vertices (most constrained vertices first) and prunes a prefix as
soon as two vertices sharing a block can no longer be strongly resolved: if
a set ``W`` resolves ``x, y`` then the vertex of ``W`` nearest to the closer
of the two resolves them as a single vertex, so some vertex resolving the
pair must lie outside their block.  Mutually maximally distant pairs have no
such vertex and are separated at once.

``exhaustive_strong_partition_dimension`` runs the same search from ``k = 2``
with no bounds at all, as the oracle for checking the bounds.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .boundary import SrGraph, strong_resolving_graph
from .errors import CertificateError, DomainError, GraphError, NotConnectedError, SearchBudgetExceeded
from .graph import DistanceMatrix, Graph, diameter, is_connected, is_path
from .heuristics import is_unicyclic, p1_partition, p2_partition, unicyclic_analysis, unicyclic_partition
from .kernels import clique_number, vertex_cover_number
from .resolving import (
    VertexPartition,
    is_strong_resolving_partition,
    is_strong_resolving_set,
    resolver_masks,
)

DEFAULT_BUDGET = 10**8
BRUTE_FORCE_CAP = 10

# provenance tags for BoundsReport entries
CLIQUE = "clique"
CLIQUE_NONPATH = "clique+1-nonpath"
DIM_PLUS_ONE = "dim+1"
DIAMETER = "diameter"
P1 = "P1"
P2 = "P2"
UNICYCLIC_TAU = "unicyclic-tau"
UNICYCLIC_TAU2 = "unicyclic-tau+2"


@dataclass(frozen=True)
class DimensionResult:
    value: int
    certificate: Union[tuple[int, ...], VertexPartition]
    method: str


@dataclass(frozen=True)
class Bound:
    value: int
    source: str
    certificate: VertexPartition | None = None


@dataclass(frozen=True)
class BoundsReport:
    lower: tuple[Bound, ...]
    upper: tuple[Bound, ...]

    @property
    def best_lower(self) -> int:
        return max(b.value for b in self.lower)

    @property
    def best_upper(self) -> int:
        return min(b.value for b in self.upper)

    def best_upper_bound(self) -> Bound:
        return min(self.upper, key=lambda b: b.value)

    def to_dict(self) -> dict:
        return {
            "lower": [{"value": b.value, "source": b.source} for b in self.lower],
            "upper": [{"value": b.value, "source": b.source} for b in self.upper],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }


def _require_solvable(g: Graph):
    if g.n < 2:
        raise DomainError("strong dimensions require n >= 2")
    if not is_connected(g):
        raise NotConnectedError()


# ---------------------------------------------------------------------------
# strong metric dimension


def brute_force_strong_metric_dimension(
    g: Graph, d: DistanceMatrix, cap: int = BRUTE_FORCE_CAP
) -> DimensionResult:
    _require_solvable(g)
    if g.n > cap:
        raise GraphError(f"brute force limited to n <= {cap} (got {g.n})")
    masks = list(resolver_masks(d).values())
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            s = 0
            for v in subset:
                s |= 1 << v
            if all(m & s for m in masks):
                return DimensionResult(size, subset, "brute-force")
    raise CertificateError("the whole vertex set failed to strongly resolve")


def strong_metric_dimension(
    g: Graph, d: DistanceMatrix, budget: int | None = None, srg: SrGraph | None = None
) -> DimensionResult:
    _require_solvable(g)
    if srg is None:
        srg = strong_resolving_graph(g, d)
    cover = vertex_cover_number(srg.graph, budget=budget)
    basis = tuple(sorted(srg.back_map[i] for i in cover.witness))
    if not is_strong_resolving_set(g, d, basis):
        raise CertificateError(f"cover {basis} is not a strong resolving set")
    return DimensionResult(cover.value, basis, "vertex-cover")


# ---------------------------------------------------------------------------
# partition search


class _PartitionSearch:
    def __init__(self, g: Graph, d: DistanceMatrix, order: list[int], budget: int):
        self.n = n = g.n
        self.rows = d.rows
        self.order = order
        self.budget = budget
        self.nodes = 0
        pos = {v: i for i, v in enumerate(order)}

        self.pairs = list(combinations(range(n), 2))
        self.pid = {p: i for i, p in enumerate(self.pairs)}
        resolvers = resolver_masks(d)
        self.checks_at: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        for (x, y), m in resolvers.items():
            others = m & ~(1 << x) & ~(1 << y)
            depth = max([pos[x], pos[y]] + [pos[v] for v in range(n) if others >> v & 1])
            self.checks_at[depth].append((x, y, others))
        self._resolved: dict[int, int] = {}
        self._inside: dict[int, int] = {}

    def _resolved_by(self, mask: int) -> int:
        """Bitmask of pair ids (outside ``mask``) strongly resolved by the set ``mask``."""
        hit = self._resolved.get(mask)
        if hit is not None:
            return hit
        rows = self.rows
        members = [w for w in range(self.n) if mask >> w & 1]
        dw = [min(rows[w][v] for w in members) for v in range(self.n)]
        hit = 0
        for i, (x, y) in enumerate(self.pairs):
            if mask >> x & 1 or mask >> y & 1:
                continue
            dxy = rows[x][y]
            if dw[x] == dxy + dw[y] or dw[y] == dxy + dw[x]:
                hit |= 1 << i
        self._resolved[mask] = hit
        return hit

    def _pairs_inside(self, mask: int) -> int:
        bits = self._inside.get(mask)
        if bits is None:
            members = [w for w in range(self.n) if mask >> w & 1]
            bits = 0
            for x, y in combinations(members, 2):
                bits |= 1 << self.pid[(x, y)]
            self._inside[mask] = bits
        return bits

    def _valid(self, blocks: list[int]) -> bool:
        res = [self._resolved_by(b) for b in blocks]
        for i, b in enumerate(blocks):
            need = self._pairs_inside(b)
            if not need:
                continue
            cover = 0
            for j, r in enumerate(res):
                if j != i:
                    cover |= r
            if need & ~cover:
                return False
        return True

    def run(self, k: int) -> list[int] | None:
        """First valid partition into exactly ``k`` blocks, as block bitmasks."""
        self._resolved.clear()
        self._inside.clear()
        n, order, checks_at = self.n, self.order, self.checks_at
        blocks = [0] * k
        block_of = [-1] * n

        def place(i: int, used: int) -> bool:
            if i == n:
                return self._valid(blocks)
            v = order[i]
            bit = 1 << v
            remaining = n - i - 1
            top = used + 1 if used < k else used
            for j in range(top):
                new_used = used + 1 if j == used else used
                if new_used + remaining < k:
                    continue
                self.nodes += 1
                if self.nodes > self.budget:
                    raise SearchBudgetExceeded(nodes=self.nodes)
                blocks[j] |= bit
                block_of[v] = j
                ok = True
                for x, y, others in checks_at[i]:
                    bx = block_of[x]
                    if bx == block_of[y] and not others & ~blocks[bx]:
                        ok = False
                        break
                if ok and place(i + 1, new_used):
                    return True
                blocks[j] &= ~bit
                block_of[v] = -1
            return False

        limit = sys.getrecursionlimit()
        if limit < n + 100:
            sys.setrecursionlimit(n + 100)
        return list(blocks) if place(0, 0) else None


def _masks_to_partition(masks: list[int], n: int) -> VertexPartition:
    return VertexPartition([v for v in range(n) if m >> v & 1] for m in masks)


def _search_order(g: Graph, srg: SrGraph) -> list[int]:
    sr_deg = [0] * g.n
    for i, v in enumerate(srg.back_map):
        sr_deg[v] = len(srg.graph.adj[i])
    return sorted(range(g.n), key=lambda v: (-sr_deg[v], v))


def exhaustive_strong_partition_dimension(
    g: Graph, d: DistanceMatrix, budget: int | None = None
) -> DimensionResult:
    """pd_s by searching ``k = 2, 3, ...`` with no bounds beyond ``pd_s >= 2``."""
    _require_solvable(g)
    budget = DEFAULT_BUDGET if budget is None else budget
    srg = strong_resolving_graph(g, d)
    search = _PartitionSearch(g, d, _search_order(g, srg), budget)
    for k in range(2, g.n + 1):
        masks = search.run(k)
        if masks is not None:
            p = _masks_to_partition(masks, g.n)
            if not is_strong_resolving_partition(g, d, p):
                raise CertificateError(f"search returned an invalid partition {p}")
            return DimensionResult(k, p, "exhaustive")
    raise CertificateError("no strong resolving partition found up to n blocks")


# ---------------------------------------------------------------------------
# bounds


def _checked(g, d, blocks, source) -> VertexPartition:
    p = VertexPartition(blocks)
    if not is_strong_resolving_partition(g, d, p):
        raise CertificateError(f"{source} certificate {p} does not strongly resolve")
    return p


def _diametral_partition(g: Graph, d: DistanceMatrix) -> VertexPartition:
    diam = diameter(g, d)
    s, e = next((u, v) for u, v in combinations(range(g.n), 2) if d[u][v] == diam)
    path = [e]
    while path[-1] != s:
        cur = path[-1]
        path.append(min(w for w in g.adj[cur] if d[s][w] == d[s][cur] - 1))
    path.reverse()
    rest = [[v] for v in range(g.n) if v not in path]
    return _checked(g, d, [[s], path[1:]] + rest, DIAMETER)


def _bounds(g, d, srg, dims) -> BoundsReport:
    lower, upper = [], []
    omega = clique_number(srg.graph).value
    lower.append(Bound(omega, CLIQUE))
    if omega == 2 and not is_path(g):
        lower.append(Bound(3, CLIQUE_NONPATH))

    basis = set(dims.certificate)
    blocks = [[v] for v in sorted(basis)] + [[v for v in range(g.n) if v not in basis]]
    upper.append(Bound(dims.value + 1, DIM_PLUS_ONE, _checked(g, d, blocks, DIM_PLUS_ONE)))
    diam_part = _diametral_partition(g, d)
    upper.append(Bound(len(diam_part), DIAMETER, diam_part))

    p1 = p1_partition(g, d)
    upper.append(Bound(len(p1), P1, p1))
    p2 = p2_partition(g, d)
    if p2 is not None:
        upper.append(Bound(len(p2), P2, p2))

    if is_unicyclic(g):
        try:
            structure = unicyclic_analysis(g, d)
        except DomainError:
            structure = None
        if structure is not None and structure.tau >= 1:
            part = unicyclic_partition(g, d)
            upper.append(Bound(len(part), UNICYCLIC_TAU2, part))
            if structure.tau >= 2:
                lower.append(Bound(structure.tau, UNICYCLIC_TAU))
    return BoundsReport(tuple(lower), tuple(upper))


def pds_bounds(g: Graph, d: DistanceMatrix, budget: int | None = None) -> BoundsReport:
    _require_solvable(g)
    srg = strong_resolving_graph(g, d)
    dims = strong_metric_dimension(g, d, budget=budget, srg=srg)
    return _bounds(g, d, srg, dims)


def strong_partition_dimension(
    g: Graph,
    d: DistanceMatrix,
    budget: int | None = None,
    bounds: BoundsReport | None = None,
) -> DimensionResult:
    """Exact pd_s with a verified certificate partition.

    Levels strictly between the best lower and best upper bound are searched
    in increasing order; if none admits a partition, the certificate of the
    best upper bound is returned.  Raises :class:`SearchBudgetExceeded`
    (carrying the bounds) when the node budget runs out.
    """
    _require_solvable(g)
    budget = DEFAULT_BUDGET if budget is None else budget
    srg = strong_resolving_graph(g, d)
    if bounds is None:
        dims = strong_metric_dimension(g, d, srg=srg)
        bounds = _bounds(g, d, srg, dims)
    lo, best = bounds.best_lower, bounds.best_upper_bound()
    if lo > best.value:
        raise CertificateError(f"lower bound {lo} exceeds upper bound {best.value}")
    search = _PartitionSearch(g, d, _search_order(g, srg), budget)
    for k in range(lo, best.value):
        try:
            masks = search.run(k)
        except SearchBudgetExceeded as exc:
            raise SearchBudgetExceeded(
                f"partition search budget exceeded at k={k}", bounds=bounds, nodes=exc.nodes
            ) from None
        if masks is not None:
            p = _masks_to_partition(masks, g.n)
            if not is_strong_resolving_partition(g, d, p):
                raise CertificateError(f"search returned an invalid partition {p}")
            return DimensionResult(k, p, "search")
    return DimensionResult(best.value, best.certificate, f"bound:{best.source}")
