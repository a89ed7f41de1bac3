"""Exact vertex cover number and clique number, with certificates.

Both searches work on bitmask adjacency and are deterministic: among
equal-degree branching candidates the lowest index wins, and the returned
witness is the first optimum the search order reaches (not a canonical
minimum over all optima).

Intended scale is a few dozen vertices.  ``budget`` caps the number of
search-tree nodes; exceeding it raises :class:`SearchBudgetExceeded`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SearchBudgetExceeded
from .graph import Graph

DEFAULT_KERNEL_BUDGET = 10**7


@dataclass(frozen=True)
class CertifiedValue:
    value: int
    witness: tuple[int, ...]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def is_vertex_cover(g: Graph, cover) -> bool:
    s = set(cover)
    return all(u in s or v in s for u, v in g.edges())


def is_clique(g: Graph, verts) -> bool:
    vs = list(verts)
    return all(vs[j] in g.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def _matching_lower_bound(adj: list[int], active: int) -> int:
    # size of a greedy maximal matching: each matched edge needs its own cover vertex
    size = 0
    free = active
    while free:
        low = free & -free
        v = low.bit_length() - 1
        free ^= low
        nb = adj[v] & free
        if nb:
            w = (nb & -nb).bit_length() - 1
            free &= ~(1 << w)
            size += 1
    return size


def vertex_cover_number(g: Graph, budget: int | None = None) -> CertifiedValue:
    """Minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex ``v``: either ``v`` is in the cover,
    or all of its remaining neighbors are.  Bounded below by a greedy
    maximal matching.
    """
    budget = DEFAULT_KERNEL_BUDGET if budget is None else budget
    adj = g.adjacency_masks()
    all_nonisolated = _mask(v for v in range(g.n) if adj[v])
    best_size = all_nonisolated.bit_count()
    best_cover = all_nonisolated
    nodes = 0

    def search(active: int, chosen: int, size: int):
        nonlocal best_size, best_cover, nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("vertex cover search budget exceeded", nodes=nodes)
        # drop vertices with no remaining edges
        v_best, d_best = -1, 0
        rest = active
        live = 0
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            dv = (adj[v] & active).bit_count()
            if dv:
                live |= low
                if dv > d_best:
                    v_best, d_best = v, dv
        if not live:
            if size < best_size:
                best_size, best_cover = size, chosen
            return
        if size + _matching_lower_bound(adj, live) >= best_size:
            return
        v = v_best
        search(live & ~(1 << v), chosen | (1 << v), size + 1)
        nbrs = adj[v] & live
        search(live & ~nbrs & ~(1 << v), chosen | nbrs, size + nbrs.bit_count())

    search(all_nonisolated, 0, 0)
    return CertifiedValue(best_size, tuple(_bits(best_cover)))


def _color_sort(adj: list[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; returns (vertices, colors) by color."""
    order, colors = [], []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail ^= low
            avail &= ~adj[v]
            uncolored ^= low
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(g: Graph, budget: int | None = None) -> CertifiedValue:
    """Maximum clique by branch and bound with a greedy-coloring upper bound."""
    budget = DEFAULT_KERNEL_BUDGET if budget is None else budget
    if g.n == 0:
        return CertifiedValue(0, ())
    adj = g.adjacency_masks()
    best: list[int] = []
    nodes = 0

    def expand(clique: list[int], cand: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("clique search budget exceeded", nodes=nodes)
        order, colors = _color_sort(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colors[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            new = cand & adj[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return CertifiedValue(len(best), tuple(sorted(best)))
