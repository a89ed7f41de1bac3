"""Strong resolution predicates for vertices, sets, sets of landmarks and partitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import GraphError
from .graph import DistanceMatrix, Graph


@dataclass(frozen=True)
class VertexPartition:
    """Unordered partition of ``0..n-1`` into nonempty blocks.

    Blocks are stored as sorted tuples, ordered by their minimum element, so
    two equal partitions compare equal regardless of how they were built.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        canon = sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[:1])
        object.__setattr__(self, "blocks", tuple(canon))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    @property
    def size(self) -> int:
        return len(self.blocks)

    def validate(self, n: int):
        seen = set()
        for b in self.blocks:
            if not b:
                raise GraphError("partition has an empty block")
            for v in b:
                if not 0 <= v < n:
                    raise GraphError(f"partition vertex {v} out of range [0, {n})")
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise GraphError(f"partition does not cover vertices {missing}")

    def to_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def vertex_strongly_resolves(d: DistanceMatrix, v: int, x: int, y: int) -> bool:
    """Whether one of ``x, y`` lies on a shortest path from the other to ``v``."""
    if x == y:
        raise GraphError("strong resolution needs two different vertices")
    dxy = d[x][y]
    return d[x][v] == dxy + d[y][v] or d[y][v] == dxy + d[x][v]


def set_strongly_resolves(d: DistanceMatrix, w: Iterable[int], x: int, y: int) -> bool:
    w = tuple(w)
    if x == y:
        raise GraphError("strong resolution needs two different vertices")
    if not w:
        raise GraphError("resolving set must be nonempty")
    if x in w or y in w:
        raise GraphError("set resolution is only defined for vertices outside the set")
    dxw = d.to_set(x, w)
    dyw = d.to_set(y, w)
    dxy = d[x][y]
    return dxw == dxy + dyw or dyw == dxy + dxw


def is_strong_resolving_set(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> bool:
    s = tuple(s)
    return all(
        any(vertex_strongly_resolves(d, v, x, y) for v in s)
        for x, y in combinations(range(g.n), 2)
    )


def is_strong_resolving_partition(g: Graph, d: DistanceMatrix, p: VertexPartition) -> bool:
    p.validate(g.n)
    for u in p.blocks:
        others = [w for w in p.blocks if w is not u]
        for x, y in combinations(u, 2):
            if not any(set_strongly_resolves(d, w, x, y) for w in others):
                return False
    return True


def resolver_masks(d: DistanceMatrix) -> dict[tuple[int, int], int]:
    """For each pair ``x < y``, the bitmask of vertices that strongly resolve it."""
    n = d.n
    out = {}
    for x, y in combinations(range(n), 2):
        m = 0
        for v in range(n):
            if vertex_strongly_resolves(d, v, x, y):
                m |= 1 << v
        out[(x, y)] = m
    return out
