import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongres.errors import GraphError
from strongres.families import complete_graph, cycle_graph, path_graph
from strongres.graph import all_pairs_distances
from strongres.resolving import (
    VertexPartition,
    is_strong_resolving_partition,
    is_strong_resolving_set,
    resolver_masks,
    set_strongly_resolves,
    vertex_strongly_resolves,
)
from strategies import connected_graphs

C4 = cycle_graph(4)
P4 = path_graph(4)


def geodesic_vertices(d, a, b):
    return {v for v in range(d.n) if d[a][v] + d[v][b] == d[a][b]}


def test_vertex_resolution_examples():
    assert not vertex_strongly_resolves(all_pairs_distances(C4), 0, 1, 3)
    assert vertex_strongly_resolves(all_pairs_distances(P4), 0, 1, 2)


def test_vertex_resolves_itself():
    d = all_pairs_distances(cycle_graph(7))
    assert all(vertex_strongly_resolves(d, x, x, y) for x in range(7) for y in range(7) if x != y)


def test_vertex_resolution_needs_two_vertices():
    with pytest.raises(GraphError):
        vertex_strongly_resolves(all_pairs_distances(P4), 0, 2, 2)


def test_set_resolution_examples():
    assert not set_strongly_resolves(all_pairs_distances(C4), [0], 1, 3)
    assert set_strongly_resolves(all_pairs_distances(P4), [0], 1, 3)
    assert set_strongly_resolves(all_pairs_distances(path_graph(5)), [0, 4], 1, 2)


@pytest.mark.parametrize("w, x, y", [([], 1, 2), ([1], 1, 2), ([0, 2], 1, 2), ([0], 1, 1)])
def test_set_resolution_domain(w, x, y):
    with pytest.raises(GraphError):
        set_strongly_resolves(all_pairs_distances(P4), w, x, y)


def test_resolving_set_examples():
    g = cycle_graph(6)
    d = all_pairs_distances(g)
    assert is_strong_resolving_set(g, d, range(6))
    p = path_graph(8)
    assert is_strong_resolving_set(p, all_pairs_distances(p), [0])
    assert not is_strong_resolving_set(C4, all_pairs_distances(C4), [0])


def test_partition_examples():
    k3 = complete_graph(3)
    assert is_strong_resolving_partition(k3, all_pairs_distances(k3), VertexPartition([[0], [1], [2]]))
    assert is_strong_resolving_partition(P4, all_pairs_distances(P4), VertexPartition([[0], [1, 2, 3]]))
    assert not is_strong_resolving_partition(C4, all_pairs_distances(C4), VertexPartition([[0], [1, 2, 3]]))


@pytest.mark.parametrize("blocks", [[[0], [1, 2]], [[0, 1], [1, 2, 3]], [[0], [1, 2, 3, 4]], [[0, 1, 2, 3], []]])
def test_invalid_partitions_are_rejected(blocks):
    with pytest.raises(GraphError):
        is_strong_resolving_partition(P4, all_pairs_distances(P4), VertexPartition(blocks))


def test_partition_canonical_form():
    a = VertexPartition([[3, 1], [2], [0]])
    b = VertexPartition([(0,), (2,), (1, 3)])
    assert a == b
    assert a.to_lists() == [[0], [1, 3], [2]]
    assert a.size == len(a) == 3


@settings(max_examples=100, deadline=None)
@given(connected_graphs(max_n=9))
def test_vertex_resolution_is_geodesic_membership(g):
    d = all_pairs_distances(g)
    for x, y in itertools.combinations(range(g.n), 2):
        for v in range(g.n):
            expected = y in geodesic_vertices(d, x, v) or x in geodesic_vertices(d, y, v)
            assert vertex_strongly_resolves(d, v, x, y) == expected


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=3, max_n=9), st.data())
def test_set_resolution_implies_a_single_vertex_resolver(g, data):
    d = all_pairs_distances(g)
    x, y = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    rest = [v for v in range(g.n) if v not in (x, y)]
    w = data.draw(st.lists(st.sampled_from(rest), min_size=1, unique=True))
    if set_strongly_resolves(d, w, x, y):
        assert any(vertex_strongly_resolves(d, v, x, y) for v in w)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_resolver_masks_match_predicate(g):
    d = all_pairs_distances(g)
    masks = resolver_masks(d)
    for (x, y), m in masks.items():
        assert m == sum(1 << v for v in range(g.n) if vertex_strongly_resolves(d, v, x, y))
        assert m >> x & 1 and m >> y & 1
