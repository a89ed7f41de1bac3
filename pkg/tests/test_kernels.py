import itertools

import pytest
from hypothesis import given, settings

from strongres.errors import SearchBudgetExceeded
from strongres.families import complete_graph, cycle_graph, generate, parse_spec
from strongres.graph import Graph, disjoint_union
from strongres.kernels import clique_number, is_clique, is_vertex_cover, vertex_cover_number
from strategies import graphs


def brute_vertex_cover(g):
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if is_vertex_cover(g, s):
                return k


def brute_clique(g):
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            if is_clique(g, s):
                return k
    return 0


def brute_independence(g):
    best = 0
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if all(b not in g.adj[a] for a, b in itertools.combinations(s, 2)):
                best = k
                break
    return best


def three_k2():
    k2 = complete_graph(2)
    return disjoint_union(disjoint_union(k2, k2), k2)


@pytest.mark.parametrize(
    "g, expected",
    [(complete_graph(5), 4), (three_k2(), 3), (cycle_graph(5), 3), (Graph.from_edges(3, []), 0)],
)
def test_vertex_cover_examples(g, expected):
    res = vertex_cover_number(g)
    assert res.value == expected
    assert len(res.witness) == expected
    assert is_vertex_cover(g, res.witness)


def test_c5_vertex_cover_matches_subset_count():
    assert brute_vertex_cover(cycle_graph(5)) == 3


@pytest.mark.parametrize(
    "g, expected",
    [(complete_graph(6), 6), (cycle_graph(7), 2), (generate(parse_spec("wheel:r=5")), 3)],
)
def test_clique_examples(g, expected):
    res = clique_number(g)
    assert res.value == expected
    assert is_clique(g, res.witness) and len(res.witness) == expected


def test_wheel_clique_by_subsets():
    assert brute_clique(generate(parse_spec("wheel:r=5"))) == 3


def test_budget_is_enforced():
    g = cycle_graph(9)
    with pytest.raises(SearchBudgetExceeded):
        vertex_cover_number(g, budget=1)
    with pytest.raises(SearchBudgetExceeded):
        clique_number(complete_graph(8), budget=1)


def test_witnesses_are_deterministic():
    g = generate(parse_spec("c1:r=3,t=6"))
    assert vertex_cover_number(g) == vertex_cover_number(g)
    assert clique_number(g) == clique_number(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_kernels_agree_with_subset_enumeration(g):
    vc = vertex_cover_number(g)
    cl = clique_number(g)
    assert vc.value == brute_vertex_cover(g)
    assert cl.value == brute_clique(g)
    assert is_vertex_cover(g, vc.witness) and len(vc.witness) == vc.value
    assert is_clique(g, cl.witness) and len(cl.witness) == cl.value


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_cover_and_independence_are_complementary(g):
    assert vertex_cover_number(g).value + brute_independence(g) == g.n


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=12))
def test_degree_sanity_bounds(g):
    delta = max(g.degrees())
    assert clique_number(g).value <= delta + 1
    if delta:
        assert vertex_cover_number(g).value * delta >= g.m
