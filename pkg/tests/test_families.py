import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongres.boundary import strong_resolving_graph
from strongres.errors import GraphError
from strongres.families import (
    FAMILIES,
    complete_graph,
    cycle_graph,
    expected_dims,
    expected_pds,
    generate,
    parse_spec,
    random_block_graph,
    random_tree,
    random_unicyclic,
)
from strongres.graph import all_pairs_distances, are_isomorphic, cut_vertices, graph_to_edge_list, is_connected
from strongres.heuristics import is_unicyclic
from strongres.solvers import strong_metric_dimension, strong_partition_dimension
from strongres.verify import clique_component_profile

SAMPLE_SPECS = [
    "path:n=5", "cycle:n=6", "complete:n=4", "complete_bipartite:r=2,s=3", "star:r=4",
    "tree:n=9,seed=2", "tree:edges=0-1+1-2+1-3", "hypercube:k=3", "grid:m=2,n=3",
    "wheel:r=5", "fan:r=4", "comet:n=7,r=4", "c1:r=2,t=4", "sphere:k=3,r=3",
    "kn_minus_e:n=5", "k1_plus_cliques:sizes=2+3", "realization_A:r=3,n=8",
    "realization_B:r=3,t=4,n=10", "block_random:blocks=3,min_size=2,max_size=4,seed=1",
    "unicyclic_random:n=9,seed=4",
]


def test_every_family_has_a_sample():
    assert {s.split(":")[0] for s in SAMPLE_SPECS} == set(FAMILIES)


@pytest.mark.parametrize("text", SAMPLE_SPECS)
def test_spec_round_trip_and_connectivity(text):
    spec = parse_spec(text)
    assert parse_spec(str(spec)) == spec
    g = generate(spec)
    assert is_connected(g)
    assert all(v not in g.adj[v] for v in range(g.n))


@pytest.mark.parametrize(
    "text",
    ["nosuch:n=3", "path:n", "path:n=x", "cycle:n=2", "comet:n=4,r=4", "c1:r=1,t=4",
     "realization_B:r=3,t=6,n=10", "grid:m=1,n=3", "tree:edges=0-1+2-3", "wheel"],
)
def test_bad_specs_name_the_problem(text):
    with pytest.raises(GraphError):
        generate(parse_spec(text))


def test_generator_examples():
    comet = generate("comet:n=7,r=4")
    assert comet.n == 7 and comet.m == 6 + 3
    assert all(comet.has_edge(a, b) for a in range(4) for b in range(a + 1, 4))
    c1 = generate("c1:r=2,t=4")
    assert c1.n == 6 and sorted(c1.adj[0]) == [1, 3, 4, 5]
    assert are_isomorphic(generate("sphere:k=2,r=2"), cycle_graph(4))


def test_c1_edge_list_labeling():
    assert graph_to_edge_list(generate("c1:r=2,t=4")) == "6 6\n0 1\n0 3\n0 4\n0 5\n1 2\n2 3\n"


@pytest.mark.parametrize(
    "text, n",
    [("comet:n=9,r=3", 9), ("c1:r=3,t=7", 10), ("realization_A:r=4,n=9", 9),
     ("realization_B:r=3,t=5,n=12", 12), ("realization_B:r=4,t=5,n=12", 12)],
)
def test_orders(text, n):
    assert generate(text).n == n


def test_expected_value_examples():
    assert expected_pds("complete:n=9") == 9
    assert expected_pds("wheel:r=4") == 3
    assert expected_pds("fan:r=7") == 4
    assert expected_dims("c1:r=2,t=5") == 4
    assert expected_dims("path:n=12") == 1
    assert expected_dims("complete:n=7") == 6


def test_no_formula_families_return_none():
    assert expected_pds("complete_bipartite:r=2,s=3") is None
    assert expected_pds("hypercube:k=3") is None
    assert expected_dims("cycle:n=7") is None


@pytest.mark.parametrize(
    "text",
    ["path:n=8", "cycle:n=7", "complete:n=6", "star:r=5", "tree:n=10,seed=5", "grid:m=3,n=3",
     "wheel:r=3", "wheel:r=4", "wheel:r=7", "fan:r=2", "fan:r=3", "fan:r=6", "comet:n=8,r=5",
     "c1:r=3,t=6", "sphere:k=3,r=2", "kn_minus_e:n=6", "k1_plus_cliques:sizes=1+2+2",
     "realization_A:r=3,n=8", "realization_B:r=3,t=4,n=10",
     "block_random:blocks=3,min_size=2,max_size=3,seed=9"],
)
def test_closed_formulas_match_the_solver(text):
    g = generate(text)
    assert strong_partition_dimension(g, all_pairs_distances(g)).value == expected_pds(text)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("t", [4, 5, 6, 7])
def test_c1_dims(r, t):
    text = f"c1:r={r},t={t}"
    g = generate(text)
    assert strong_metric_dimension(g, all_pairs_distances(g)).value == expected_dims(text)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("t", [4, 6, 8])
def test_c1_srg_components_for_even_cycles(r, t):
    g = generate(f"c1:r={r},t={t}")
    sr = strong_resolving_graph(g, all_pairs_distances(g))
    assert clique_component_profile(sr.graph) == sorted([r + 1] + [2] * ((t - 2) // 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_random_trees(n, seed):
    g = random_tree(n, seed)
    assert g.n == n and g.m == n - 1 and is_connected(g)
    assert random_tree(n, seed) == g


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(2, 4), st.integers(0, 10**6))
def test_random_block_graphs(blocks, size, seed):
    g = random_block_graph(blocks, 2, size, seed)
    assert is_connected(g)
    assert g == random_block_graph(blocks, 2, size, seed)
    assert expected_pds(f"block_random:blocks={blocks},min_size=2,max_size={size},seed={seed}") == g.n - len(cut_vertices(g))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 14), st.integers(0, 10**6), st.booleans())
def test_random_unicyclic(n, seed, all_majors):
    if all_majors and n < 6:
        n = 6
    g = random_unicyclic(n, seed, all_majors=all_majors)
    assert is_unicyclic(g)
    assert g == random_unicyclic(n, seed, all_majors=all_majors)


def test_generate_accepts_spec_objects_and_strings():
    assert generate(parse_spec("complete:n=3")) == generate("complete:n=3") == complete_graph(3)
