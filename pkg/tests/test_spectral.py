"""Spectral and forest fast paths for graph ensembles."""

import random
from itertools import combinations

import networkx as nx
import pytest

from morse_ensemble import (
    Graph,
    ParameterError,
    PreconditionError,
    cartesian_me,
    coefficient,
    complete_graph,
    cycle_graph,
    cycle_me,
    dictionary_coefficient,
    enumerate_me,
    face_poset,
    fibonacci,
    forest_expansion_me,
    hypercube_graph,
    laplacian_det_poly,
    laplacian_me,
    lucas,
    mul,
    path_graph,
    path_me,
    perfect_count_graph,
    spanning_tree_count,
    specialize_all,
    total_count_identities,
    two_pair_coefficient_formula,
)
from morse_ensemble.complexes import cartesian_product
from morse_ensemble.spectral import laplacian_matrix


def random_connected_graphs(count, max_n=6, seed=20260817):
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.3, 0.9)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        G = Graph(n, edges)
        if G.is_connected():
            graphs.append(G)
    return graphs


def enum_graph(G):
    return enumerate_me(face_poset(G.to_complex()), 2)


def test_laplacian_matrix_matches_networkx():
    for G in [path_graph(4), cycle_graph(5), complete_graph(4)]:
        ours = laplacian_matrix(G)
        H = nx.Graph(list(G.sorted_edges()))
        H.add_nodes_from(range(G.n))
        theirs = nx.laplacian_matrix(H, nodelist=range(G.n)).toarray()
        assert ours == [[int(x) for x in row] for row in theirs]


def test_char_poly_path3():
    char = laplacian_det_poly(path_graph(3))
    assert char.coeffs == (0, 3, 4, 1)  # lambda*(lambda+1)*(lambda+3)


def test_laplacian_me_equals_enumeration_small():
    for G in [path_graph(4), cycle_graph(5), complete_graph(4), hypercube_graph(2)]:
        assert laplacian_me(G) == enum_graph(G)


def test_laplacian_me_multiplicative_over_components():
    G = Graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    assert laplacian_me(G) == mul(laplacian_me(cycle_graph(3)), laplacian_me(path_graph(2)))
    assert laplacian_me(G) == enum_graph(G)


def test_forest_expansion_on_random_corpus():
    for G in random_connected_graphs(20):
        assert forest_expansion_me(G) == laplacian_me(G)


def test_forest_expansion_handles_disconnected():
    G = Graph(4, [(0, 1)])
    assert forest_expansion_me(G) == laplacian_me(G) == enum_graph(G)


def test_path_cycle_closed_forms_match_enumeration():
    for n in range(1, 7):
        assert path_me(n) == enum_graph(path_graph(n))
    for n in range(3, 7):
        assert cycle_me(n) == enum_graph(cycle_graph(n))
    with pytest.raises(ParameterError):
        path_me(0)
    with pytest.raises(ParameterError):
        cycle_me(2)


def test_fibonacci_lucas_values():
    assert [fibonacci(k) for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [lucas(k) for k in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]


def test_totals_follow_fibonacci_and_lucas():
    for n in range(1, 11):
        record = total_count_identities(n)
        assert record.path_total == record.fibonacci_2n == fibonacci(2 * n)
        if n >= 3:
            assert record.cycle_total == record.lucas_2n_minus_2 == lucas(2 * n) - 2
        assert record.complete_total == record.complete_closed_form == (n + 1) ** (n - 1)


def test_spanning_tree_count_against_networkx():
    for G in random_connected_graphs(15, max_n=7):
        H = nx.Graph(list(G.sorted_edges()))
        H.add_nodes_from(range(G.n))
        assert spanning_tree_count(G) == round(nx.number_of_spanning_trees(H))
    with pytest.raises(PreconditionError):
        spanning_tree_count(Graph(3, [(0, 1)]))


def test_dictionary_coefficients():
    for G in random_connected_graphs(15):
        me = laplacian_me(G)
        n, m = G.n, G.m
        for j in range(1, n + 1):
            assert dictionary_coefficient(G, j) == coefficient(me, (j, m - n + j))
        assert dictionary_coefficient(G, n - 1) == 2 * m
        assert dictionary_coefficient(G, 1) == n * spanning_tree_count(G)
        if n >= 2:
            assert dictionary_coefficient(G, n - 2) == two_pair_coefficient_formula(G)
    with pytest.raises(ParameterError):
        dictionary_coefficient(path_graph(3), 9)


def test_perfect_count_graph():
    assert perfect_count_graph(complete_graph(4)) == 64
    assert perfect_count_graph(cycle_graph(3)) == 9
    assert perfect_count_graph(path_graph(4)) == 4


def test_cartesian_me_matches_hypercubes():
    p2 = path_graph(2)
    assert cartesian_me(p2, p2) == laplacian_me(hypercube_graph(2))
    q2 = cartesian_product(p2, p2)
    assert cartesian_me(p2, q2) == laplacian_me(hypercube_graph(3))
    assert cartesian_me(p2, p2) == enum_graph(hypercube_graph(2))


def test_char_poly_shape_invariants():
    char = laplacian_det_poly(complete_graph(5))
    assert char.coeffs[0] == 0  # zero eigenvalue
    assert char.coeffs[char.n] == 1  # monic
    assert char.n == 5 and char.m == 10
