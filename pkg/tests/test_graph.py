from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from strongroman.errors import DuplicateEdge, GraphError, LoopEdge, VertexOutOfRange
from strongroman.graph import (
    UNBOUNDED,
    build_graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    distance_matrix,
    girth,
    is_star,
    is_tree,
    matching_number,
    path_graph,
    profile,
    star_graph,
)

from oracles import matching as brute_matching
from strategies import graphs


def test_build_path_degrees():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.degrees == (1, 2, 1)


def test_build_cycle_degrees():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert set(g.degrees) == {2}
    assert g.size == 4


def test_edges_normalized():
    assert build_graph(2, [(1, 0)]).edges == frozenset({(0, 1)})


@pytest.mark.parametrize(
    "order, edges, exc",
    [
        (3, [(0, 0)], LoopEdge),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (2, [(0, 5)], VertexOutOfRange),
        (2, [(-1, 0)], VertexOutOfRange),
        (0, [], GraphError),
    ],
)
def test_build_rejects(order, edges, exc):
    with pytest.raises(exc):
        build_graph(order, edges)


def test_profile_p4():
    p = profile(path_graph(4))
    assert (p.max_degree, p.min_degree, p.diameter, p.girth, p.matching_number) == (2, 1, 3, UNBOUNDED, 2)
    assert p.leaves == {0, 3}
    assert p.support_vertices == {1, 2}
    assert p.is_tree and p.is_connected


def test_profile_c5():
    p = profile(cycle_graph(5))
    assert (p.max_degree, p.min_degree, p.diameter, p.girth, p.matching_number) == (2, 2, 2, 5, 2)


def test_profile_star():
    p = profile(star_graph(4))
    assert (p.max_degree, p.min_degree, p.matching_number) == (3, 1, 1)
    assert p.support_vertices == {0}


def test_complement_p4_is_p4():
    assert complement(path_graph(4)).edges == {(0, 2), (0, 3), (1, 3)}


def test_complement_c5_is_c5():
    c = complement(cycle_graph(5))
    assert set(c.degrees) == {2} and c.is_connected


def test_complement_star():
    c = complement(star_graph(4))
    assert c.degree(0) == 0
    assert c.edges == {(1, 2), (1, 3), (2, 3)}


def test_distances():
    assert distance_matrix(path_graph(3))[0][2] == 2
    d = distance_matrix(cycle_graph(4))
    assert {d[u][v] for u in range(4) for v in range(4) if u != v} == {1, 2}
    assert diameter(cycle_graph(4)) == 2
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert distance_matrix(two_edges)[0][2] is UNBOUNDED
    assert diameter(two_edges) is UNBOUNDED


def test_girth_known_values():
    assert girth(complete_graph(4)) == 3
    assert girth(complete_bipartite(3, 3)) == 4
    assert girth(cycle_graph(7)) == 7
    assert girth(disjoint_union(path_graph(3), path_graph(2))) is UNBOUNDED
    petersen = build_graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                           + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert girth(petersen) == 5


def test_star_and_tree_predicates():
    assert is_star(star_graph(2)) and is_star(star_graph(5))
    assert not is_star(path_graph(4))
    assert is_tree(path_graph(1)) and not is_tree(cycle_graph(3))


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_invariants_against_networkx(g):
    h = _nx(g)
    assert sum(g.degrees) == 2 * g.size
    assert matching_number(g) == len(nx.max_weight_matching(h, maxcardinality=True))
    assert g.is_connected == nx.is_connected(h)
    assert complement(complement(g)) == g
    acyclic = nx.is_forest(h)
    assert (girth(g) is UNBOUNDED) == acyclic
    if g.is_connected:
        assert diameter(g) == nx.diameter(h)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_matching_against_edge_subsets(g):
    if g.size <= 14:
        assert matching_number(g) == brute_matching(g.order, g.edges)


def test_induced_subgraph_and_components():
    g = disjoint_union(path_graph(3), cycle_graph(3))
    assert g.components() == [[0, 1, 2], [3, 4, 5]]
    h, old = g.induced_subgraph([3, 4, 5])
    assert old == [3, 4, 5] and h.size == 3
