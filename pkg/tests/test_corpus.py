from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongroman.canon import canonical_form, canonical_graph, is_isomorphic
from strongroman.corpus import AllConnected, AllTrees, Explicit, Random, connected_graphs, iterate, trees
from strongroman.errors import InstanceTooLarge
from strongroman.graph import cycle_graph, path_graph, star_graph

from strategies import graphs


def _atlas_connected_counts():
    counts = {}
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            counts[h.number_of_nodes()] = counts.get(h.number_of_nodes(), 0) + 1
    return counts


def test_connected_counts_match_atlas():
    atlas = _atlas_connected_counts()
    for n in range(1, 8):
        assert len(connected_graphs(n)) == atlas[n]


def test_tree_counts_match_networkx():
    for n in range(2, 11):
        assert len(trees(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))


def test_known_counts():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert [len(trees(n)) for n in range(1, 13)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_corpus_limits():
    with pytest.raises(InstanceTooLarge):
        connected_graphs(9)
    with pytest.raises(InstanceTooLarge):
        trees(13)


def test_corpora_are_isomorphism_free():
    for n in range(1, 7):
        keys = [canonical_form(g) for g in connected_graphs(n)]
        assert len(keys) == len(set(keys))
        assert all(g.is_connected for g in connected_graphs(n))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)
    assert is_isomorphic(canonical_graph(g), g)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=4, max_n=7), graphs(min_n=4, max_n=7))
def test_isomorphism_matches_networkx(g, h):
    def nxg(x):
        y = nx.Graph()
        y.add_nodes_from(range(x.order))
        y.add_edges_from(x.edges)
        return y

    assert is_isomorphic(g, h) == nx.is_isomorphic(nxg(g), nxg(h))


def test_corpus_iteration():
    assert sum(1 for _ in iterate(AllConnected(6))) == 112
    assert sum(1 for _ in iterate(AllConnected(4, 1))) == 1 + 1 + 2 + 6
    assert sum(1 for _ in iterate(AllTrees(8))) == 23
    a = list(iterate(Random(5, 6, 0.5, seed=3)))
    b = list(iterate(Random(5, 6, 0.5, seed=3)))
    assert a == b and len(a) == 5
    dup = Explicit((path_graph(4), path_graph(4).relabel([3, 1, 2, 0]), cycle_graph(4)), dedup=True)
    assert len(list(iterate(dup))) == 2
    assert AllConnected(7, 1).describe() == "all-connected:1-7"


def test_distinct_small_graphs_not_isomorphic():
    assert not is_isomorphic(path_graph(4), star_graph(4))
    assert is_isomorphic(path_graph(4), path_graph(4).relabel([2, 0, 3, 1]))
