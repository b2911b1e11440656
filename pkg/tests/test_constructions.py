from __future__ import annotations

import pytest
from hypothesis import given, settings

from strongroman.constructions import (
    CONSTRUCTIONS,
    construct_diam2_bound,
    construct_diametral_path_bound,
    construct_domset_bound,
    construct_girth_cycle_bound,
    construct_matching_bound,
    construct_mindeg_bound,
    construct_total_domset_bound,
    diametral_path,
    matching_bound_case,
    shortest_cycle,
)
from strongroman.errors import (
    AcyclicInput,
    ConstructionError,
    GirthTooSmall,
    IsolatedVertexInGraph,
    MinDegreeTooSmall,
    NotConnected,
    NotDominatingSet,
    NotTotalDominatingSet,
    StarInput,
    TooSmall,
    WrongDiameter,
)
from strongroman.families import DoubleStar, realize
from strongroman.graph import (
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)
from strongroman.labeling import validate_tstrd
from strongroman.solvers import gamma_tstrd

from strategies import graphs

Q3 = build_graph(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
PETERSEN = build_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


def _sound(cert, g):
    assert validate_tstrd(g, cert.labeling).valid
    assert cert.weight <= cert.claimed_bound
    assert cert.claimed_bound >= gamma_tstrd(g)


@pytest.mark.parametrize(
    "build, g, bound, exact",
    [
        (construct_matching_bound, cycle_graph(4), 4, 4),
        (construct_matching_bound, realize(DoubleStar(2, 1)), 4, 4),
        (construct_matching_bound, path_graph(6), 7, 6),
        (construct_mindeg_bound, cycle_graph(5), 5, 5),
        (construct_mindeg_bound, complete_graph(4), 3, 3),
        (construct_mindeg_bound, path_graph(4), 4, 4),
        (construct_diam2_bound, cycle_graph(5), 5, 5),
        (construct_diam2_bound, star_graph(5), 4, 4),
        (construct_diam2_bound, cycle_graph(4), 5, 4),
        (construct_diametral_path_bound, complete_graph(4), 4, 3),
        (construct_diametral_path_bound, complete_bipartite(3, 3), 5, None),
        (construct_diametral_path_bound, complete_graph(5), 5, 4),
        (construct_girth_cycle_bound, complete_bipartite(3, 3), 5, None),
        (construct_girth_cycle_bound, Q3, 7, None),
        (construct_girth_cycle_bound, PETERSEN, 9, None),
        (construct_domset_bound, star_graph(6), 4, 4),
        (construct_domset_bound, path_graph(6), 6, 6),
        (construct_domset_bound, cycle_graph(4), 6, 4),
        (construct_total_domset_bound, path_graph(4), 4, 4),
        (construct_total_domset_bound, star_graph(6), 6, 4),
        (construct_total_domset_bound, cycle_graph(6), 8, 6),
    ],
)
def test_bound_examples(build, g, bound, exact):
    cert = build(g)
    assert cert.claimed_bound == bound
    _sound(cert, g)
    if exact is not None:
        assert gamma_tstrd(g) == exact


def test_achieved_bounds():
    assert construct_matching_bound(realize(DoubleStar(2, 1))).weight == 4
    assert construct_domset_bound(star_graph(6)).weight == 4
    assert construct_total_domset_bound(path_graph(4)).weight == 4


@pytest.mark.parametrize(
    "build, g, exc",
    [
        (construct_matching_bound, star_graph(5), StarInput),
        (construct_matching_bound, path_graph(3), TooSmall),
        (construct_matching_bound, build_graph(4, [(0, 1), (1, 2)]), IsolatedVertexInGraph),
        (construct_mindeg_bound, disjoint_union(path_graph(2), path_graph(2)), NotConnected),
        (construct_diam2_bound, path_graph(4), WrongDiameter),
        (construct_diametral_path_bound, cycle_graph(5), MinDegreeTooSmall),
        (construct_girth_cycle_bound, path_graph(5), AcyclicInput),
        (construct_girth_cycle_bound, complete_graph(4), GirthTooSmall),
        (construct_girth_cycle_bound, cycle_graph(6), MinDegreeTooSmall),
    ],
)
def test_preconditions(build, g, exc):
    with pytest.raises(exc):
        build(g)


def test_user_supplied_sets():
    g = path_graph(6)
    cert = construct_domset_bound(g, [1, 4])
    assert cert.claimed_bound == 6
    with pytest.raises(NotDominatingSet):
        construct_domset_bound(g, [0, 1])
    big = construct_domset_bound(g, [0, 2, 4, 5])
    assert big.claimed_bound == 12 and big.weight <= 12
    with pytest.raises(NotTotalDominatingSet):
        construct_total_domset_bound(g, [1, 4])
    assert construct_total_domset_bound(g, [1, 2, 3, 4]).claimed_bound == 8


def test_matching_cases_are_reachable():
    seen = {matching_bound_case(g) for g in [cycle_graph(6), path_graph(5), path_graph(6), realize(DoubleStar(2, 2)), cycle_graph(7)]}
    assert "S-empty" in seen and len(seen) >= 2


def test_diametral_path_and_shortest_cycle():
    p = diametral_path(path_graph(5))
    assert len(p) == 5 and {p[0], p[-1]} == {0, 4}
    assert len(shortest_cycle(complete_bipartite(3, 3))) == 4
    assert shortest_cycle(path_graph(4)) is None


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=8, connected=True))
def test_constructions_are_certified(g):
    for build in CONSTRUCTIONS.values():
        try:
            cert = build(g)
        except ConstructionError:
            continue
        _sound(cert, g)
