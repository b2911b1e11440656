"""Structural recognizers for the extremal graph classes."""

from __future__ import annotations

import enum
from functools import lru_cache

from .canon import canonical_form, is_isomorphic
from .families import FIXED_EDGES, _family_g, _family_h, _subdivided_star, fixed_graph
from .graph import Graph, cycle_graph, is_tree, path_graph, star_graph


class EqualityClass(str, enum.Enum):
    THN = "ThnList"
    GIRTH = "GirthList"


def is_path(g: Graph) -> bool:
    return is_tree(g) and g.max_degree <= 2


def is_cycle(g: Graph) -> bool:
    return g.order >= 3 and g.is_connected and all(d == 2 for d in g.degrees)


def is_corona(g: Graph) -> bool:
    """``F o K_1`` for some graph F: every non-leaf carries exactly one pendant leaf."""
    if g.has_isolated_vertex or g.order % 2:
        return False
    if g.order == 2:
        return g.size == 1
    degs = g.degrees
    for v in g.vertices():
        if degs[v] == 1:
            (s,) = g.adjacency[v]
            if degs[s] == 1:
                return False
        elif sum(1 for u in g.adjacency[v] if degs[u] == 1) != 1:
            return False
    return True


def is_subdivided_star(g: Graph) -> bool:
    """``S(K_{1,k})`` for some ``k >= 1``."""
    if g.order % 2 == 0 or g.order < 3:
        return False
    return is_isomorphic(g, _subdivided_star((g.order - 1) // 2))


def in_family_g(g: Graph) -> bool:
    if g.order < 6 or g.order % 2:
        return False
    k = (g.order - 4) // 2
    return any(is_isomorphic(g, _family_g(k1, k - k1)) for k1 in range((k + 1) // 2, k + 1))


def in_family_h(g: Graph) -> bool:
    n = g.order
    for p in range(1, n):
        for q in range(1, p + 1):
            r = n - 2 - 2 * (p + q)
            if r >= 0 and is_isomorphic(g, _family_h(p, q, r)):
                return True
    return False


def is_union_of_k2(g: Graph) -> bool:
    return all(d == 1 for d in g.degrees)


def is_c4_or_corona_components(g: Graph) -> bool:
    """Each component is ``C_4`` or ``H o K_1`` with ``H`` connected."""
    for comp in g.components():
        h, _ = g.induced_subgraph(comp)
        if not (is_isomorphic(h, cycle_graph(4)) or is_corona(h)):
            return False
    return True


def in_thn_list(g: Graph) -> bool:
    if not g.is_connected:
        return False
    return (
        is_path(g)
        or is_cycle(g)
        or is_corona(g)
        or is_subdivided_star(g)
        or in_family_g(g)
        or in_family_h(g)
    )


@lru_cache(maxsize=None)
def girth_list() -> dict[str, Graph]:
    """The graphs named as equality cases of the matching bound among girth >= 4."""
    out = {
        "P_4": path_graph(4),
        "P_5": path_graph(5),
        "C_4": cycle_graph(4),
        "C_5": cycle_graph(5),
        "DS_{1,2}": _double_star_12(),
        "S(K_{1,3})": _subdivided_star(3),
    }
    for name in FIXED_EDGES:
        out[name] = fixed_graph(name)
    return out


def _double_star_12() -> Graph:
    from .families import _double_star

    return _double_star(2, 1)


@lru_cache(maxsize=None)
def _girth_keys() -> dict[tuple[int, int], str]:
    return {canonical_form(h): name for name, h in girth_list().items()}


def girth_list_name(g: Graph) -> str | None:
    return _girth_keys().get(canonical_form(g))


def in_girth_list(g: Graph) -> bool:
    return girth_list_name(g) is not None


def recognize_equality_class(g: Graph, class_id: EqualityClass | str) -> bool:
    class_id = EqualityClass(class_id)
    if class_id is EqualityClass.THN:
        return in_thn_list(g)
    return in_girth_list(g)


def is_p3_or_c3(g: Graph) -> bool:
    return g.order == 3 and g.is_connected


def is_p4(g: Graph) -> bool:
    return is_isomorphic(g, path_graph(4))


def is_star_graph(g: Graph) -> bool:
    return g.order >= 2 and is_isomorphic(g, star_graph(g.order))
