"""Certified labelings built the way the upper-bound proofs build them.

Every public ``construct_*`` returns a :class:`CertifiedLabeling` whose
labeling has been re-validated as a total strong Roman function and whose
weight is at most the claimed bound; otherwise :class:`CertificateFailure`
is raised.  Wherever a proof says "pick any", the lowest vertex id is taken.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    AcyclicInput,
    CertificateFailure,
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
from .graph import UNBOUNDED, Graph, bfs_distances, diameter, girth, is_star, matching_number
from .labeling import Labeling, ceil_half, validate_tstrd
from .solvers import (
    Kind,
    enumerate_optimal,
    is_dominating_set,
    is_total_dominating_set,
    minimum_dominating_set,
    minimum_total_dominating_set,
)


@dataclass(frozen=True)
class CertifiedLabeling:
    labeling: Labeling
    claimed_bound: int
    theorem: str
    case: str = ""

    @property
    def weight(self) -> int:
        return self.labeling.weight

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "case": self.case,
            "labels": list(self.labeling.labels),
            "weight": self.weight,
            "claimed_bound": self.claimed_bound,
        }


def _certify(g: Graph, labels: list[int], bound: int, theorem: str, case: str = "") -> CertifiedLabeling:
    f = Labeling.of(labels)
    verdict = validate_tstrd(g, f)
    if not verdict.valid:
        raise CertificateFailure(f"{theorem}{' ' + case if case else ''}: invalid labeling {labels}: {verdict.violations}")
    if f.weight > bound:
        raise CertificateFailure(f"{theorem}: weight {f.weight} exceeds claimed bound {bound}")
    return CertifiedLabeling(f, bound, theorem, case)


def _require_isolated_free(g: Graph) -> None:
    if g.has_isolated_vertex:
        raise IsolatedVertexInGraph("construction needs a graph without isolated vertices")


def _require_connected(g: Graph) -> None:
    if not g.is_connected:
        raise NotConnected("construction needs a connected graph")


def _min_cover(universe: set[int], candidates: list[int], g: Graph) -> tuple[int, ...]:
    """Smallest subset of ``candidates`` dominating ``universe``, lexicographically first."""
    for k in range(1, len(candidates) + 1):
        for sub in combinations(candidates, k):
            covered = set()
            for x in sub:
                covered |= g.adjacency[x]
            if universe <= covered:
                return sub
    raise AssertionError("candidates do not cover the universe")


def matching_bound_case(g: Graph) -> str:
    """Which branch of the matching-bound construction applies to ``g``."""
    return _matching_plan(g)[0]


def _matching_plan(g: Graph):
    delta = g.max_degree
    v = min(g.vertices(), key=lambda x: (-g.degree(x), x))
    nv = g.adjacency[v]
    x_set = set(g.vertices()) - nv - {v}
    s_set = {x for x in x_set if not (g.adjacency[x] & x_set)}
    if not s_set:
        return "S-empty", v, x_set, s_set, ()
    s_prime = _min_cover(s_set, sorted(nv), g)
    full_cover = set(s_prime) == set(nv)
    all_isolated = s_set == x_set
    if full_cover and all_isolated:
        case = "case-1"
    elif full_cover:
        case = "case-2"
    elif all_isolated:
        case = "case-3"
    else:
        case = "case-4"
    return case, v, x_set, s_set, s_prime


def construct_matching_bound(g: Graph) -> CertifiedLabeling:
    """Labeling of weight at most ``n - Delta + alpha' * ceil((Delta-1)/2)``."""
    _require_isolated_free(g)
    if g.order < 4:
        raise TooSmall("needs order >= 4")
    if is_star(g):
        raise StarInput("stars are excluded")
    delta = g.max_degree
    top = ceil_half(delta - 1) + 1
    bound = g.order - delta + matching_number(g) * ceil_half(delta - 1)
    case, v, x_set, s_set, s_prime = _matching_plan(g)
    labels = [0] * g.order
    if case == "S-empty":
        labels[v] = top
        labels[min(g.adjacency[v])] = 1
        for x in x_set:
            labels[x] = 1
    else:
        rest = x_set - s_set
        if case in ("case-1", "case-2"):
            labels[v] = 1
        else:
            labels[v] = 1 + ceil_half(delta - len(s_prime))
        for x in s_prime:
            labels[x] = top
        if case in ("case-2", "case-4"):
            for x in rest:
                labels[x] = 1
    return _certify(g, labels, bound, "THM_S", case)


def construct_mindeg_bound(g: Graph) -> CertifiedLabeling:
    _require_connected(g)
    if g.order < 2:
        raise TooSmall("needs order >= 2")
    delta = g.min_degree
    v = min(g.vertices(), key=lambda x: (g.degree(x), x))
    u = min(g.adjacency[v])
    labels = [1] * g.order
    for x in g.adjacency[v]:
        labels[x] = 0
    labels[u] = 1
    labels[v] = ceil_half(delta - 1) + 1
    return _certify(g, labels, g.order - (delta - 1) // 2, "PROP_MINDEG")


def construct_diam2_bound(g: Graph) -> CertifiedLabeling:
    if diameter(g) != 2:
        raise WrongDiameter("needs diameter exactly 2")
    delta, small = g.max_degree, g.min_degree
    v = min(g.vertices(), key=lambda x: (g.degree(x), x))
    labels = [0] * g.order
    labels[v] = 1
    for x in g.adjacency[v]:
        labels[x] = 1 + ceil_half(delta - 1)
    return _certify(g, labels, small * (1 + ceil_half(delta - 1)) + 1, "PROP_DIAM2")


def diametral_path(g: Graph) -> list[int]:
    """A shortest path realizing the diameter: first pair found scanning sources by id,
    then reconstructed through lowest-id BFS parents."""
    best = (-1, 0, 0)
    for s in g.vertices():
        dist = bfs_distances(g, s)
        for t in g.vertices():
            d = dist[t]
            if d is not UNBOUNDED and d > best[0]:
                best = (d, s, t)
    _, s, t = best
    return _bfs_path(g, s, t)


def _bfs_path(g: Graph, s: int, t: int, banned: Optional[tuple[int, int]] = None) -> Optional[list[int]]:
    parent = {s: s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in sorted(g.adjacency[x]):
            if banned and {x, y} == set(banned):
                continue
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def shortest_cycle(g: Graph) -> Optional[list[int]]:
    """Vertices of a shortest cycle in cyclic order, or None for a forest.

    Scans edges in sorted order, closing each with a shortest path that avoids
    it; the first edge achieving the minimum wins."""
    best = None
    for u, v in g.sorted_edges():
        p = _bfs_path(g, u, v, banned=(u, v))
        if p is not None and (best is None or len(p) < len(best)):
            best = p
    return best


def _optimal_strd_on(g: Graph, walk: list[int], closed: bool) -> dict[int, int]:
    """Lexicographically first minimum strong Roman labeling of the path/cycle on ``walk``."""
    from .graph import cycle_graph, path_graph

    h = cycle_graph(len(walk)) if closed else path_graph(len(walk))
    f = enumerate_optimal(h, Kind.STRD, cap=None).functions[0]
    return {walk[i]: f[i] for i in range(len(walk))}


def construct_diametral_path_bound(g: Graph) -> CertifiedLabeling:
    _require_connected(g)
    if g.min_degree < 3:
        raise MinDegreeTooSmall("needs minimum degree >= 3")
    path = diametral_path(g)
    d = len(path) - 1
    labels = [1] * g.order
    for v, x in _optimal_strd_on(g, path, closed=False).items():
        labels[v] = x
    return _certify(g, labels, g.order - (d + 1) // 3, "PROP_DIAMPATH")


def construct_girth_cycle_bound(g: Graph) -> CertifiedLabeling:
    _require_connected(g)
    gi = girth(g)
    if gi is UNBOUNDED:
        raise AcyclicInput("graph has no cycle")
    if gi < 4:
        raise GirthTooSmall("needs girth >= 4")
    if g.min_degree < 3:
        raise MinDegreeTooSmall("needs minimum degree >= 3")
    cycle = shortest_cycle(g)
    assert cycle is not None and len(cycle) == gi
    labels = [1] * g.order
    for v, x in _optimal_strd_on(g, cycle, closed=True).items():
        labels[v] = x
    return _certify(g, labels, g.order - gi // 3, "PROP_GIRTH")


def construct_domset_bound(g: Graph, s: Optional[Iterable[int]] = None) -> CertifiedLabeling:
    """Defenders on a dominating set plus one helper per isolated member.

    The bound is ``(ceil((Delta-1)/2) + 2) * |S|``, which is the theorem's bound
    when ``S`` is a minimum dominating set (the default)."""
    _require_isolated_free(g)
    if s is None:
        dom = minimum_dominating_set(g)
    else:
        dom = frozenset(s)
        if not is_dominating_set(g, dom):
            raise NotDominatingSet(f"{sorted(dom)} is not a dominating set")
    top = ceil_half(g.max_degree - 1) + 1
    labels = [0] * g.order
    for v in dom:
        labels[v] = top
    for v in sorted(dom):
        if not g.adjacency[v] & dom:
            labels[min(g.adjacency[v])] = 1
    return _certify(g, labels, (top + 1) * len(dom), "THM_THREE")


def construct_total_domset_bound(g: Graph, s: Optional[Iterable[int]] = None) -> CertifiedLabeling:
    _require_isolated_free(g)
    if s is None:
        tdom = minimum_total_dominating_set(g)
    else:
        tdom = frozenset(s)
        if not is_total_dominating_set(g, tdom):
            raise NotTotalDominatingSet(f"{sorted(tdom)} is not a total dominating set")
    top = 1 + ceil_half(g.max_degree - 1)
    labels = [top if v in tdom else 0 for v in g.vertices()]
    return _certify(g, labels, ceil_half(g.max_degree + 1) * len(tdom), "OBS1")


CONSTRUCTIONS = {
    "matching": construct_matching_bound,
    "mindeg": construct_mindeg_bound,
    "diam2": construct_diam2_bound,
    "diampath": construct_diametral_path_bound,
    "girth": construct_girth_cycle_bound,
    "domset": construct_domset_bound,
    "tdomset": construct_total_domset_bound,
}
