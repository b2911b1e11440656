"""Exact domination parameters.

Two independent engines compute the four labeling parameters
(``gamma_R``, ``gamma_tR``, ``gamma_StR`` and the total strong one):

* ``Engine.ORACLE`` walks every label vector in the per-vertex capped domains
  and keeps the lightest one the definitional predicate accepts.
* ``Engine.BRANCH_BOUND`` assigns each vertex a class (0, 1 or "defender") in
  descending-degree order.  A defender's label is not branched on: it is the
  least value its final zero-neighborhood allows, ``max(2, 1 + ceil(z/2))``
  for the strong variants and 2 for the plain Roman ones.  A minimum-weight
  function never carries a defender label above that value (lowering it by one
  keeps the function valid), so the class search is exact and also reaches
  every optimal function.

Disconnected graphs are solved per component and summed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional, Union

from .errors import InstanceTooLarge, IsolatedVertexInGraph
from .graph import Graph
from .labeling import Labeling, ceil_half, is_rd, is_strd, is_trd, is_tstrd, strong_cap

ENUMERATION_CAP = 10


class Infeasible(enum.Enum):
    INFEASIBLE = "infeasible"

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __str__(self) -> str:
        return "infeasible"


INFEASIBLE = Infeasible.INFEASIBLE

MaybeInt = Union[int, Infeasible]


class Engine(str, enum.Enum):
    ORACLE = "oracle"
    BRANCH_BOUND = "bb"


class Kind(str, enum.Enum):
    """The four labeling problems."""

    RD = "rd"
    TRD = "trd"
    STRD = "strd"
    TSTRD = "tstrd"

    @property
    def total(self) -> bool:
        return self in (Kind.TRD, Kind.TSTRD)

    @property
    def strong(self) -> bool:
        return self in (Kind.STRD, Kind.TSTRD)


def _engine(engine: Union[Engine, str]) -> Engine:
    return engine if isinstance(engine, Engine) else Engine(engine)


def _require_isolated_free(g: Graph) -> None:
    if g.has_isolated_vertex:
        raise IsolatedVertexInGraph("total variants are undefined on graphs with an isolated vertex")


# Vertex-subset parameters


def _first_set(g: Graph, total: bool) -> tuple[int, ...]:
    masks = g.masks
    full = (1 << g.order) - 1
    closed = masks if total else tuple(m | (1 << v) for v, m in enumerate(masks))
    for k in range(1, g.order + 1):
        for s in combinations(range(g.order), k):
            cover = 0
            for v in s:
                cover |= closed[v]
            if cover == full:
                return s
    raise AssertionError("unreachable: V itself dominates")


def minimum_dominating_set(g: Graph) -> frozenset[int]:
    """The lexicographically first minimum dominating set."""
    return frozenset(_first_set(g, total=False))


def minimum_total_dominating_set(g: Graph) -> frozenset[int]:
    _require_isolated_free(g)
    return frozenset(_first_set(g, total=True))


def all_minimum_dominating_sets(g: Graph) -> list[frozenset[int]]:
    k = gamma(g)
    closed = [m | (1 << v) for v, m in enumerate(g.masks)]
    full = (1 << g.order) - 1
    out = []
    for s in combinations(range(g.order), k):
        cover = 0
        for v in s:
            cover |= closed[v]
        if cover == full:
            out.append(frozenset(s))
    return out


def gamma(g: Graph) -> int:
    return len(_first_set(g, total=False))


def gamma_t(g: Graph) -> int:
    _require_isolated_free(g)
    return len(_first_set(g, total=True))


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    d = set(d)
    return all(v in d or g.adjacency[v] & d for v in g.vertices())


def is_total_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    d = set(d)
    return all(g.adjacency[v] & d for v in g.vertices())


def is_efficient_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    """Every vertex has exactly one member of ``d`` in its closed neighborhood."""
    d = set(d)
    return all(len(g.closed_neighbors(v) & d) == 1 for v in g.vertices())


# Labeling engines


def _defender_cost(strong: bool, zeros: int) -> int:
    if not strong:
        return 2
    return max(2, 1 + ceil_half(zeros))


class _ClassSearch:
    """Branch-and-bound over (B0, B1, defender) class assignments."""

    def __init__(self, g: Graph, kind: Kind, find_all: bool):
        self.n = g.order
        self.adj = [sorted(a) for a in g.adjacency]
        self.strong = kind.strong
        self.total = kind.total
        self.find_all = find_all
        self.order = sorted(range(self.n), key=lambda v: (-g.degree(v), v))
        n = self.n
        self.cls = [-1] * n
        self.zc = [0] * n
        self.unc = [len(a) for a in self.adj]
        self.b2c = [0] * n
        self.pc = [0] * n
        self.cost = 0
        # every class search has the all-ones function (weight n) to fall back on
        self.best = n
        self.solutions: list[tuple[int, ...]] = []
        self.found = False

    def run(self) -> None:
        self._branch(0)

    def _labels(self) -> tuple[int, ...]:
        out = []
        for v in range(self.n):
            c = self.cls[v]
            out.append(c if c < 2 else _defender_cost(self.strong, self.zc[v]))
        return tuple(out)

    def _assign(self, v: int, c: int) -> None:
        self.cls[v] = c
        zc, unc, b2c, pc, cls = self.zc, self.unc, self.b2c, self.pc, self.cls
        strong = self.strong
        if c == 1:
            self.cost += 1
        elif c == 2:
            self.cost += _defender_cost(strong, zc[v])
        for u in self.adj[v]:
            unc[u] -= 1
            if c == 0:
                if cls[u] == 2 and strong:
                    self.cost += _defender_cost(True, zc[u] + 1) - _defender_cost(True, zc[u])
                zc[u] += 1
            else:
                pc[u] += 1
                if c == 2:
                    b2c[u] += 1

    def _unassign(self, v: int) -> None:
        c = self.cls[v]
        zc, unc, b2c, pc, cls = self.zc, self.unc, self.b2c, self.pc, self.cls
        strong = self.strong
        for u in self.adj[v]:
            unc[u] += 1
            if c == 0:
                zc[u] -= 1
                if cls[u] == 2 and strong:
                    self.cost -= _defender_cost(True, zc[u] + 1) - _defender_cost(True, zc[u])
            else:
                pc[u] -= 1
                if c == 2:
                    b2c[u] -= 1
        if c == 1:
            self.cost -= 1
        elif c == 2:
            self.cost -= _defender_cost(strong, zc[v])
        cls[v] = -1

    def _dead(self, v: int) -> bool:
        cls, unc, b2c, pc = self.cls, self.unc, self.b2c, self.pc
        total = self.total
        for x in (v, *self.adj[v]):
            if unc[x]:
                continue
            c = cls[x]
            if c == 0:
                if not b2c[x]:
                    return True
            elif c > 0:
                if total and not pc[x]:
                    return True
            elif total and not pc[x]:
                # cannot be positive (no positive neighbor) nor zero (no defender)
                return True
        return False

    def _lower_bound(self) -> int:
        cls, unc, b2c = self.cls, self.unc, self.b2c
        bound = self.cost
        used: set[int] = set()
        for x in range(self.n):
            if cls[x] == -1 and not unc[x] and not b2c[x]:
                bound += 1
                used.add(x)
        # zeros still waiting for a defender: a greedy family of them with
        # pairwise disjoint candidate sets needs that many distinct defenders
        for x in range(self.n):
            if cls[x] == 0 and not b2c[x]:
                cand = {u for u in self.adj[x] if cls[u] == -1}
                if cand.isdisjoint(used):
                    used |= cand
                    bound += 2
        return bound

    def _branch(self, i: int) -> None:
        if i == self.n:
            if self.cost < self.best:
                self.best = self.cost
                self.solutions = [self._labels()]
                self.found = True
            elif self.cost == self.best:
                self.solutions.append(self._labels())
                self.found = True
            return
        v = self.order[i]
        for c in (0, 2, 1):
            self._assign(v, c)
            if not self._dead(v):
                lb = self._lower_bound()
                if lb < self.best or (self.find_all and lb == self.best):
                    self._branch(i + 1)
            self._unassign(v)


def _domains(g: Graph, kind: Kind) -> list[range]:
    if not kind.strong:
        return [range(3)] * g.order
    cap = strong_cap(g)
    return [range(min(cap, 1 + ceil_half(g.degree(v))) + 1) for v in g.vertices()]


def _predicate(g: Graph, kind: Kind):
    adj = [tuple(a) for a in g.adjacency]
    if kind is Kind.RD:
        return lambda f: is_rd(adj, f)
    if kind is Kind.TRD:
        return lambda f: is_trd(adj, f)
    cap = strong_cap(g)
    if kind is Kind.STRD:
        return lambda f: is_strd(adj, f, cap)
    return lambda f: is_tstrd(adj, f, cap)


def _oracle(g: Graph, kind: Kind, find_all: bool) -> tuple[int, list[tuple[int, ...]]]:
    ok = _predicate(g, kind)
    best = None
    found: list[tuple[int, ...]] = []
    for f in product(*_domains(g, kind)):
        w = sum(f)
        if best is not None and (w > best or (w == best and not find_all)):
            continue
        if ok(f):
            if best is None or w < best:
                best, found = w, [f]
            else:
                found.append(f)
    assert best is not None
    return best, sorted(found)


def _solve_connected(g: Graph, kind: Kind, engine: Engine) -> int:
    if engine is Engine.ORACLE:
        return _oracle(g, kind, find_all=False)[0]
    search = _ClassSearch(g, kind, find_all=False)
    search.run()
    return search.best


def _solve(g: Graph, kind: Kind, engine: Union[Engine, str]) -> int:
    engine = _engine(engine)
    if kind.total:
        _require_isolated_free(g)
    comps = g.components()
    if len(comps) == 1:
        return _solve_connected(g, kind, engine)
    return sum(_solve_connected(g.induced_subgraph(c)[0], kind, engine) for c in comps)


def gamma_r(g: Graph, engine: Union[Engine, str] = Engine.BRANCH_BOUND) -> int:
    return _solve(g, Kind.RD, engine)


def gamma_tr(g: Graph, engine: Union[Engine, str] = Engine.BRANCH_BOUND) -> int:
    return _solve(g, Kind.TRD, engine)


def gamma_strd(g: Graph, engine: Union[Engine, str] = Engine.BRANCH_BOUND) -> int:
    return _solve(g, Kind.STRD, engine)


def gamma_tstrd(g: Graph, engine: Union[Engine, str] = Engine.BRANCH_BOUND) -> int:
    """Total strong Roman domination number."""
    return _solve(g, Kind.TSTRD, engine)


@dataclass(frozen=True)
class OptimalSet:
    weight: int
    functions: tuple[Labeling, ...]


def enumerate_optimal(
    g: Graph,
    kind: Union[Kind, str] = Kind.TSTRD,
    engine: Union[Engine, str] = Engine.BRANCH_BOUND,
    cap: Optional[int] = ENUMERATION_CAP,
) -> OptimalSet:
    """Every minimum-weight function of the given class, in lexicographic order."""
    kind = Kind(kind)
    if kind.total:
        _require_isolated_free(g)
    if cap is not None and g.order > cap:
        raise InstanceTooLarge(f"order {g.order} exceeds the enumeration cap {cap}")
    if _engine(engine) is Engine.ORACLE:
        weight, found = _oracle(g, kind, find_all=True)
    else:
        search = _ClassSearch(g, kind, find_all=True)
        search.run()
        weight, found = search.best, sorted(search.solutions)
    return OptimalSet(weight, tuple(Labeling(f, g.order) for f in found))


def enumerate_optimal_tstrd(g: Graph, cap: Optional[int] = ENUMERATION_CAP) -> OptimalSet:
    return enumerate_optimal(g, Kind.TSTRD, cap=cap)


@dataclass(frozen=True)
class ParamBundle:
    gamma: int
    gamma_t: MaybeInt
    gamma_r: int
    gamma_tr: MaybeInt
    gamma_strd: int
    gamma_tstrd: MaybeInt

    FIELDS = ("gamma", "gamma_t", "gamma_r", "gamma_tr", "gamma_strd", "gamma_tstrd")

    def as_dict(self) -> dict[str, Union[int, str]]:
        return {k: (v if isinstance(v, int) else str(v)) for k, v in ((k, getattr(self, k)) for k in self.FIELDS)}


def compute_bundle(g: Graph, engine: Union[Engine, str] = Engine.BRANCH_BOUND) -> ParamBundle:
    feasible = not g.has_isolated_vertex
    return ParamBundle(
        gamma=gamma(g),
        gamma_t=gamma_t(g) if feasible else INFEASIBLE,
        gamma_r=gamma_r(g, engine),
        gamma_tr=gamma_tr(g, engine) if feasible else INFEASIBLE,
        gamma_strd=gamma_strd(g, engine),
        gamma_tstrd=gamma_tstrd(g, engine) if feasible else INFEASIBLE,
    )
