"""Immutable simple graphs and the structural invariants the theorem checks need.

Vertices are the integers ``0 .. order-1``.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v``.  Infinite quantities (girth of a forest, distance
between components) are the explicit :data:`UNBOUNDED` marker, never a
sentinel integer.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Union

from .errors import DuplicateEdge, GraphError, LoopEdge, VertexOutOfRange


class Unbounded(enum.Enum):
    UNBOUNDED = "inf"

    def __repr__(self) -> str:
        return "UNBOUNDED"

    def __str__(self) -> str:
        return "inf"


UNBOUNDED = Unbounded.UNBOUNDED

GirthValue = Union[int, Unbounded]
Distance = Union[int, Unbounded]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.order < 1:
            raise GraphError(f"order must be positive, got {self.order}")
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in adj))

    # basic accessors

    @property
    def n(self) -> int:
        return self.order

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks."""
        return tuple(sum(1 << u for u in a) for a in self.adjacency)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, old_ids)`` where vertex ``i`` of ``H`` is ``old_ids[i]``."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_graph(len(old), edges), old

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return build_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def components(self) -> list[list[int]]:
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    @property
    def is_connected(self) -> bool:
        return len(self.components()) == 1

    @property
    def has_isolated_vertex(self) -> bool:
        return 0 in self.degrees

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.sorted_edges()})"


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting loops, repeats and out-of-range endpoints."""
    if order < 1:
        raise GraphError(f"order must be positive, got {order}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRange(f"edge {(u, v)} has an endpoint outside 0..{order - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)
    return Graph(order, frozenset(seen))


def complement(g: Graph) -> Graph:
    n = g.order
    return Graph(n, frozenset((u, v) for u, v in combinations(range(n), 2) if (u, v) not in g.edges))


def bfs_distances(g: Graph, source: int) -> list[Distance]:
    dist: list[Distance] = [UNBOUNDED] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in g.adjacency[x]:
            if dist[y] is UNBOUNDED:
                dist[y] = dx + 1  # type: ignore[operator]
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[Distance]]:
    return [bfs_distances(g, s) for s in g.vertices()]


def diameter(g: Graph) -> Distance:
    """Largest distance; UNBOUNDED for a disconnected graph."""
    best = 0
    for row in distance_matrix(g):
        for d in row:
            if d is UNBOUNDED:
                return UNBOUNDED
            best = max(best, d)
    return best


def girth(g: Graph) -> GirthValue:
    """Length of a shortest cycle via a BFS from every vertex."""
    best: GirthValue = UNBOUNDED
    for s in g.vertices():
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    # a non-tree edge closes a closed walk through s; its length
                    # bounds the girth and the minimum over all s is exact
                    length = dist[x] + dist[y] + 1
                    if best is UNBOUNDED or length < best:
                        best = length
    return best


def matching_number(g: Graph) -> int:
    """Maximum matching size by exhaustive branching memoized on covered vertices.

    Branches on the lowest vertex that still has an uncovered neighbor: either
    it stays unmatched or it is matched to one of those neighbors.
    """
    masks = g.masks
    full = (1 << g.order) - 1
    memo: dict[int, int] = {}

    def best(covered: int) -> int:
        key = covered
        if key in memo:
            return memo[key]
        free = full & ~covered
        result = 0
        while free:
            low = free & -free
            free ^= low
            options = masks[low.bit_length() - 1] & ~covered
            if not options:
                covered |= low
                continue
            result = best(covered | low)
            while options:
                w = options & -options
                options ^= w
                result = max(result, 1 + best(covered | low | w))
            break
        memo[key] = result
        return result

    return best(0)


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices() if g.degree(v) == 1)


def support_vertices(g: Graph) -> frozenset[int]:
    lv = leaves(g)
    return frozenset(v for v in g.vertices() if g.adjacency[v] & lv)


def leaves_of(g: Graph, v: int) -> frozenset[int]:
    """The leaves adjacent to ``v``."""
    return frozenset(u for u in g.adjacency[v] if g.degree(u) == 1)


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and g.is_connected


def is_star(g: Graph) -> bool:
    """``K_{1,k}`` for some ``k >= 1``."""
    return is_tree(g) and g.order >= 2 and g.max_degree == g.order - 1


@dataclass(frozen=True)
class StructuralProfile:
    max_degree: int
    min_degree: int
    diameter: Distance
    girth: GirthValue
    matching_number: int
    leaves: frozenset[int]
    support_vertices: frozenset[int]
    is_connected: bool
    is_tree: bool
    has_isolated_vertex: bool


def profile(g: Graph) -> StructuralProfile:
    return StructuralProfile(
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        diameter=diameter(g),
        girth=girth(g),
        matching_number=matching_number(g),
        leaves=leaves(g),
        support_vertices=support_vertices(g),
        is_connected=g.is_connected,
        is_tree=is_tree(g),
        has_isolated_vertex=g.has_isolated_vertex,
    )


# Small named graphs used throughout tests, families and recognizers.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` with center 0."""
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.order
    return build_graph(offset, edges)
