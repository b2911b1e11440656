"""Canonical forms for small graphs by individualization and refinement.

The canonical form is the largest upper-triangle adjacency code over all
labelings reachable from the refined degree partition.  Refinement and the
choice of cell to split depend only on isomorphism invariants, so two graphs
are isomorphic exactly when their forms agree.  Twins (vertices whose
neighborhoods agree apart from each other) in the cell being split are
interchangeable, so only one of them is individualized.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Stable color refinement; colors are ranks 0..k-1 of an ordered partition."""
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors, ncolors = new, len(ranking)


def _code(g: Graph, position: list[int]) -> int:
    n = g.order
    code = 0
    for u, v in g.edges:
        a, b = position[u], position[v]
        if a > b:
            a, b = b, a
        # bit index grows with the graph6 column-major upper-triangle order
        code |= 1 << (n * (n - 1) // 2 - 1 - (b * (b - 1) // 2 + a))
    return code


def canonical_code(g: Graph) -> int:
    adj = [tuple(sorted(a)) for a in g.adjacency]
    n = g.order
    best = -1

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            best = max(best, _code(g, colors))
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        reps: list[int] = []
        for v in cell:
            if not any(_twins(g, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            # individualize v: it keeps the cell's rank, everything above shifts up
            child = [c + 1 if c > target or (c == target and u != v) else c for u, c in enumerate(colors)]
            search(child)

    search([0] * n if n else [])
    return best


def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adjacency[u] - {v} == g.adjacency[v] - {u}


def canonical_form(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism-class key ``(order, code)``."""
    return g.order, canonical_code(g)


def canonical_graph(g: Graph) -> Graph:
    """The representative whose adjacency code is the canonical one."""
    from .graph import build_graph

    n, code = canonical_form(g)
    edges = []
    bit = n * (n - 1) // 2 - 1
    for b in range(1, n):
        for a in range(b):
            if code >> bit & 1:
                edges.append((a, b))
            bit -= 1
    return build_graph(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
