"""Exhaustive and random graph corpora.

Connected graphs of order ``n`` come from connected graphs of order ``n-1``
plus one new vertex joined to a non-empty subset (every connected graph has a
vertex whose removal leaves it connected).  Trees grow the same way by one
leaf.  Isomorphic duplicates are removed with :func:`canon.canonical_form`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .canon import canonical_form, canonical_graph
from .errors import InstanceTooLarge
from .graph import Graph, build_graph

MAX_CONNECTED_ORDER = 8
MAX_TREE_ORDER = 12


def _extend(graphs: Sequence[Graph], subsets) -> list[Graph]:
    seen: dict[tuple[int, int], Graph] = {}
    for g in graphs:
        n = g.order
        for nbrs in subsets(n):
            h = build_graph(n + 1, [*g.edges, *((u, n) for u in nbrs)])
            key = canonical_form(h)
            if key not in seen:
                seen[key] = canonical_graph(h)
    return [seen[k] for k in sorted(seen)]


def _nonempty_subsets(n: int):
    for mask in range(1, 1 << n):
        yield [u for u in range(n) if mask >> u & 1]


def _single_vertices(n: int):
    for u in range(n):
        yield [u]


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs of order exactly ``n``, one per isomorphism class."""
    if n < 1:
        return ()
    if n > MAX_CONNECTED_ORDER:
        raise InstanceTooLarge(f"connected corpus limited to order {MAX_CONNECTED_ORDER}")
    if n == 1:
        return (build_graph(1, []),)
    return tuple(_extend(connected_graphs(n - 1), _nonempty_subsets))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All trees of order exactly ``n``, one per isomorphism class."""
    if n < 1:
        return ()
    if n > MAX_TREE_ORDER:
        raise InstanceTooLarge(f"tree corpus limited to order {MAX_TREE_ORDER}")
    if n == 1:
        return (build_graph(1, []),)
    return tuple(_extend(trees(n - 1), _single_vertices))


def random_graphs(count: int, n: int, edge_prob: float, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < edge_prob]
        out.append(build_graph(n, edges))
    return out


@dataclass(frozen=True)
class AllConnected:
    max_n: int
    min_n: Optional[int] = None

    def describe(self) -> str:
        lo = self.max_n if self.min_n is None else self.min_n
        return f"all-connected:{lo}-{self.max_n}" if lo != self.max_n else f"all-connected:{self.max_n}"


@dataclass(frozen=True)
class AllTrees:
    max_n: int
    min_n: Optional[int] = None

    def describe(self) -> str:
        lo = self.max_n if self.min_n is None else self.min_n
        return f"all-trees:{lo}-{self.max_n}" if lo != self.max_n else f"all-trees:{self.max_n}"


@dataclass(frozen=True)
class Random:
    count: int
    n: int
    edge_prob: float
    seed: int

    def describe(self) -> str:
        return f"random:{self.count},{self.n},{self.edge_prob},{self.seed}"


@dataclass(frozen=True)
class Explicit:
    graphs: tuple[Graph, ...]
    dedup: bool = False

    def describe(self) -> str:
        return f"explicit:{len(self.graphs)}"


Corpus = Union[AllConnected, AllTrees, Random, Explicit]


def iterate(corpus: Corpus) -> Iterator[Graph]:
    """Graphs of the corpus in a fixed order.

    ``AllConnected(n)`` and ``AllTrees(n)`` mean order exactly ``n``; give
    ``min_n`` to sweep the range ``min_n..max_n``.
    """
    if isinstance(corpus, (AllConnected, AllTrees)):
        gen = connected_graphs if isinstance(corpus, AllConnected) else trees
        lo = corpus.max_n if corpus.min_n is None else corpus.min_n
        for n in range(lo, corpus.max_n + 1):
            yield from gen(n)
    elif isinstance(corpus, Random):
        yield from random_graphs(corpus.count, corpus.n, corpus.edge_prob, corpus.seed)
    elif isinstance(corpus, Explicit):
        if not corpus.dedup:
            yield from corpus.graphs
            return
        seen = set()
        for g in corpus.graphs:
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                yield g
    else:
        raise TypeError(f"not a corpus: {corpus!r}")
