"""Vertex labelings and membership tests for the four Roman function classes.

``validate_*`` return a :class:`Verdict` listing every violation found, which
is what the harness prints.  The ``is_*`` predicates answer the same question
as a bare boolean and are what the exhaustive oracle calls in its inner loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import IsolatedVertexInGraph, SizeMismatch
from .graph import Graph


def ceil_half(k: int) -> int:
    return (k + 1) // 2


def strong_cap(g: Graph) -> int:
    """Largest label a strong Roman function may use: ``ceil(Delta/2) + 1``."""
    return ceil_half(g.max_degree) + 1


def vertex_cap(g: Graph, v: int) -> int:
    """Largest label ever useful at ``v``; it has at most ``deg(v)`` zero neighbors."""
    return 1 + ceil_half(g.degree(v))


@dataclass(frozen=True)
class Labeling:
    labels: tuple[int, ...]
    graph_order: int

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph_order:
            raise SizeMismatch(f"{len(self.labels)} labels for order {self.graph_order}")
        if any(x < 0 for x in self.labels):
            raise ValueError("labels must be non-negative")

    @classmethod
    def of(cls, labels: Sequence[int]) -> "Labeling":
        labels = tuple(int(x) for x in labels)
        return cls(labels, len(labels))

    @property
    def weight(self) -> int:
        return sum(self.labels)

    @property
    def b0(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 0)

    @property
    def b1(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x == 1)

    @property
    def b2(self) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.labels) if x >= 2)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return self.graph_order


@dataclass(frozen=True)
class UnguardedZero:
    vertex: int


@dataclass(frozen=True)
class WeakDefender:
    zero_vertex: int
    best_defender: int
    required_label: int
    actual_label: int


@dataclass(frozen=True)
class IsolatedPositive:
    vertex: int


@dataclass(frozen=True)
class LabelOverCap:
    vertex: int
    cap: int


Violation = Union[UnguardedZero, WeakDefender, IsolatedPositive, LabelOverCap]


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"kind": type(x).__name__, **x.__dict__} for x in self.violations],
        }


def _as_labels(g: Graph, f: Union[Labeling, Sequence[int]]) -> tuple[int, ...]:
    labels = f.labels if isinstance(f, Labeling) else tuple(f)
    if len(labels) != g.order:
        raise SizeMismatch(f"labeling has {len(labels)} entries, graph has order {g.order}")
    return labels


def _cap_violations(labels: Sequence[int], cap: int) -> list[Violation]:
    return [LabelOverCap(v, cap) for v, x in enumerate(labels) if x > cap]


def _isolated_positive(g: Graph, labels: Sequence[int]) -> list[Violation]:
    return [
        IsolatedPositive(v)
        for v in g.vertices()
        if labels[v] > 0 and not any(labels[u] > 0 for u in g.adjacency[v])
    ]


def zero_neighbor_count(g: Graph, labels: Sequence[int], u: int) -> int:
    return sum(1 for w in g.adjacency[u] if labels[w] == 0)


def validate_rd(g: Graph, f: Union[Labeling, Sequence[int]]) -> Verdict:
    labels = _as_labels(g, f)
    out = _cap_violations(labels, 2)
    for v in g.vertices():
        if labels[v] == 0 and not any(labels[u] >= 2 for u in g.adjacency[v]):
            out.append(UnguardedZero(v))
    return Verdict(tuple(out))


def validate_trd(g: Graph, f: Union[Labeling, Sequence[int]]) -> Verdict:
    labels = _as_labels(g, f)
    return Verdict(validate_rd(g, labels).violations + tuple(_isolated_positive(g, labels)))


def validate_strd(g: Graph, f: Union[Labeling, Sequence[int]]) -> Verdict:
    labels = _as_labels(g, f)
    out = _cap_violations(labels, strong_cap(g))
    zeros = [zero_neighbor_count(g, labels, u) for u in g.vertices()]
    for v in g.vertices():
        if labels[v] != 0:
            continue
        defenders = sorted(u for u in g.adjacency[v] if labels[u] >= 2)
        if not defenders:
            out.append(UnguardedZero(v))
            continue
        # smallest shortfall wins, lowest id on ties
        shortfall, u = min((1 + ceil_half(zeros[u]) - labels[u], u) for u in defenders)
        if shortfall > 0:
            out.append(WeakDefender(v, u, 1 + ceil_half(zeros[u]), labels[u]))
    return Verdict(tuple(out))


def validate_tstrd(g: Graph, f: Union[Labeling, Sequence[int]]) -> Verdict:
    if g.has_isolated_vertex:
        raise IsolatedVertexInGraph("a graph with an isolated vertex has no total strong Roman function")
    labels = _as_labels(g, f)
    return Verdict(validate_strd(g, labels).violations + tuple(_isolated_positive(g, labels)))


# Boolean predicates for hot loops.  ``adj`` is ``g.adjacency`` or any
# equivalent sequence of neighbor collections.

def is_rd(adj: Sequence, labels: Sequence[int]) -> bool:
    for v, x in enumerate(labels):
        if x > 2:
            return False
        if x == 0 and not any(labels[u] == 2 for u in adj[v]):
            return False
    return True


def is_trd(adj: Sequence, labels: Sequence[int]) -> bool:
    if not is_rd(adj, labels):
        return False
    return all(x == 0 or any(labels[u] for u in adj[v]) for v, x in enumerate(labels))


def is_strd(adj: Sequence, labels: Sequence[int], cap: int) -> bool:
    for v, x in enumerate(labels):
        if x > cap:
            return False
        if x:
            continue
        for u in adj[v]:
            y = labels[u]
            if y >= 2:
                z = sum(1 for w in adj[u] if labels[w] == 0)
                if y >= 1 + (z + 1) // 2:
                    break
        else:
            return False
    return True


def is_tstrd(adj: Sequence, labels: Sequence[int], cap: int) -> bool:
    if not is_strd(adj, labels, cap):
        return False
    return all(x == 0 or any(labels[u] for u in adj[v]) for v, x in enumerate(labels))
