"""graph6, edge-list and labeling-document formats."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import Optional, TextIO

from .errors import GraphError, MalformedGraph6, ParseError
from .graph import Graph, build_graph

_MAX_SHORT = 62


def emit_graph6(g: Graph) -> str:
    n = g.order
    if n > _MAX_SHORT:
        raise ValueError(f"short graph6 holds at most {_MAX_SHORT} vertices, got {n}")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise MalformedGraph6("empty graph6 line")
    if any(not 63 <= ord(c) <= 126 for c in text):
        raise MalformedGraph6(f"character outside 63..126 in {text!r}")
    n = ord(text[0]) - 63
    if n > _MAX_SHORT:
        raise MalformedGraph6("long-format graph6 (more than 62 vertices) is not supported")
    if n == 0:
        raise MalformedGraph6("graphs of order 0 are not representable")
    nbits = n * (n - 1) // 2
    body = text[1:]
    if len(body) != -(-nbits // 6):
        raise MalformedGraph6(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        value = ord(c) - 63
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` (0-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
        pairs = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"malformed edge list: {exc}") from exc
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}")
    if any(len(p) != 2 for p in pairs):
        raise ParseError("each edge line needs exactly two vertex ids")
    return build_graph(n, pairs)  # type: ignore[arg-type]


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LabelingDocument:
    order: int
    labels: tuple[int, ...]
    graph6: Optional[str] = None
    edges_path: Optional[str] = None
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if len(self.labels) != self.order:
            raise ParseError(f"labeling document: {len(self.labels)} labels for order {self.order}")
        if any(x < 0 for x in self.labels):
            raise ParseError("labeling document: labels must be non-negative")

    @classmethod
    def from_json(cls, text: str) -> "LabelingDocument":
        try:
            data = json.loads(text)
            labels = tuple(int(x) for x in data["labels"])
            order = int(data.get("order", len(labels)))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad labeling document: {exc}") from exc
        graph = data.get("graph") or {}
        return cls(order, labels, graph.get("graph6"), graph.get("edges"))

    def to_json(self) -> str:
        data: dict = {"order": self.order, "labels": list(self.labels)}
        graph = {k: v for k, v in (("graph6", self.graph6), ("edges", self.edges_path)) if v}
        if graph:
            data["graph"] = graph
        return json.dumps(data)


def read_graph(*, graph6: Optional[str] = None, edges_text: Optional[str] = None) -> Graph:
    if graph6 is not None:
        return parse_graph6(graph6)
    if edges_text is not None:
        return parse_edge_list(edges_text)
    raise GraphError("no graph source given")


BASE_COLUMNS = (
    "graph6",
    "n",
    "m",
    "max_degree",
    "min_degree",
    "girth",
    "diameter",
    "gamma",
    "gamma_t",
    "gamma_r",
    "gamma_tr",
    "gamma_strd",
    "gamma_tstrd",
)


def report_columns(report) -> list[str]:
    return [*BASE_COLUMNS, *(t.value for t in report.theorems)]


def write_report_csv(report, fp: TextIO) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(report_columns(report))
    for row in report.rows:
        bundle = row.bundle.as_dict()
        cells = [row.graph6, row.n, row.m, row.max_degree, row.min_degree, row.girth, row.diameter]
        cells += [bundle[k] for k in BASE_COLUMNS[7:]]
        cells += [o.verdict for o in row.outcomes]
        writer.writerow(cells)


def report_summary(report) -> dict:
    return {
        "corpus": report.corpus,
        "graphs": len(report.rows),
        "theorems": {t.value: tally.as_dict() for t, tally in report.summary.items()},
        "violations": report.violations,
    }


def write_report_json(report, fp: TextIO) -> None:
    json.dump(report_summary(report), fp, indent=2)
    fp.write("\n")
