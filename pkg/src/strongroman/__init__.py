"""Exact total strong Roman domination: solvers, families, certified constructions
and an exhaustive theorem harness for small graphs."""

from __future__ import annotations

from .graph import Graph, build_graph, complete_graph, cycle_graph, path_graph, star_graph
from .labeling import Labeling, Verdict, validate_rd, validate_strd, validate_trd, validate_tstrd
from .solvers import (
    Engine,
    Kind,
    ParamBundle,
    compute_bundle,
    enumerate_optimal,
    gamma,
    gamma_r,
    gamma_strd,
    gamma_t,
    gamma_tr,
    gamma_tstrd,
)
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .verify import CheckOutcome, TheoremId, check, sweep

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "build_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "Labeling",
    "Verdict",
    "validate_rd",
    "validate_trd",
    "validate_strd",
    "validate_tstrd",
    "Engine",
    "Kind",
    "ParamBundle",
    "compute_bundle",
    "enumerate_optimal",
    "gamma",
    "gamma_t",
    "gamma_r",
    "gamma_tr",
    "gamma_strd",
    "gamma_tstrd",
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "TheoremId",
    "CheckOutcome",
    "check",
    "sweep",
]
