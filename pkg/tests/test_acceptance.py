"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import time
from math import ceil

import pytest

from strongroman.constructions import CONSTRUCTIONS
from strongroman.corpus import AllConnected, AllTrees, connected_graphs, iterate, trees
from strongroman.errors import ConstructionError, IsolatedVertexInGraph
from strongroman.families import DoubleStar, realize
from strongroman.formats import emit_graph6, parse_graph6
from strongroman.graph import UNBOUNDED, complement, cycle_graph, girth, matching_number, path_graph, star_graph
from strongroman.labeling import ceil_half, validate_tstrd
from strongroman.recognize import girth_list, in_thn_list
from strongroman.canon import canonical_form
from strongroman.solvers import gamma_r, gamma_strd, gamma_tr, gamma_tstrd
from strongroman.verify import INEQUALITY_THEOREMS, TheoremId, check_leaves_zero, sweep


@pytest.fixture(scope="module")
def connected_report():
    return sweep(AllConnected(7, 1), workers=1)


@pytest.fixture(scope="module")
def connected_by_g6():
    return {emit_graph6(g): g for g in iterate(AllConnected(7, 1))}


def test_c1_closed_forms(criterion):
    start = time.perf_counter()
    mismatches = []
    for n in range(3, 13):
        for g, name in ((path_graph(n), "P"), (cycle_graph(n), "C")):
            if gamma_r(g) != ceil(2 * n / 3):
                mismatches.append(f"gamma_R({name}_{n})")
    for n in range(3, 11):
        for g, name in ((path_graph(n), "P"), (cycle_graph(n), "C")):
            if not gamma_tr(g) == gamma_tstrd(g) == n:
                mismatches.append(f"gamma_tR/gamma_tStR({name}_{n})")
    for n in range(4, 11):
        if gamma_tstrd(star_graph(n)) != ceil((n + 2) / 2):
            mismatches.append(f"star K_1,{n - 1}")
    for p in range(1, 5):
        for q in range(1, p + 1):
            if q == 1 and p == 1:
                want = 4
            elif q == 1:
                want = ceil(p / 2) + 3
            else:
                want = ceil(p / 2) + ceil(q / 2) + 2
            if gamma_tstrd(realize(DoubleStar(p, q))) != want:
                mismatches.append(f"DS_{p},{q}")
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    criterion("1", ok, f"closed forms, {len(mismatches)} mismatches {mismatches}, {elapsed:.1f}s (limit 60s)")
    assert ok


def test_c2_engine_equivalence(criterion):
    start = time.perf_counter()
    disagreements, compared, order7 = [], 0, 0
    for n in range(2, 8):
        for g in connected_graphs(n):
            compared += 1
            order7 += n == 7
            if gamma_tstrd(g, "oracle") != gamma_tstrd(g, "bb"):
                disagreements.append(emit_graph6(g))
    elapsed = time.perf_counter() - start
    ok = not disagreements and order7 == 853 and elapsed < 600
    criterion(
        "2",
        ok,
        f"oracle vs branch-and-bound on {compared} connected graphs n<=7 ({order7} of order 7): "
        f"{len(disagreements)} disagreements, {elapsed:.1f}s (limit 600s)",
    )
    assert ok


def test_c3_inequality_sweep(criterion, connected_report):
    start = time.perf_counter()
    report = sweep(AllConnected(7, 1), INEQUALITY_THEOREMS, workers=1)
    elapsed = time.perf_counter() - start
    per = {t.value: tally.violations for t, tally in report.summary.items() if tally.violations}
    ok = report.ok and elapsed < 1800
    criterion("3", ok, f"{len(INEQUALITY_THEOREMS)} theorems over {len(report.rows)} graphs, violations {per or 0}, {elapsed:.1f}s")
    assert ok


def _set_line(name, expected, found, graphs):
    """Compare graph6 sets up to isomorphism; ``graphs`` maps graph6 to Graph."""
    exp = {canonical_form(graphs.get(x) or parse_graph6(x)): x for x in expected}
    got = {canonical_form(graphs.get(x) or parse_graph6(x)): x for x in found}
    extra = sorted(got[k] for k in got.keys() - exp.keys())
    missing = sorted(exp[k] for k in exp.keys() - got.keys())
    return extra, missing, f"{name}: {len(found)} found, extra {extra}, missing {missing}"


def test_c4a_tstrd_equals_n(criterion, connected_report, connected_by_g6):
    found, recognized = set(), set()
    for row in connected_report.rows:
        if row.n < 2:
            continue
        if row.bundle.gamma_tstrd == row.n:
            found.add(row.graph6)
        if in_thn_list(connected_by_g6[row.graph6]):
            recognized.add(row.graph6)
    extra, missing, line = _set_line("gamma_tStR = n vs recognized classes", recognized, found, connected_by_g6)
    ok = not extra and not missing
    criterion("4a", ok, line)
    assert ok


def test_c4b_girth_equality_set(criterion, connected_report, connected_by_g6):
    listed = {canonical_form(h) for h in girth_list().values()}
    found = set()
    for row in connected_report.rows:
        g = connected_by_g6[row.graph6]
        gi = girth(g)
        if g.order < 2 or (gi is not UNBOUNDED and gi < 4):
            continue
        bound = g.order - g.max_degree + matching_number(g) * ceil_half(g.max_degree - 1)
        if row.bundle.gamma_tstrd == bound:
            found.add(canonical_form(g))
    names = {canonical_form(h): n for n, h in girth_list().items()}
    by_key = {canonical_form(g): g6 for g6, g in connected_by_g6.items()}
    extra = sorted(by_key[k] for k in found - listed)
    missing = sorted(names[k] for k in listed - found)
    ok = not extra and not missing
    criterion("4b", ok, f"matching-bound equality at girth>=4: {len(found)} graphs, extra {extra}, missing {missing}")
    assert ok


def test_c4c_gt_plus_one(criterion, connected_report, connected_by_g6):
    found = {r.graph6 for r in connected_report.rows if r.n >= 3 and r.bundle.gamma_tstrd == r.bundle.gamma_t + 1}
    expected = {emit_graph6(path_graph(3)), emit_graph6(cycle_graph(3))}
    extra, missing, line = _set_line("gamma_tStR = gamma_t + 1 vs {P_3, C_3}", expected, found, connected_by_g6)
    ok = not extra and not missing
    criterion("4c", ok, line)
    assert ok


def test_c4d_nordhaus_gaddum(criterion, connected_by_g6):
    sums_ok, at_max = True, set()
    for g6, g in connected_by_g6.items():
        h = complement(g)
        if g.order < 4 or not h.is_connected:
            continue
        total = gamma_tstrd(g) + gamma_tstrd(h)
        sums_ok &= 8 <= total <= 2 * g.order
        if total == 2 * g.order:
            at_max.add(g6)
    expected = {emit_graph6(path_graph(4))}
    extra, missing, line = _set_line("sum = 2n vs {P_4}", expected, at_max, connected_by_g6)
    ok = sums_ok and not extra and not missing
    criterion("4d", ok, f"8 <= sum <= 2n: {sums_ok}; {line}")
    assert ok


def test_c5_trees(criterion):
    report = sweep(AllTrees(12, 1), [TheoremId.THM_TREE_GT, TheoremId.THM_TREE_NS], workers=1)
    bounds_ok = report.ok
    sharp = {
        "P_3": path_graph(3),
        "P_4": path_graph(4),
        "P_5": path_graph(5),
        "DS_1,2": realize(DoubleStar(2, 1)),
        "DS_2,2": realize(DoubleStar(2, 2)),
        "K_1,3": star_graph(4),
    }
    not_sharp = []
    for name, t in sharp.items():
        s = sum(1 for v in t.vertices() if any(t.degree(u) == 1 for u in t.adjacency[v]))
        if gamma_tstrd(t) != ceil((t.order + s) / t.max_degree) + 1:
            not_sharp.append(name)
    leaves_fail, checked = [], 0
    for n in range(4, 11):
        for t in trees(n):
            if t.max_degree == n - 1:
                continue
            checked += 1
            if not check_leaves_zero(t).holds:
                leaves_fail.append(emit_graph6(t))
    criterion("5a", bounds_ok, f"tree lower bounds over {len(report.rows)} trees n<=12: {len(report.violations)} violations")
    criterion("5b", not not_sharp, f"sharpness of the support bound on 6 trees, not attained by {not_sharp}")
    criterion(
        "5c",
        not leaves_fail,
        f"leaves-zero optimal function on {checked} non-star trees n<=10: {len(leaves_fail)} failures, first {leaves_fail[:3]}",
    )
    ok = bounds_ok and not not_sharp and not leaves_fail
    criterion("5", ok, "tree suite (5a and 5b and 5c)")
    assert ok


def test_c6_construction_certificates(criterion):
    failures, runs = [], {name: 0 for name in CONSTRUCTIONS}
    for g in iterate(AllConnected(7, 1)):
        exact = None
        for name, build in CONSTRUCTIONS.items():
            try:
                cert = build(g)
            except (ConstructionError, IsolatedVertexInGraph):
                continue
            except AssertionError as exc:
                failures.append(f"{name}:{emit_graph6(g)}:{exc}")
                continue
            runs[name] += 1
            exact = gamma_tstrd(g) if exact is None else exact
            if not (validate_tstrd(g, cert.labeling).valid and cert.weight <= cert.claimed_bound and cert.claimed_bound >= exact):
                failures.append(f"{name}:{emit_graph6(g)}")
    ok = not failures
    criterion("6", ok, f"certificates {runs}, {len(failures)} failures {failures[:3]}")
    assert ok


def test_c7_sharpness_witnesses(criterion):
    values = {}
    for name, g in (("P_4", path_graph(4)), ("C_4", cycle_graph(4)), ("P_6", path_graph(6)), ("C_6", cycle_graph(6))):
        values[name] = (gamma_tstrd(g), 2 * (gamma_strd(g) - 1))
    ok = all(a == b for a, b in values.values())
    criterion("7", ok, f"gamma_tStR vs 2(gamma_StR-1): {values}")
    assert ok


def test_c8_enumeration_counts(criterion):
    connected = [len(connected_graphs(n)) for n in range(4, 8)]
    tree_counts = [len(trees(n)) for n in range(4, 11)]
    ok = connected == [6, 21, 112, 853] and tree_counts == [2, 3, 6, 11, 23, 47, 106]
    criterion("8", ok, f"connected n=4..7 {connected}, trees n=4..10 {tree_counts}")
    assert ok
