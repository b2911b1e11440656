"""Theorem harness: hypotheses, conclusions and corpus sweeps.

Every :class:`TheoremId` is paired with one check that first decides whether
the statement's side conditions hold for the graph (connectivity, order,
degree, girth, diameter, tree-ness, star exclusion) and only then compares the
conclusion against exact solver values.  Inapplicable graphs never count as
violations.
"""

from __future__ import annotations

import enum
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Union

from .corpus import Corpus, iterate
from .errors import InstanceTooLarge, NotATree, StarInput
from .graph import UNBOUNDED, Graph, complement, profile
from .labeling import Labeling, ceil_half
from .recognize import (
    EqualityClass,
    in_girth_list,
    in_thn_list,
    is_c4_or_corona_components,
    is_corona,
    is_cycle,
    is_p3_or_c3,
    is_p4,
    is_path,
    is_union_of_k2,
    recognize_equality_class,
)
from .solvers import (
    ENUMERATION_CAP,
    Kind,
    ParamBundle,
    all_minimum_dominating_sets,
    compute_bundle,
    enumerate_optimal,
    gamma_tstrd,
    is_efficient_dominating_set,
)

__all__ = [
    "TheoremId",
    "CheckOutcome",
    "INEQUALITY_THEOREMS",
    "check",
    "check_all",
    "check_obs_ab",
    "check_leaves_zero",
    "check_ceil_gt_characterization",
    "check_thm_three_consequence",
    "recognize_equality_class",
    "EqualityClass",
    "Tally",
    "Row",
    "Report",
    "sweep",
]


class TheoremId(str, enum.Enum):
    OBS1 = "OBS1"
    OBS_O2 = "OBS_O2"
    OBS_AB = "OBS_AB"
    NEW1 = "NEW1"
    OBS_O3 = "OBS_O3"
    PATH_R = "PATH_R"
    PATH_TR = "PATH_TR"
    AH_EQ_N_TR = "AH_EQ_N_TR"
    TH4 = "TH4"
    TH5 = "TH5"
    TH6 = "TH6"
    THM_S = "THM_S"
    THM_GIRTH_EQ = "THM_GIRTH_EQ"
    PROP_MINDEG = "PROP_MINDEG"
    PROP_DIAM2 = "PROP_DIAM2"
    PROP_DIAMPATH = "PROP_DIAMPATH"
    PROP_GIRTH = "PROP_GIRTH"
    THM_TSTRD_EQ_N = "THM_TSTRD_EQ_N"
    PROP_NG = "PROP_NG"
    THM_2STRD = "THM_2STRD"
    PROP_EQ_GT = "PROP_EQ_GT"
    PROP_GT_PLUS1 = "PROP_GT_PLUS1"
    PROP_CEIL_GT = "PROP_CEIL_GT"
    THM_THREE = "THM_THREE"
    PROP_3N2 = "PROP_3N2"
    LEM_LEAVES_ZERO = "LEM_LEAVES_ZERO"
    THM_TREE_GT = "THM_TREE_GT"
    THM_TREE_NS = "THM_TREE_NS"


INEQUALITY_THEOREMS = (
    TheoremId.OBS1,
    TheoremId.OBS_O2,
    TheoremId.OBS_O3,
    TheoremId.NEW1,
    TheoremId.THM_S,
    TheoremId.PROP_MINDEG,
    TheoremId.PROP_DIAM2,
    TheoremId.PROP_DIAMPATH,
    TheoremId.PROP_GIRTH,
    TheoremId.THM_2STRD,
    TheoremId.THM_THREE,
    TheoremId.PROP_3N2,
    TheoremId.PROP_EQ_GT,
    TheoremId.PROP_GT_PLUS1,
)

TREE_THEOREMS = (TheoremId.THM_TREE_GT, TheoremId.THM_TREE_NS, TheoremId.LEM_LEAVES_ZERO)

Witness = Union[Labeling, frozenset, None]


@dataclass(frozen=True)
class CheckOutcome:
    theorem: TheoremId
    applicable: bool
    holds: bool = True
    equality: bool = False
    witness: Witness = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "n/a"
        if not self.holds:
            return "FAIL"
        return "eq" if self.equality else "ok"

    def as_dict(self) -> dict:
        w = self.witness
        if isinstance(w, Labeling):
            w = list(w.labels)
        elif isinstance(w, frozenset):
            w = sorted(w)
        return {
            "theorem": self.theorem.value,
            "applicable": self.applicable,
            "holds": self.holds,
            "equality": self.equality,
            "witness": w,
            "detail": self.detail,
        }


def _na(t: TheoremId, why: str = "") -> CheckOutcome:
    return CheckOutcome(t, False, detail=why)


class _Context:
    """Per-graph values shared by all checks, computed on first use."""

    def __init__(self, g: Graph, bundle: Optional[ParamBundle] = None, cap: Optional[int] = ENUMERATION_CAP):
        self.g = g
        self.cap = cap
        if bundle is not None:
            self.__dict__["bundle"] = bundle

    @cached_property
    def bundle(self) -> ParamBundle:
        return compute_bundle(self.g)

    @cached_property
    def prof(self):
        return profile(self.g)

    @cached_property
    def optimal(self):
        return enumerate_optimal(self.g, Kind.TSTRD, cap=self.cap)

    @cached_property
    def complement_tstrd(self) -> int:
        return gamma_tstrd(complement(self.g))

    @property
    def n(self) -> int:
        return self.g.order

    @property
    def big_delta(self) -> int:
        return self.g.max_degree

    @property
    def small_delta(self) -> int:
        return self.g.min_degree

    @property
    def feasible(self) -> bool:
        return not self.g.has_isolated_vertex

    @property
    def within_cap(self) -> bool:
        return self.cap is None or self.n <= self.cap

    def min_function(self) -> Labeling:
        return enumerate_optimal(self.g, Kind.TSTRD, cap=None).functions[0]


def _upper(ctx: _Context, t: TheoremId, bound: int, label: str) -> CheckOutcome:
    value = ctx.bundle.gamma_tstrd
    ok = value <= bound
    return CheckOutcome(t, True, ok, value == bound, None, f"gamma_tstrd={value} <= {label}={bound}")


def _lower(ctx: _Context, t: TheoremId, bound: int, label: str) -> CheckOutcome:
    value = ctx.bundle.gamma_tstrd
    ok = value >= bound
    witness = None if ok else ctx.min_function()
    return CheckOutcome(t, True, ok, value == bound, witness, f"gamma_tstrd={value} >= {label}={bound}")


def _iff(t: TheoremId, lhs: bool, rhs: bool, detail: str, extra_ok: bool = True) -> CheckOutcome:
    return CheckOutcome(t, True, lhs == rhs and extra_ok, lhs, None, f"{detail}; value-side={lhs}, class-side={rhs}")


def _obs1(ctx: _Context) -> CheckOutcome:
    t = TheoremId.OBS1
    if not ctx.feasible:
        return _na(t, "isolated vertex")
    b = ctx.bundle
    hi = ceil_half(ctx.big_delta + 1) * b.gamma_t
    ok = b.gamma_tr <= b.gamma_tstrd <= hi
    return CheckOutcome(t, True, ok, b.gamma_tstrd == hi, None, f"{b.gamma_tr} <= {b.gamma_tstrd} <= {hi}")


def _obs_o2(ctx: _Context) -> CheckOutcome:
    t = TheoremId.OBS_O2
    if ctx.n < 3 or not ctx.feasible:
        return _na(t, "needs n >= 3 without isolated vertices")
    v = ctx.bundle.gamma_tstrd
    return CheckOutcome(t, True, 3 <= v <= ctx.n, v == ctx.n, None, f"3 <= {v} <= {ctx.n}")


def _obs_ab(ctx: _Context) -> CheckOutcome:
    t = TheoremId.OBS_AB
    if not ctx.g.is_connected or ctx.n < 3 or not ctx.within_cap:
        return _na(t, "needs connected, n >= 3, within enumeration cap")
    return _obs_ab_outcome(ctx)


def _new1(ctx: _Context) -> CheckOutcome:
    t = TheoremId.NEW1
    if not ctx.g.is_connected or ctx.big_delta > 2:
        return _na(t, "needs connected with max degree <= 2")
    b = ctx.bundle
    return CheckOutcome(t, True, b.gamma_strd == b.gamma_r, True, None, f"gamma_strd={b.gamma_strd}, gamma_r={b.gamma_r}")


def _obs_o3(ctx: _Context) -> CheckOutcome:
    t = TheoremId.OBS_O3
    if not ctx.g.is_connected or not ctx.feasible or ctx.big_delta > 3:
        return _na(t, "needs connected, n >= 2, max degree <= 3")
    b = ctx.bundle
    return CheckOutcome(t, True, b.gamma_tstrd == b.gamma_tr, True, None, f"gamma_tstrd={b.gamma_tstrd}, gamma_tr={b.gamma_tr}")


def _path_r(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PATH_R
    if not (is_path(ctx.g) or is_cycle(ctx.g)):
        return _na(t, "not a path or cycle")
    want = -(-2 * ctx.n // 3)
    v = ctx.bundle.gamma_r
    return CheckOutcome(t, True, v == want, True, None, f"gamma_r={v}, ceil(2n/3)={want}")


def _path_tr(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PATH_TR
    if ctx.n < 2 or not (is_path(ctx.g) or is_cycle(ctx.g)):
        return _na(t, "not a nontrivial path or cycle")
    v = ctx.bundle.gamma_tr
    return CheckOutcome(t, True, v == ctx.n, True, None, f"gamma_tr={v}, n={ctx.n}")


def _ah_eq_n_tr(ctx: _Context) -> CheckOutcome:
    t = TheoremId.AH_EQ_N_TR
    if not ctx.g.is_connected or not ctx.feasible:
        return _na(t, "needs connected, n >= 2")
    return _iff(t, ctx.bundle.gamma_tr == ctx.n, in_thn_list(ctx.g), f"gamma_tr={ctx.bundle.gamma_tr}, n={ctx.n}")


def _th4(ctx: _Context) -> CheckOutcome:
    t = TheoremId.TH4
    if not ctx.feasible:
        return _na(t, "isolated vertex")
    b = ctx.bundle
    return _iff(t, b.gamma_t == b.gamma_tr, is_union_of_k2(ctx.g), f"gamma_t={b.gamma_t}, gamma_tr={b.gamma_tr}")


def _th5(ctx: _Context) -> CheckOutcome:
    t = TheoremId.TH5
    if not ctx.g.is_connected or ctx.n < 3:
        return _na(t, "needs connected, n >= 3")
    b = ctx.bundle
    return _iff(t, b.gamma_tr == b.gamma_t + 1, ctx.big_delta == ctx.n - 1, f"gamma_tr={b.gamma_tr}, gamma_t={b.gamma_t}")


def _th6(ctx: _Context) -> CheckOutcome:
    t = TheoremId.TH6
    if not ctx.feasible:
        return _na(t, "isolated vertex")
    gm = ctx.bundle.gamma
    return _iff(
        t, 2 * gm == ctx.n, is_c4_or_corona_components(ctx.g), f"gamma={gm}, n={ctx.n}", extra_ok=2 * gm <= ctx.n
    )


def _matching_bound(ctx: _Context) -> int:
    return ctx.n - ctx.big_delta + ctx.prof.matching_number * ceil_half(ctx.big_delta - 1)


def _thm_s(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_S
    if ctx.n < 4 or not ctx.feasible or _is_star(ctx.g):
        return _na(t, "needs n >= 4, no isolated vertex, not a star")
    return _upper(ctx, t, _matching_bound(ctx), "n-Delta+alpha'*ceil((Delta-1)/2)")


def _thm_girth_eq(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_GIRTH_EQ
    gi = ctx.prof.girth
    if not ctx.g.is_connected or not ctx.feasible or (gi is not UNBOUNDED and gi < 4):
        return _na(t, "needs connected, n >= 2, girth >= 4")
    bound = _matching_bound(ctx)
    v = ctx.bundle.gamma_tstrd
    return _iff(t, v == bound, in_girth_list(ctx.g), f"gamma_tstrd={v}, matching bound={bound}")


def _prop_mindeg(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_MINDEG
    if not ctx.g.is_connected or ctx.n < 2:
        return _na(t, "needs connected, n >= 2")
    return _upper(ctx, t, ctx.n - (ctx.small_delta - 1) // 2, "n-floor((delta-1)/2)")


def _prop_diam2(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_DIAM2
    if ctx.prof.diameter != 2:
        return _na(t, "diameter is not 2")
    bound = ctx.small_delta * (1 + ceil_half(ctx.big_delta - 1)) + 1
    return _upper(ctx, t, bound, "delta*(1+ceil((Delta-1)/2))+1")


def _prop_diampath(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_DIAMPATH
    if not ctx.g.is_connected or ctx.small_delta < 3:
        return _na(t, "needs connected with min degree >= 3")
    return _upper(ctx, t, ctx.n - (ctx.prof.diameter + 1) // 3, "n-floor((diam+1)/3)")


def _prop_girth(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_GIRTH
    gi = ctx.prof.girth
    if not ctx.g.is_connected or ctx.small_delta < 3 or gi is UNBOUNDED or gi < 4:
        return _na(t, "needs connected, finite girth >= 4, min degree >= 3")
    return _upper(ctx, t, ctx.n - gi // 3, "n-floor(g/3)")


def _thm_tstrd_eq_n(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_TSTRD_EQ_N
    if not ctx.g.is_connected or not ctx.feasible:
        return _na(t, "needs connected, n >= 2")
    v = ctx.bundle.gamma_tstrd
    return _iff(t, v == ctx.n, in_thn_list(ctx.g), f"gamma_tstrd={v}, n={ctx.n}")


def _prop_ng(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_NG
    if ctx.n < 4 or not ctx.g.is_connected or not complement(ctx.g).is_connected:
        return _na(t, "needs n >= 4 with graph and complement connected")
    total = ctx.bundle.gamma_tstrd + ctx.complement_tstrd
    lhs, rhs = total == 2 * ctx.n, is_p4(ctx.g)
    ok = 8 <= total <= 2 * ctx.n and lhs == rhs
    return CheckOutcome(t, True, ok, lhs, None, f"8 <= {ctx.bundle.gamma_tstrd}+{ctx.complement_tstrd}={total} <= {2 * ctx.n}; P4={rhs}")


def _thm_2strd(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_2STRD
    if ctx.n < 4 or not ctx.feasible:
        return _na(t, "needs n >= 4, min degree >= 1")
    return _upper(ctx, t, 2 * (ctx.bundle.gamma_strd - 1), "2(gamma_strd-1)")


def _prop_eq_gt(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_EQ_GT
    if not ctx.feasible:
        return _na(t, "isolated vertex")
    b = ctx.bundle
    return _iff(
        t,
        b.gamma_tstrd == b.gamma_t,
        is_union_of_k2(ctx.g),
        f"gamma_tstrd={b.gamma_tstrd}, gamma_t={b.gamma_t}",
        extra_ok=b.gamma_tstrd >= b.gamma_t,
    )


def _prop_gt_plus1(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_GT_PLUS1
    if not ctx.g.is_connected or ctx.n < 3:
        return _na(t, "needs connected, n >= 3")
    b = ctx.bundle
    return _iff(t, b.gamma_tstrd == b.gamma_t + 1, is_p3_or_c3(ctx.g), f"gamma_tstrd={b.gamma_tstrd}, gamma_t={b.gamma_t}")


def _prop_ceil_gt(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_CEIL_GT
    if not ctx.feasible or ctx.big_delta <= 1 or not ctx.within_cap:
        return _na(t, "needs no isolated vertex, Delta > 1, within enumeration cap")
    return _ceil_gt_outcome(ctx)


def _thm_three(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_THREE
    if not ctx.feasible:
        return _na(t, "isolated vertex")
    if not ctx.within_cap:
        out = _upper(ctx, t, (ceil_half(ctx.big_delta - 1) + 2) * ctx.bundle.gamma, "(ceil((Delta-1)/2)+2)*gamma")
        if out.equality:
            return CheckOutcome(t, False, detail="equality case beyond enumeration cap")
        return out
    return _three_outcome(ctx)


def _prop_3n2(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_3N2
    if not ctx.g.is_connected or not ctx.feasible:
        return _na(t, "needs connected without isolated vertices")
    total = ctx.bundle.gamma + ctx.bundle.gamma_tstrd
    lhs = 2 * total == 3 * ctx.n
    rhs = is_isomorphic_c4(ctx.g) or is_corona(ctx.g)
    return _iff(t, lhs, rhs, f"gamma+gamma_tstrd={total}, 3n/2={3 * ctx.n / 2}", extra_ok=2 * total <= 3 * ctx.n)


def is_isomorphic_c4(g: Graph) -> bool:
    return g.order == 4 and is_cycle(g)


def _lem_leaves_zero(ctx: _Context) -> CheckOutcome:
    t = TheoremId.LEM_LEAVES_ZERO
    if not ctx.prof.is_tree or ctx.n < 3 or _is_star(ctx.g) or not ctx.within_cap:
        return _na(t, "needs a non-star tree within enumeration cap")
    return _leaves_zero_outcome(ctx)


def _thm_tree_gt(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_TREE_GT
    if not ctx.prof.is_tree or ctx.n < 2:
        return _na(t, "needs a nontrivial tree")
    b = ctx.bundle
    return _lower(ctx, t, b.gamma_t + ceil_half(ctx.big_delta - 1), "gamma_t+ceil((Delta-1)/2)")


def _thm_tree_ns(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_TREE_NS
    if not ctx.prof.is_tree or ctx.n < 3:
        return _na(t, "needs a tree of order >= 3")
    s = len(ctx.prof.support_vertices)
    bound = -(-(ctx.n + s) // ctx.big_delta) + 1
    return _lower(ctx, t, bound, f"ceil((n+s)/Delta)+1 with s={s}")


def _is_star(g: Graph) -> bool:
    return g.order >= 2 and g.size == g.order - 1 and g.max_degree == g.order - 1


# enumeration-backed outcomes, shared by check() and the standalone functions


def _obs_ab_outcome(ctx: _Context) -> CheckOutcome:
    t = TheoremId.OBS_AB
    lv, sv = ctx.prof.leaves, ctx.prof.support_vertices
    opt = ctx.optimal
    for f in opt.functions:
        b0, b2 = f.b0, f.b2
        problems = []
        if len(b2) > len(b0):
            problems.append(f"|B2|={len(b2)} > |B0|={len(b0)}")
        if lv & b2:
            problems.append(f"leaves in B2: {sorted(lv & b2)}")
        if sv & b0:
            problems.append(f"support vertices in B0: {sorted(sv & b0)}")
        if problems:
            return CheckOutcome(t, True, False, False, f, "; ".join(problems))
    return CheckOutcome(t, True, True, False, None, f"all {len(opt.functions)} optimal functions satisfy it")


def _leaves_zero_outcome(ctx: _Context) -> CheckOutcome:
    t = TheoremId.LEM_LEAVES_ZERO
    lv = ctx.prof.leaves
    opt = ctx.optimal
    for f in opt.functions:
        if not lv & (f.b1 | f.b2):
            return CheckOutcome(t, True, True, False, f, f"leaves {sorted(lv)} all zero")
    return CheckOutcome(t, True, False, False, None, f"none of {len(opt.functions)} optimal functions has all leaves zero")


def _ceil_gt_outcome(ctx: _Context) -> CheckOutcome:
    t = TheoremId.PROP_CEIL_GT
    g, delta = ctx.g, ctx.big_delta
    target = ceil_half(delta + 1) * ctx.bundle.gamma_t
    lhs = ctx.bundle.gamma_tstrd == target
    qualifying = None
    for f in ctx.optimal.functions:
        if f.b1:
            continue
        b0 = f.b0
        if all(len(g.adjacency[w] & b0) == delta - 1 for w in f.b2):
            qualifying = f
            break
    rhs = qualifying is not None
    detail = f"gamma_tstrd={ctx.bundle.gamma_tstrd}, ceil((Delta+1)/2)*gamma_t={target}; qualifying function={rhs}"
    return CheckOutcome(t, True, lhs == rhs, lhs, qualifying, detail)


def _three_outcome(ctx: _Context) -> CheckOutcome:
    t = TheoremId.THM_THREE
    bound = (ceil_half(ctx.big_delta - 1) + 2) * ctx.bundle.gamma
    v = ctx.bundle.gamma_tstrd
    detail = f"gamma_tstrd={v} <= (ceil((Delta-1)/2)+2)*gamma={bound}"
    if v > bound:
        return CheckOutcome(t, True, False, False, None, detail)
    if v < bound:
        return CheckOutcome(t, True, True, False, None, detail)
    for s in all_minimum_dominating_sets(ctx.g):
        if not is_efficient_dominating_set(ctx.g, s):
            return CheckOutcome(t, True, False, True, s, detail + f"; gamma-set {sorted(s)} is not efficient")
        if any(ctx.g.degree(x) != ctx.big_delta for x in s):
            return CheckOutcome(t, True, False, True, s, detail + f"; gamma-set {sorted(s)} has a vertex of degree < Delta")
    return CheckOutcome(t, True, True, True, None, detail + "; every gamma-set efficient with degree-Delta members")


_CHECKS: dict[TheoremId, Callable[[_Context], CheckOutcome]] = {
    TheoremId.OBS1: _obs1,
    TheoremId.OBS_O2: _obs_o2,
    TheoremId.OBS_AB: _obs_ab,
    TheoremId.NEW1: _new1,
    TheoremId.OBS_O3: _obs_o3,
    TheoremId.PATH_R: _path_r,
    TheoremId.PATH_TR: _path_tr,
    TheoremId.AH_EQ_N_TR: _ah_eq_n_tr,
    TheoremId.TH4: _th4,
    TheoremId.TH5: _th5,
    TheoremId.TH6: _th6,
    TheoremId.THM_S: _thm_s,
    TheoremId.THM_GIRTH_EQ: _thm_girth_eq,
    TheoremId.PROP_MINDEG: _prop_mindeg,
    TheoremId.PROP_DIAM2: _prop_diam2,
    TheoremId.PROP_DIAMPATH: _prop_diampath,
    TheoremId.PROP_GIRTH: _prop_girth,
    TheoremId.THM_TSTRD_EQ_N: _thm_tstrd_eq_n,
    TheoremId.PROP_NG: _prop_ng,
    TheoremId.THM_2STRD: _thm_2strd,
    TheoremId.PROP_EQ_GT: _prop_eq_gt,
    TheoremId.PROP_GT_PLUS1: _prop_gt_plus1,
    TheoremId.PROP_CEIL_GT: _prop_ceil_gt,
    TheoremId.THM_THREE: _thm_three,
    TheoremId.PROP_3N2: _prop_3n2,
    TheoremId.LEM_LEAVES_ZERO: _lem_leaves_zero,
    TheoremId.THM_TREE_GT: _thm_tree_gt,
    TheoremId.THM_TREE_NS: _thm_tree_ns,
}
assert list(_CHECKS) == list(TheoremId)


def check(g: Graph, t: Union[TheoremId, str], bundle: Optional[ParamBundle] = None) -> CheckOutcome:
    """Evaluate one result on ``g``; ``bundle`` is computed if not supplied."""
    return _CHECKS[TheoremId(t)](_Context(g, bundle))


def check_all(
    g: Graph, theorems: Iterable[Union[TheoremId, str]] = TheoremId, bundle: Optional[ParamBundle] = None
) -> list[CheckOutcome]:
    ctx = _Context(g, bundle)
    return [_CHECKS[t](ctx) for t in _ordered(theorems)]


def _ordered(theorems: Iterable[Union[TheoremId, str]]) -> list[TheoremId]:
    wanted = {TheoremId(t) for t in theorems}
    return [t for t in TheoremId if t in wanted]


def _standalone(g: Graph) -> _Context:
    if g.order > ENUMERATION_CAP:
        raise InstanceTooLarge(f"order {g.order} exceeds the enumeration cap {ENUMERATION_CAP}")
    return _Context(g)


def check_obs_ab(g: Graph) -> CheckOutcome:
    """Test |B2| <= |B0|, no leaf in B2 and no support vertex in B0 for every optimal function."""
    ctx = _standalone(g)
    if not g.is_connected or g.order < 3:
        return _na(TheoremId.OBS_AB, "needs connected, n >= 3")
    return _obs_ab_outcome(ctx)


def check_leaves_zero(t: Graph) -> CheckOutcome:
    """Some optimal function puts every leaf in B0 (non-star trees only)."""
    ctx = _standalone(t)
    if not ctx.prof.is_tree:
        raise NotATree("input is not a tree")
    if _is_star(t):
        raise StarInput("stars are excluded")
    return _leaves_zero_outcome(ctx)


def check_ceil_gt_characterization(g: Graph) -> CheckOutcome:
    ctx = _standalone(g)
    if not ctx.feasible or g.max_degree <= 1:
        return _na(TheoremId.PROP_CEIL_GT, "needs no isolated vertex and Delta > 1")
    return _ceil_gt_outcome(ctx)


def check_thm_three_consequence(g: Graph) -> CheckOutcome:
    ctx = _standalone(g)
    if not ctx.feasible:
        return _na(TheoremId.THM_THREE, "isolated vertex")
    return _three_outcome(ctx)


# sweeps


@dataclass
class Tally:
    applicable: int = 0
    holds: int = 0
    equality: int = 0
    violations: int = 0

    def add(self, o: CheckOutcome) -> None:
        if not o.applicable:
            return
        self.applicable += 1
        self.holds += o.holds
        self.equality += o.holds and o.equality
        self.violations += not o.holds

    def merge(self, other: "Tally") -> "Tally":
        return Tally(
            self.applicable + other.applicable,
            self.holds + other.holds,
            self.equality + other.equality,
            self.violations + other.violations,
        )

    def as_dict(self) -> dict:
        return {"applicable": self.applicable, "holds": self.holds, "equality": self.equality, "violations": self.violations}


def _fmt(x) -> Union[int, str]:
    return x if isinstance(x, int) else ("inf" if x is UNBOUNDED else str(x))


@dataclass(frozen=True)
class Row:
    graph6: str
    n: int
    m: int
    max_degree: int
    min_degree: int
    girth: Union[int, str]
    diameter: Union[int, str]
    bundle: ParamBundle
    outcomes: tuple[CheckOutcome, ...]

    @property
    def verdicts(self) -> dict[str, str]:
        return {o.theorem.value: o.verdict for o in self.outcomes}


@dataclass
class Report:
    corpus: str
    theorems: tuple[TheoremId, ...]
    rows: list[Row] = field(default_factory=list)

    @property
    def summary(self) -> dict[TheoremId, Tally]:
        out = {t: Tally() for t in self.theorems}
        for row in self.rows:
            for o in row.outcomes:
                out[o.theorem].add(o)
        return out

    @property
    def violations(self) -> list[dict]:
        found = []
        for row in self.rows:
            for o in row.outcomes:
                if o.applicable and not o.holds:
                    found.append({"graph6": row.graph6, **o.as_dict()})
        return found

    @property
    def ok(self) -> bool:
        return not self.violations

    def equality_graphs(self, t: TheoremId) -> list[str]:
        return [r.graph6 for r in self.rows for o in r.outcomes if o.theorem is t and o.applicable and o.equality]

    def counts(self) -> Counter:
        return Counter(o.verdict for r in self.rows for o in r.outcomes)


def _row(g: Graph, theorems: list[TheoremId]) -> Row:
    from .formats import emit_graph6

    ctx = _Context(g)
    outcomes = tuple(_CHECKS[t](ctx) for t in theorems)
    p = ctx.prof
    return Row(emit_graph6(g), g.order, g.size, g.max_degree, g.min_degree, _fmt(p.girth), _fmt(p.diameter), ctx.bundle, outcomes)


def _row_from_graph6(args: tuple[str, list[TheoremId]]) -> Row:
    from .formats import parse_graph6

    text, theorems = args
    return _row(parse_graph6(text), theorems)


def default_workers() -> int:
    env = os.environ.get("STRONGROMAN_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(
    corpus: Corpus,
    theorems: Optional[Iterable[Union[TheoremId, str]]] = None,
    workers: Optional[int] = None,
) -> Report:
    """Run the requested checks over every graph of the corpus.

    Rows come back in corpus order regardless of ``workers``, so reports are
    identical for any degree of parallelism.
    """
    from .formats import emit_graph6

    wanted = _ordered(TheoremId if theorems is None else theorems)
    graphs = list(iterate(corpus))
    workers = default_workers() if workers is None else workers
    report = Report(corpus.describe(), tuple(wanted))
    if workers <= 1 or len(graphs) < 2:
        report.rows = [_row(g, wanted) for g in graphs]
    else:
        jobs = [(emit_graph6(g), wanted) for g in graphs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            report.rows = list(pool.map(_row_from_graph6, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return report

