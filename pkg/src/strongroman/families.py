"""Named graph families and their closed-form parameter values.

Vertex numbering for each family (stable, relied on by golden tests):

* ``path:n``        0-1-...-(n-1)
* ``cycle:n``       0-1-...-(n-1)-0
* ``star:n``        K_{1,n-1}; center 0, leaves 1..n-1
* ``dstar:p,q``     centers 0 and 1; leaves of 0 are 2..p+1, leaves of 1 follow
* ``corona:SPEC``   base keeps its ids 0..k-1; the pendant leaf of i is k+i
* ``sstar:k``       S(K_{1,k}); center 0, middles 1..k, leaf k+i hangs on middle i
* ``famG:k1,k2``    4-cycle 0-1-2-3-0 (v1=0, v2=1); pendant path j is 4+2j-(5+2j)
                    with 4+2j joined to v1 for the first k1 paths, to v2 after
* ``famH:p,q,r``    centers 0 and 1 joined through r inserted vertices 2..r+1;
                    each of the p (then q) pendant paths is middle-leaf, middle
                    joined to its center
* ``fixed:F1``..``fixed:F5``, ``fixed:S_K13``  small graphs a,b,c,... -> 0,1,2,...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidFamilyParams, NoClosedForm
from .graph import UNBOUNDED, Graph, build_graph, cycle_graph, girth, path_graph, star_graph


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


FIXED_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    # DS_{1,2} with its central edge subdivided once
    "F1": (6, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5)]),
    # 4-cycle a-b-c-e-a, pendant d on a and f on c
    "F2": (6, [(0, 1), (1, 2), (2, 4), (4, 0), (0, 3), (2, 5)]),
    "F3": (6, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 3), (2, 4), (2, 5)]),
    # 4-cycle 0-1-2-3 with a pendant on 0
    "F4": (5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    # two 4-cycles sharing a path of length two (K_{2,3})
    "F5": (5, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 3), (2, 4)]),
}

# (order, girth, max degree) read off the figure, checked when built
FIXED_FACTS = {
    "F1": (6, UNBOUNDED, 3),
    "F2": (6, 4, 3),
    "F3": (6, 4, 4),
    "F4": (5, 4, 3),
    "F5": (5, 4, 3),
}

KINDS = ("path", "cycle", "star", "dstar", "corona", "sstar", "famG", "famH", "fixed")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    base: Union["FamilySpec", Graph, None] = None
    name: str = ""

    def __post_init__(self) -> None:
        _check(self)

    def __str__(self) -> str:
        if self.kind == "fixed":
            return f"fixed:{self.name}"
        if self.kind == "corona":
            inner = str(self.base) if isinstance(self.base, FamilySpec) else "graph"
            return f"corona:{inner}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def Path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def Cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def Star(n: int) -> FamilySpec:
    return FamilySpec("star", (n,))


def DoubleStar(p: int, q: int) -> FamilySpec:
    return FamilySpec("dstar", (p, q))


def Corona(base: Union[FamilySpec, Graph]) -> FamilySpec:
    return FamilySpec("corona", base=base)


def SubdividedStar(k: int) -> FamilySpec:
    return FamilySpec("sstar", (k,))


def FamilyG(k1: int, k2: int) -> FamilySpec:
    return FamilySpec("famG", (k1, k2))


def FamilyH(p: int, q: int, r: int) -> FamilySpec:
    return FamilySpec("famH", (p, q, r))


def Fixed(name: str) -> FamilySpec:
    return FamilySpec("fixed", name=name)


def _check(spec: FamilySpec) -> None:
    k, p = spec.kind, spec.params
    arity = {"path": 1, "cycle": 1, "star": 1, "dstar": 2, "sstar": 1, "famG": 2, "famH": 3}
    if k not in KINDS:
        raise InvalidFamilyParams(f"unknown family {k!r}")
    if k in arity and len(p) != arity[k]:
        raise InvalidFamilyParams(f"{k} takes {arity[k]} parameter(s), got {len(p)}")
    if any(x < 0 for x in p):
        raise InvalidFamilyParams("family parameters must be non-negative")
    if k == "path" and p[0] < 1:
        raise InvalidFamilyParams("path needs n >= 1")
    if k == "cycle" and p[0] < 3:
        raise InvalidFamilyParams("cycle needs n >= 3")
    if k == "star" and p[0] < 2:
        raise InvalidFamilyParams("star K_{1,n-1} needs n >= 2")
    if k == "dstar" and not p[0] >= p[1] >= 1:
        raise InvalidFamilyParams("double star DS_{p,q} needs p >= q >= 1")
    if k == "sstar" and p[0] < 1:
        raise InvalidFamilyParams("subdivided star needs k >= 1")
    if k == "famG" and p[0] + p[1] < 1:
        raise InvalidFamilyParams("family G needs k1 + k2 >= 1")
    if k == "famH" and not p[0] >= p[1] >= 1:
        raise InvalidFamilyParams("family H needs p >= q >= 1 (r >= 0)")
    if k == "corona" and spec.base is None:
        raise InvalidFamilyParams("corona needs a base graph")
    if k == "fixed" and spec.name not in (*FIXED_EDGES, "S_K13"):
        raise InvalidFamilyParams(f"unknown fixed graph {spec.name!r}")


def _double_star(p: int, q: int) -> Graph:
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + j) for j in range(q)]
    return build_graph(2 + p + q, edges)


def _subdivided_star(k: int) -> Graph:
    edges = [(0, i) for i in range(1, k + 1)] + [(i, k + i) for i in range(1, k + 1)]
    return build_graph(2 * k + 1, edges)


def _family_g(k1: int, k2: int) -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    for j in range(k1 + k2):
        x, y = 4 + 2 * j, 5 + 2 * j
        edges += [(0 if j < k1 else 1, x), (x, y)]
    return build_graph(4 + 2 * (k1 + k2), edges)


def _family_h(p: int, q: int, r: int) -> Graph:
    spine = [0, *range(2, r + 2), 1]
    edges = list(zip(spine, spine[1:]))
    nxt = r + 2
    for center, count in ((0, p), (1, q)):
        for _ in range(count):
            edges += [(center, nxt), (nxt, nxt + 1)]
            nxt += 2
    return build_graph(nxt, edges)


def corona_of(base: Graph) -> Graph:
    k = base.order
    return build_graph(2 * k, [*base.edges, *((i, k + i) for i in range(k))])


def fixed_graph(name: str) -> Graph:
    if name == "S_K13":
        return _subdivided_star(3)
    if name not in FIXED_EDGES:
        raise InvalidFamilyParams(f"unknown fixed graph {name!r}")
    n, edges = FIXED_EDGES[name]
    g = build_graph(n, edges)
    order, gi, delta = FIXED_FACTS[name]
    assert (g.order, girth(g), g.max_degree) == (order, gi, delta), name
    return g


def realize(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "path":
        return path_graph(p[0])
    if k == "cycle":
        return cycle_graph(p[0])
    if k == "star":
        return star_graph(p[0])
    if k == "dstar":
        return _double_star(*p)
    if k == "sstar":
        return _subdivided_star(p[0])
    if k == "famG":
        return _family_g(*p)
    if k == "famH":
        return _family_h(*p)
    if k == "corona":
        base = spec.base if isinstance(spec.base, Graph) else realize(spec.base)  # type: ignore[arg-type]
        return corona_of(base)
    return fixed_graph(spec.name)


def parse_spec(text: str) -> FamilySpec:
    """Parse the textual form, e.g. ``path:6``, ``dstar:2,2``, ``corona:cycle:3``."""
    kind, _, rest = text.strip().partition(":")
    if kind not in KINDS:
        raise InvalidFamilyParams(f"unknown family {kind!r} in {text!r}")
    if kind == "fixed":
        return Fixed(rest)
    if kind == "corona":
        return Corona(parse_spec(rest))
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError as exc:
        raise InvalidFamilyParams(f"bad parameters in {text!r}") from exc
    return FamilySpec(kind, params)


PARAMS = ("gamma", "gamma_t", "gamma_r", "gamma_tr", "gamma_strd", "gamma_tstrd")


def closed_form(spec: FamilySpec, param: str) -> int:
    """The proven value of ``param`` on the family member, if one is known."""
    if param not in PARAMS:
        raise NoClosedForm(f"unknown parameter {param!r}")
    k, p = spec.kind, spec.params
    if k in ("path", "cycle"):
        n = p[0]
        if param in ("gamma_r", "gamma_strd"):
            return _ceil_div(2 * n, 3)
        if param in ("gamma_tr", "gamma_tstrd") and n >= 2:
            return n
    if k == "star" and param == "gamma_tstrd":
        return _ceil_div(p[0] + 2, 2)
    if k == "dstar" and param == "gamma_tstrd":
        a, b = sorted(p)
        if b == 1:
            return 4
        if a == 1:
            return _ceil_div(b, 2) + 3
        return _ceil_div(a, 2) + _ceil_div(b, 2) + 2
    if k in ("corona", "sstar", "famG", "famH") and param in ("gamma_tr", "gamma_tstrd"):
        return realize(spec).order
    if k == "fixed" and spec.name == "S_K13" and param in ("gamma_tr", "gamma_tstrd"):
        return 7
    raise NoClosedForm(f"no closed form for {param} on {spec}")


def closed_forms(spec: FamilySpec) -> dict[str, int]:
    out = {}
    for param in PARAMS:
        try:
            out[param] = closed_form(spec, param)
        except NoClosedForm:
            pass
    return out
