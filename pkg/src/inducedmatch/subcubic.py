"""Primal-dual 7/3-approximation for induced matchings in subcubic graphs.

Each round picks an edge ``v0 v1`` at a minimum-degree vertex ``v0``, forms the
head ``H`` on ``N[v0] | N[v1]`` plus the vertices this leaves isolated, commits
``v0 v1`` to the matching, gives the edges of ``H`` dual weights and recurses on
``G - V(H)``.  Boundary edges between ``H`` and the rest get weight zero.

The head weights must satisfy, with degrees taken inside ``H``:

(a) ``y(delta_H(e)) >= 1`` for every edge of ``H``;
(b) ``y(delta_H(u)) >= 2/3`` for core vertices other than ``v0, v1`` of degree <= 2;
(c) ``y(delta_H(u)) >= 1/3`` for ``v0``, ``v1`` and isolated vertices of degree <= 2;
(e) ``y(E(H)) <= 7/3``.

They are found by an exact LP that minimises ``y(E(H))`` under (a)-(c).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, InducedMatching, Reduction, delete_vertices, induced_subgraph, serialize_graph
from .lp import EdgeWeights, check_dual_feasible
from .simplex import maximize

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)
HEAD_BUDGET = Fraction(7, 3)
MAX_HEAD_ORDER = 8


class SubcubicPreconditionError(ValueError):
    pass


class HeadInfeasible(RuntimeError):
    pass


@dataclass(frozen=True)
class HeadSubgraph:
    v0: int
    v1: int
    core: tuple[int, ...]
    isolates: tuple[int, ...]
    h: Reduction  # induced on core | isolates; maps into the graph the head was built from
    boundary: tuple[int, ...]

    def local(self, v: int) -> int:
        return self.h.vertex_map.index(v)

    def roles(self) -> dict[int, str]:
        """Role of each local vertex: 'end' (v0/v1), 'core' or 'isolate'."""
        out = {}
        for i, v in enumerate(self.h.vertex_map):
            if v in (self.v0, self.v1):
                out[i] = "end"
            elif v in self.isolates:
                out[i] = "isolate"
            else:
                out[i] = "core"
        return out


@dataclass(frozen=True)
class PdCertificate:
    matching: InducedMatching
    y: EdgeWeights
    ratio_ok: bool
    heads: tuple[dict, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "matching": list(self.matching.edges),
            "y": [f"{q.numerator}/{q.denominator}" for q in self.y],
            "y_total": _fmt(self.y.total()),
            "ratio_ok": self.ratio_ok,
        }


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def select_head(g: Graph) -> tuple[int, int]:
    """Lowest-id vertex of minimum positive degree and its lowest-id neighbour."""
    cands = [v for v in range(g.n) if g.degree(v) > 0]
    if not cands:
        raise ValueError("graph has no edges")
    low = min(g.degree(v) for v in cands)
    v0 = next(v for v in cands if g.degree(v) == low)
    return v0, g.neighbors(v0)[0]


def build_head(g: Graph, v0: int, v1: int) -> HeadSubgraph:
    if not g.has_edge(v0, v1):
        raise ValueError(f"({v0}, {v1}) is not an edge")
    core = g.closed_neighborhood((v0, v1))
    isolates = [x for x in range(g.n) if x not in core and all(y in core for y in g.neighbors(x))
                and g.degree(x) > 0]
    inside = core | set(isolates)
    boundary = tuple(e for e, (a, b) in enumerate(g.edges) if (a in inside) != (b in inside))
    return HeadSubgraph(v0, v1, tuple(sorted(core)), tuple(isolates), induced_subgraph(g, inside), boundary)


def head_requirements(head: HeadSubgraph) -> list[tuple[str, int, Fraction]]:
    """Vertex lower bounds (condition tag, local vertex, bound) for (b) and (c)."""
    h = head.h.graph
    reqs = []
    for i, role in head.roles().items():
        if h.degree(i) > 2:
            continue
        if role == "core":
            reqs.append(("b", i, TWO_THIRDS))
        else:
            reqs.append(("c", i, THIRD))
    return reqs


def assign_head_duals(head: HeadSubgraph) -> EdgeWeights:
    """Minimum-weight ``y`` on ``E(H)`` meeting (a)-(c); raises if it exceeds 7/3."""
    h = head.h.graph
    rows: list[tuple[list[int], Fraction]] = []  # (edges covered, lower bound)
    for e, (a, b) in enumerate(h.edges):
        rows.append((sorted(set(h.incident(a)) | set(h.incident(b))), Fraction(1)))
    for _, i, bound in head_requirements(head):
        rows.append((list(h.incident(i)), bound))
    # min 1.y  s.t. R y >= b  is solved through its dual  max b.z  s.t. R^T z <= 1
    A = [[0] * len(rows) for _ in range(h.m)]
    for r, (covered, _) in enumerate(rows):
        for e in covered:
            A[e][r] = 1
    res = maximize([bound for _, bound in rows], A, [1] * h.m)
    y = EdgeWeights(res.duals)
    if y.total() > HEAD_BUDGET:
        raise HeadInfeasible(
            f"head around ({head.v0}, {head.v1}) needs {y.total()} > 7/3:\n{serialize_graph(h)}")
    return y


def check_head_conditions(h: Graph, v0: int, v1: int, y) -> dict[str, list]:
    """Recompute (a), (b), (c), (e) for weights ``y`` on a head graph ``h``.

    ``v0`` and ``v1`` are vertices of ``h``.  Core vertices are the closed
    neighbourhoods of ``v0`` and ``v1`` in ``h``; every other vertex counts as
    isolated.  Returns the violations per condition (empty lists when all hold).
    """
    y = [Fraction(v) for v in y]
    at = {x: sum((y[e] for e in h.incident(x)), Fraction(0)) for x in range(h.n)}
    core = {v0, v1} | set(h.neighbors(v0)) | set(h.neighbors(v1))
    bad: dict[str, list] = {"a": [], "b": [], "c": [], "e": []}
    for e, (a, b) in enumerate(h.edges):
        if at[a] + at[b] - y[e] < 1:
            bad["a"].append(e)
    for x in range(h.n):
        if h.degree(x) > 2:
            continue
        if x in core and x not in (v0, v1):
            if at[x] < TWO_THIRDS:
                bad["b"].append(x)
        elif at[x] < THIRD:
            bad["c"].append(x)
    if sum(y, Fraction(0)) > HEAD_BUDGET:
        bad["e"].append(sum(y, Fraction(0)))
    return bad


def _check_input(g: Graph) -> None:
    if g.max_degree > 3:
        raise SubcubicPreconditionError(f"maximum degree {g.max_degree} exceeds 3")
    for comp in g.components():
        if all(g.degree(v) == 3 for v in comp):
            raise SubcubicPreconditionError(f"component containing vertex {comp[0]} is 3-regular")


def subcubic_primal_dual(g: Graph) -> PdCertificate:
    """Induced matching ``M`` and dual-feasible ``y`` with ``y(E) <= 7/3 |M|``."""
    _check_input(g)
    y: dict[int, Fraction] = {}
    matching: list[int] = []
    heads = []
    cur, vmap, emap = g, list(range(g.n)), list(range(g.m))
    while cur.m:
        # isolated vertices carry no constraints; drop them before choosing v0
        iso = [x for x in range(cur.n) if cur.degree(x) == 0]
        if iso:
            red = delete_vertices(cur, iso)
            cur, vmap, emap = red.graph, [vmap[x] for x in red.vertex_map], [emap[e] for e in red.edge_map]
        v0, v1 = select_head(cur)
        head = build_head(cur, v0, v1)
        if head.h.graph.n > MAX_HEAD_ORDER:
            raise AssertionError(f"head of order {head.h.graph.n} exceeds {MAX_HEAD_ORDER}")
        yh = assign_head_duals(head)
        for e_local, val in enumerate(yh):
            y[emap[head.h.edge_map[e_local]]] = val
        matching.append(emap[cur.edge_id(v0, v1)])
        heads.append({
            "v0": vmap[v0], "v1": vmap[v1],
            "vertices": [vmap[x] for x in head.h.vertex_map],
            "isolates": [vmap[x] for x in head.isolates],
            "y_total": _fmt(yh.total()),
        })
        red = delete_vertices(cur, head.h.vertex_map)
        cur, vmap, emap = red.graph, [vmap[x] for x in red.vertex_map], [emap[e] for e in red.edge_map]
    weights = EdgeWeights.from_mapping(g.m, y)
    m = InducedMatching.certify(g, matching)
    ok = check_pd_certificate(g, m.edges, weights)
    if not ok:
        raise AssertionError("good solution pair conditions violated")
    return PdCertificate(m, weights, ok, tuple(heads))


def check_pd_certificate(g: Graph, matching, y) -> bool:
    """Dual feasibility, 1/3 at vertices of degree 1 or 2, and y(E) <= 7/3 |M|."""
    if not check_dual_feasible(g, y):
        return False
    for x in range(g.n):
        if 0 < g.degree(x) <= 2 and sum((y[e] for e in g.incident(x)), Fraction(0)) < THIRD:
            return False
    return sum(y, Fraction(0)) <= HEAD_BUDGET * len(matching)
