"""Constructive upper bound ``nu_s^*(G) <= delta * n / (2 delta + 1)``.

For a graph with maximum degree at most ``delta`` and no component of order at
most two, :func:`build_good_dual` builds a dual-feasible ``y`` such that

* ``y(delta(u)) >= 1/2`` at every vertex of degree below ``delta``, and
* ``y(E) <= delta * n / (2 delta + 1)``, with equality exactly when every
  component is the subdivided star T*.

The construction is an induction on the order: peel a minimum-degree vertex
``u`` together with part of its neighbourhood, strip the components of order
one or two that this leaves behind (``I1`` and ``I2``), recurse on the rest and
put weight 1/2 on a handful of edges around the peeled part.  When the default
assignment meets the bound with equality on a graph that is not T*, one of the
alternative assignments below replaces it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .graph import Graph, delete_vertices, induced_subgraph
from .lp import EdgeWeights, check_dual_feasible

HALF = Fraction(1, 2)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GoodDual:
    y: EdgeWeights
    delta_bound: int
    total: Fraction


@dataclass
class TraceLevel:
    """One induction step, in vertex and edge ids of the input graph."""

    tag: str
    order: int
    u: int | None = None
    v: int | None = None
    w: int | None = None
    i1: list[int] = field(default_factory=list)
    i2: list[int] = field(default_factory=list)
    connectors: list[int] = field(default_factory=list)
    third: int | None = None
    dropped: int | None = None
    assigned: dict[int, Fraction] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["assigned"] = {str(e): f"{q.numerator}/{q.denominator}" for e, q in sorted(self.assigned.items())}
        return d


@dataclass
class CaseTrace:
    levels: list[TraceLevel] = field(default_factory=list)

    def replay(self, m: int) -> EdgeWeights:
        """Rebuild ``y`` by applying each level's assignments in order."""
        y: dict[int, Fraction] = {}
        for level in self.levels:
            y.update(level.assigned)
        return EdgeWeights.from_mapping(m, y)

    def to_json(self) -> str:
        return json.dumps([lv.to_dict() for lv in self.levels], indent=2)


def theorem1_bound(n: int, delta: int) -> Fraction:
    if delta < 2 or n < 0:
        raise ValueError("need delta >= 2 and n >= 0")
    return Fraction(delta * n, 2 * delta + 1)


def is_t_star(g: Graph, delta: int) -> bool:
    """True iff the connected graph ``g`` is the subdivided star with ``delta`` arms."""
    if g.n != 2 * delta + 1 or g.m != 2 * delta or len(g.components()) != 1:
        return False
    for c in range(g.n):
        if g.degree(c) == delta and all(g.degree(x) == 2 for x in g.neighbors(c)):
            others = set(range(g.n)) - set(g.neighbors(c)) - {c}
            return all(g.degree(x) == 1 for x in others)
    return False


def _small_components(g: Graph, vmap) -> tuple[list[int], list[int], list[list[int]]]:
    i1, i2, small = [], [], []
    for comp in g.components():
        if len(comp) == 1:
            i1.append(vmap[comp[0]])
        elif len(comp) == 2:
            i2.extend(vmap[x] for x in comp)
        else:
            continue
        small.append([vmap[x] for x in comp])
    return sorted(i1), sorted(i2), small


def _check_good(g: Graph, y: dict[int, Fraction], delta: int) -> Fraction:
    w = EdgeWeights.from_mapping(g.m, y)
    if not check_dual_feasible(g, w):
        raise AssertionError("constructed y is not dual feasible")
    load = [Fraction(0)] * g.n
    for e, (a, b) in enumerate(g.edges):
        load[a] += w[e]
        load[b] += w[e]
    for x in range(g.n):
        if g.degree(x) < delta and load[x] < HALF:
            raise AssertionError(f"vertex {x} of degree {g.degree(x)} carries only {load[x]}")
    total = w.total()
    if total > theorem1_bound(g.n, delta):
        raise AssertionError(f"total {total} exceeds bound {theorem1_bound(g.n, delta)}")
    return total


class _Builder:
    def __init__(self, delta: int):
        self.delta = delta
        self.trace = CaseTrace()

    # every method returns weights keyed by local edge ids of its graph argument
    def solve(self, g: Graph, vmap, emap) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for comp in g.components():
            h, hv, he = induced_subgraph(g, comp)
            sub = self.solve_connected(h, [vmap[x] for x in hv], [emap[x] for x in he])
            for e, val in sub.items():
                out[he[e]] = val
        return out

    def solve_connected(self, h: Graph, vmap, emap) -> dict[int, Fraction]:
        delta = self.delta
        if h.n <= 2:
            raise AssertionError("recursion reached a component of order <= 2")
        if h.is_regular(delta):
            val = Fraction(1, 2 * delta - 1)
            y = {e: val for e in range(h.m)}
            self.trace.levels.append(TraceLevel("regular", h.n, assigned={emap[e]: val for e in y}))
            _check_good(h, y, delta)
            return y
        degs = h.degrees()
        low = min(degs)
        u = degs.index(low)
        if low == 1:
            v = h.neighbors(u)[0]
            rest = delete_vertices(h, {u, v}).graph
            if all(len(c) > 2 for c in rest.components()):
                return self.case1(h, u, v, vmap, emap)
        return self.case2(h, u, vmap, emap)

    def _recurse(self, h: Graph, removed, vmap, emap):
        red = delete_vertices(h, removed)
        sub = self.solve(red.graph, [vmap[x] for x in red.vertex_map], [emap[x] for x in red.edge_map])
        return red, {red.edge_map[e]: val for e, val in sub.items()}

    def _connectors(self, h: Graph, sources, small) -> list[int]:
        """Lowest-id edge from ``sources`` into each small component, components by lowest vertex id."""
        picks = []
        for comp in sorted(small, key=min):
            cands = [h.edge_id(s, t) for t in comp for s in sources if h.has_edge(s, t)]
            if not cands:
                raise AssertionError(f"small component {comp} has no edge to {sorted(sources)}")
            picks.append(min(cands))
        return picks

    def case1(self, h: Graph, u: int, v: int, vmap, emap) -> dict[int, Fraction]:
        delta = self.delta
        w = min(x for x in h.neighbors(v) if x != u)
        gp = delete_vertices(h, {u, v, w})
        i1, i2, small = _small_components(gp.graph, gp.vertex_map)
        if 2 * len(i1) + len(i2) > 2 * (delta - 1):
            raise AssertionError("isolated/order-2 count exceeds 2(delta-1)")
        inner, y = self._recurse(h, {u, v, w} | set(i1) | set(i2), vmap, emap)
        i2_edges = [e for e, (a, b) in enumerate(h.edges) if a in i2 and b in i2]
        connectors = self._connectors(h, [w], small)
        own = set(connectors) | set(i2_edges) | {h.edge_id(u, v), h.edge_id(v, w)}
        level = TraceLevel("case1", h.n, vmap[u], vmap[v], vmap[w],
                           [vmap[x] for x in i1], [vmap[x] for x in i2], [emap[e] for e in connectors])
        result = dict(y)
        result.update({e: HALF for e in own})
        bound = theorem1_bound(h.n, delta)
        if sum(result.values()) == bound and not is_t_star(h, delta):
            result = self._case1_equality(h, u, v, w, i2, small, inner, y, i2_edges, level, vmap, emap)
        level.assigned = {emap[e]: val for e, val in result.items() if e not in y or y[e] != val}
        self.trace.levels.append(level)
        total = _check_good(h, result, delta)
        if not is_t_star(h, delta) and total >= bound:
            raise AssertionError("bound attained on a graph that is not T*")
        return result

    def _case1_equality(self, h, u, v, w, i2, small, inner, y, i2_edges, level, vmap, emap):
        delta = self.delta
        if len(i2) != 2 * (delta - 1) or h.degree(w) != delta:
            raise AssertionError("equality without the forced structure")
        third = [t for t in h.neighbors(v) if t not in (u, w)]
        if not third:
            raise AssertionError("equality on a graph that is not T* needs a third neighbour of v")
        in_i2 = [t for t in third if t in i2]
        if in_i2:
            t = in_i2[0]
            forced = h.edge_id(v, t)
            rest = [c for c in small if t not in c]
            connectors = [forced] + self._connectors(h, [v, w], rest)
            level.tag = "case1_eq_i2"
            level.third = vmap[t]
            level.connectors = sorted(emap[e] for e in connectors)
            result = dict(y)
            result.update({e: HALF for e in set(connectors) | set(i2_edges) | {h.edge_id(u, v)}})
            return result
        t = third[0]
        # t lies in a T* component of the inner graph
        ig = inner.graph
        local = {old: new for new, old in enumerate(inner.vertex_map)}
        comp = next(c for c in ig.components() if local[t] in c)
        hsub, hv, he = induced_subgraph(ig, comp)
        if not is_t_star(hsub, delta):
            raise AssertionError("component next to v is not T*")
        centre = next(c for c in range(hsub.n) if hsub.degree(c) == delta)
        tt = hv.index(local[t])
        mid = tt if hsub.has_edge(centre, tt) else hsub.neighbors(tt)[0]
        f_local = hsub.edge_id(centre, mid)
        h_edges = [inner.edge_map[ige] for ige in he]
        f = inner.edge_map[he[f_local]]
        result = {e: val for e, val in y.items() if e not in set(h_edges)}
        halves = set(i2_edges) | {e for e in h.incident(w) if e != h.edge_id(v, w)}
        halves |= {h.edge_id(u, v), h.edge_id(v, t)} | (set(h_edges) - {f})
        result.update({e: HALF for e in halves})
        result[f] = Fraction(0)
        level.tag = "case1_eq_tstar"
        level.third = vmap[t]
        level.connectors = []
        level.dropped = emap[f]
        return result

    def case2(self, h: Graph, u: int, vmap, emap) -> dict[int, Fraction]:
        delta = self.delta
        low = h.degree(u)
        nbrs = list(h.neighbors(u))
        gp = delete_vertices(h, set(nbrs) | {u})
        i1, i2, small = _small_components(gp.graph, gp.vertex_map)
        lhs = low * len(i1) + max((low - 1) * len(i2), Fraction(len(i2), 2))
        if lhs > (delta - 1) * low:
            raise AssertionError("isolated/order-2 count exceeds (delta-1)*min degree")
        inner, y = self._recurse(h, set(nbrs) | {u} | set(i1) | set(i2), vmap, emap)
        i2_edges = [e for e, (a, b) in enumerate(h.edges) if a in i2 and b in i2]
        connectors = self._connectors(h, nbrs, small)
        own = set(connectors) | set(i2_edges) | set(h.incident(u))
        level = TraceLevel("case2", h.n, vmap[u], None, None,
                           [vmap[x] for x in i1], [vmap[x] for x in i2], [emap[e] for e in connectors])
        result = dict(y)
        result.update({e: HALF for e in own})
        bound = theorem1_bound(h.n, delta)
        if sum(result.values()) == bound and not is_t_star(h, delta):
            if low != 2 or i1 or len(i2) != 2 * (delta - 1) or inner.graph.n != 0:
                raise AssertionError("equality without the forced structure")
            f = min(h.incident(u))
            to_i2 = [e for e, (a, b) in enumerate(h.edges)
                     if (a in nbrs and b in i2) or (b in nbrs and a in i2)]
            result = {e: HALF for e in set(to_i2) | (set(h.incident(u)) - {f})}
            level.tag = "case2_eq"
            level.dropped = emap[f]
            level.connectors = []
        level.assigned = {emap[e]: val for e, val in result.items() if e not in y or y[e] != val}
        self.trace.levels.append(level)
        total = _check_good(h, result, delta)
        if not is_t_star(h, delta) and total >= bound:
            raise AssertionError("bound attained on a graph that is not T*")
        return result


def build_good_dual(g: Graph, delta: int | None = None) -> tuple[GoodDual, CaseTrace]:
    if delta is None:
        delta = g.max_degree
    if delta < 2:
        raise PreconditionError("delta must be at least 2")
    if g.max_degree > delta:
        raise PreconditionError(f"maximum degree {g.max_degree} exceeds delta={delta}")
    small = [c for c in g.components() if len(c) <= 2]
    if small:
        raise PreconditionError(f"component {small[0]} has order at most 2")
    builder = _Builder(delta)
    y = builder.solve(g, list(range(g.n)), list(range(g.m)))
    weights = EdgeWeights.from_mapping(g.m, y)
    total = _check_good(g, y, delta)
    return GoodDual(weights, delta, total), builder.trace
