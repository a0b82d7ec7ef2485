"""Local-ratio approximation for induced matchings in graphs of maximum degree Delta.

Pipeline: solve (P) once, repeatedly take the lowest-id edge whose conflict set
carries x-weight at most ``f = (1 - eps) Delta + 1/2`` and delete that conflict
set, then finish the remaining graph greedily.  The result satisfies
``f |M| >= nu_s^*(G)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .graph import Graph, InducedMatching, delete_vertices, remove_edges
from .lp import EdgeWeights, check_primal_feasible, solve_primal, weight_sum

DEFAULT_EPSILON = Fraction(2005, 100000)
DEFAULT_C = Fraction(85838, 100000)
HALF = Fraction(1, 2)


class PremiseViolation(ValueError):
    """The hypothesis of a checked lemma does not hold for the given input."""


class GreedyBoundViolated(AssertionError):
    pass


def q_feasible(epsilon, c) -> bool:
    """Exact check of the four constraints on ``(epsilon, c)``."""
    eps, c = Fraction(epsilon), Fraction(c)
    if eps <= 0 or c <= 0:
        return False
    if eps + c >= 1:
        return False
    if eps > (1 - c) ** 2:
        return False
    lhs = Fraction(3, 2) * (1 + eps * (2 * c - 1 + eps) / (1 - c - eps))
    return lhs <= 2 * c * (1 - eps)


def q_slacks(epsilon, c) -> tuple[Fraction, Fraction]:
    """Slack of the quadratic constraint and of ``eps <= (1-c)^2``; requires ``eps + c < 1``."""
    eps, c = Fraction(epsilon), Fraction(c)
    lhs = Fraction(3, 2) * (1 + eps * (2 * c - 1 + eps) / (1 - c - eps))
    return 2 * c * (1 - eps) - lhs, (1 - c) ** 2 - eps


@dataclass(frozen=True)
class RatioParams:
    epsilon: Fraction
    c: Fraction
    delta: int

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("delta must be positive")
        if not q_feasible(self.epsilon, self.c):
            raise ValueError(f"(epsilon, c) = ({self.epsilon}, {self.c}) violates the constraints")

    @property
    def g_param(self) -> Fraction:
        return self.epsilon / (1 - self.c)

    @property
    def f(self) -> Fraction:
        return (1 - self.epsilon) * self.delta + HALF

    def to_dict(self) -> dict:
        return {k: _fmt(v) for k, v in
                (("epsilon", self.epsilon), ("c", self.c), ("g", self.g_param), ("f", self.f))} | {
                    "delta": self.delta}


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def default_params(delta: int) -> RatioParams:
    if delta < 3:
        raise ValueError("delta must be >= 3")
    assert q_feasible(DEFAULT_EPSILON, DEFAULT_C)
    return RatioParams(DEFAULT_EPSILON, DEFAULT_C, delta)


# -- Algorithm 1 ------------------------------------------------------------------

@dataclass(frozen=True)
class PreprocessResult:
    matching: InducedMatching
    residual: Graph
    residual_edge_map: tuple[int, ...]  # residual edge i is edge residual_edge_map[i] of the input
    x: EdgeWeights
    charge: Fraction
    step_charges: tuple[Fraction, ...]
    trace: tuple[dict, ...]

    def residual_x(self) -> EdgeWeights:
        return self.x.restrict(self.residual_edge_map)


class _LiveGraph:
    """Edge-deletion view of a fixed graph, keeping original edge ids."""

    def __init__(self, g: Graph):
        self.g = g
        self.alive = [True] * g.m
        self.inc = [set(g.incident(v)) for v in range(g.n)]

    def neighbors(self, v: int):
        for e in self.inc[v]:
            a, b = self.g.edges[e]
            yield b if a == v else a

    def conflict(self, e: int) -> set[int]:
        u, v = self.g.edges[e]
        near = {u, v} | set(self.neighbors(u)) | set(self.neighbors(v))
        out = set()
        for w in near:
            out |= self.inc[w]
        return out

    def remove(self, edges) -> None:
        for e in edges:
            if self.alive[e]:
                self.alive[e] = False
                a, b = self.g.edges[e]
                self.inc[a].discard(e)
                self.inc[b].discard(e)

    def live_edges(self) -> list[int]:
        return [e for e in range(self.g.m) if self.alive[e]]


def local_ratio_preprocess(g: Graph, x: Sequence[Fraction], params: RatioParams) -> PreprocessResult:
    if len(x) != g.m:
        raise ValueError(f"x has dimension {len(x)}, graph has {g.m} edges")
    x = EdgeWeights(x)
    if not check_primal_feasible(g, x):
        raise ValueError("x is not feasible for (P)")
    if g.max_degree > params.delta:
        raise ValueError(f"maximum degree {g.max_degree} exceeds delta={params.delta}")
    f = params.f
    live = _LiveGraph(g)
    picks, charges, trace = [], [], []
    start = 0
    while True:
        chosen = None
        for e in range(start, g.m):
            if not live.alive[e]:
                continue
            cset = live.conflict(e)
            load = weight_sum(x, cset)
            if load <= f:
                chosen = (e, cset, load)
                break
        if chosen is None:
            break
        e, cset, load = chosen
        picks.append(e)
        charges.append(load)
        trace.append({"edge": e, "load": _fmt(load), "removed": sorted(cset)})
        live.remove(cset)
        # edges below e were rejected and their conflict sets only shrink, but
        # a smaller set can drop under f, so the scan restarts from the lowest id
        start = 0
    removed = [e for e in range(g.m) if not live.alive[e]]
    red = remove_edges(g, removed)
    return PreprocessResult(
        InducedMatching.certify(g, picks), red.graph, red.edge_map, x,
        weight_sum(x, removed), tuple(charges), tuple(trace))


# -- residual greedy ----------------------------------------------------------------

def _best_pair(live: _LiveGraph, cset: set[int]) -> tuple[int, int] | None:
    """Lowest pair of live edges in ``cset`` that form an induced matching."""
    cands = sorted(cset)
    for i, e in enumerate(cands):
        near_e = live.conflict(e)
        for f in cands[i + 1:]:
            if f not in near_e:
                return e, f
    return None


def residual_greedy(g: Graph, delta: int) -> InducedMatching:
    """Greedy by minimum degree sum with a one-for-two swap; asserts ``|M| >= m / (1.5 delta^2)``."""
    if g.max_degree > delta:
        raise ValueError(f"maximum degree {g.max_degree} exceeds delta={delta}")
    live = _LiveGraph(g)
    picks = []
    while True:
        edges = live.live_edges()
        if not edges:
            break
        deg = [len(s) for s in live.inc]
        e = min(edges, key=lambda k: (deg[g.edges[k][0]] + deg[g.edges[k][1]], k))
        cset = live.conflict(e)
        pair = _best_pair(live, cset)
        take = list(pair) if pair else [e]
        for t in take:
            picks.append(t)
            live.remove(live.conflict(t))
    m = InducedMatching.certify(g, picks)
    if 3 * m.size * delta * delta < 2 * g.m:
        raise GreedyBoundViolated(
            f"greedy found {m.size} edges on {g.m}, below m/(1.5*{delta}^2)")
    return m


# -- LP rounding pipeline ----------------------------------------------------------

@dataclass(frozen=True)
class RatioCertificate:
    nu_s_star: Fraction
    f: Fraction
    size: int
    ratio_ok: bool
    preprocess_trace: tuple[dict, ...]

    def to_dict(self, matching: Sequence[int]) -> dict:
        return {
            "matching": list(matching),
            "nu_s_star": _fmt(self.nu_s_star),
            "f": _fmt(self.f),
            "ratio_ok": self.ratio_ok,
            "preprocess_trace": list(self.preprocess_trace),
        }


def approximate_fim(g: Graph, delta: int, params: RatioParams | None = None
                    ) -> tuple[InducedMatching, RatioCertificate]:
    if g.max_degree > delta:
        raise ValueError(f"maximum degree {g.max_degree} exceeds delta={delta}")
    params = params or default_params(delta)
    sol = solve_primal(g)
    pre = local_ratio_preprocess(g, sol.weights, params)
    lemma = lemma1_check(pre.residual, pre.residual_x(), params)
    if not lemma.premise or not lemma.ok:
        raise AssertionError(f"residual check failed: {lemma.detail}")
    tail = residual_greedy(pre.residual, delta)
    edges = list(pre.matching.edges) + [pre.residual_edge_map[e] for e in tail.edges]
    m = InducedMatching.certify(g, edges)
    ok = params.f * m.size >= sol.objective
    if not ok:
        raise AssertionError(f"|M| f = {m.size * params.f} < nu_s^* = {sol.objective}")
    return m, RatioCertificate(sol.objective, params.f, m.size, ok, pre.trace)


# -- runtime-checked lemmas ---------------------------------------------------------

class CheckResult(NamedTuple):
    ok: bool
    premise: bool
    detail: str = ""


def _premise_holds(g: Graph, x: EdgeWeights, f: Fraction) -> bool:
    live = _LiveGraph(g)
    return all(weight_sum(x, live.conflict(e)) >= f for e in range(g.m))


def lemma1_check(g: Graph, x: Sequence[Fraction], params: RatioParams) -> CheckResult:
    """If every conflict set has weight >= f, then ``x(E) <= (1 - eps) m / (1.5 Delta)``."""
    x = EdgeWeights(x)
    if not check_primal_feasible(g, x):
        raise ValueError("x is not feasible for (P)")
    if not _premise_holds(g, x, params.f):
        return CheckResult(True, False, "premise fails: some conflict set weighs less than f")
    bound = (1 - params.epsilon) * g.m / (Fraction(3, 2) * params.delta)
    total = x.total()
    if total > bound:
        return CheckResult(False, True, f"x(E) = {total} exceeds {bound}")
    return CheckResult(True, True)


def low_degree_set(g: Graph, params: RatioParams) -> set[int]:
    threshold = params.c * params.delta + HALF
    return {u for u in range(g.n) if g.degree(u) < threshold}


def claim1_check(g: Graph, x: Sequence[Fraction], params: RatioParams) -> CheckResult:
    """Neighbours of low-degree vertices have high degree and small x-load."""
    x = EdgeWeights(x)
    if not check_primal_feasible(g, x):
        raise PremiseViolation("x is not feasible for (P)")
    if not _premise_holds(g, x, params.f):
        raise PremiseViolation("some conflict set weighs less than f")
    low = low_degree_set(g, params)
    min_deg = (1 - params.g_param) * params.delta + 1
    for u in sorted(low):
        for v in g.neighbors(u):
            if g.degree(v) < min_deg:
                return CheckResult(False, True, f"neighbour {v} of {u} has degree {g.degree(v)} < {min_deg}")
            load = weight_sum(x, g.incident(v))
            if load > params.g_param:
                return CheckResult(False, True, f"x(delta({v})) = {load} > g")
    return CheckResult(True, True)


# -- dispatcher ---------------------------------------------------------------------

def cubic_components(g: Graph) -> list[list[int]]:
    return [c for c in g.components() if all(g.degree(v) == 3 for v in c)]


def auto_induced_matching(g: Graph) -> tuple[InducedMatching, dict]:
    """Best available guarantee: 7/3 on subcubic parts, local ratio elsewhere."""
    from .subcubic import subcubic_primal_dual

    if g.m == 0:
        return InducedMatching(()), {"algorithms": []}
    if g.max_degree > 3:
        m, cert = approximate_fim(g, g.max_degree)
        return m, {"algorithms": ["localratio"], "f": _fmt(cert.f)}
    cubic = {v for c in cubic_components(g) for v in c}
    edges, used = [], []
    if len(cubic) < g.n:
        part = delete_vertices(g, cubic)
        if part.graph.m:
            cert = subcubic_primal_dual(part.graph)
            edges += [part.edge_map[e] for e in cert.matching.edges]
            used.append("subcubic")
    if cubic:
        part = delete_vertices(g, set(range(g.n)) - cubic)
        m, _ = approximate_fim(part.graph, 3)
        edges += [part.edge_map[e] for e in m.edges]
        used.append("localratio")
    return InducedMatching.certify(g, edges), {"algorithms": used}
