"""Instance generators and the integrality-gap formulas for blown-up C5."""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph
from .lp import EdgeWeights, check_primal_feasible, fractional_nu_s
from .oracle import exact_nu_s

FAMILIES = ("t_star", "blownup_c5", "random_bounded", "path", "cycle", "complete", "star")


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    delta: int = 0
    n: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        need_delta = {"t_star": 1, "blownup_c5": 2, "random_bounded": 1, "star": 1}
        if self.family in need_delta and self.delta < need_delta[self.family]:
            raise ValueError(f"{self.family} needs delta >= {need_delta[self.family]}")
        need_n = {"random_bounded": 1, "path": 1, "cycle": 3, "complete": 1}
        if self.family in need_n and self.n < need_n[self.family]:
            raise ValueError(f"{self.family} needs n >= {need_n[self.family]}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    @property
    def instance_id(self) -> str:
        return f"{self.family}-d{self.delta}-n{self.n}-s{self.seed}"

    def build(self) -> Graph:
        f = self.family
        if f == "t_star":
            return gen_t_star(self.delta)
        if f == "blownup_c5":
            return gen_blownup_c5(self.delta)
        if f == "random_bounded":
            return gen_random_bounded(self.n, self.delta, self.seed)
        if f == "path":
            return gen_path(self.n)
        if f == "cycle":
            return gen_cycle(self.n)
        if f == "star":
            return gen_star(self.delta)
        return gen_complete(self.n)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "InstanceSpec":
        unknown = set(d) - {"family", "delta", "n", "seed"}
        if unknown:
            raise ValueError(f"unknown keys {sorted(unknown)}")
        return cls(**d)


def load_manifest(text: str) -> list[dict]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = data.get("instances", [])
    if not isinstance(data, list):
        raise ValueError("manifest must be a list of instance specs")
    return data


def dump_manifest(specs: list[InstanceSpec]) -> str:
    return json.dumps({"instances": [s.to_dict() for s in specs]}, indent=2) + "\n"


# -- families -----------------------------------------------------------------

def gen_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))


def gen_complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def gen_star(delta: int) -> Graph:
    return Graph(delta + 1, [(0, i) for i in range(1, delta + 1)])


def gen_t_star(delta: int) -> Graph:
    """Star ``K_{1,delta}`` with every edge subdivided once.

    Vertex 0 is the centre, ``1..delta`` the subdivision vertices and
    ``delta+i`` the leaf hanging off vertex ``i``.
    """
    if delta < 1:
        raise ValueError("t_star needs delta >= 1")
    edges = [(0, i) for i in range(1, delta + 1)] + [(i, delta + i) for i in range(1, delta + 1)]
    return Graph(2 * delta + 1, sorted(edges))


def blowup_class_sizes(delta: int) -> list[int]:
    lo, hi = delta // 2, (delta + 1) // 2
    return [lo, lo, lo, hi, hi]


def gen_blownup_c5(delta: int) -> Graph:
    """C5 with its vertices replaced by independent sets, consecutive classes joined completely.

    Class sizes in cyclic order are floor, floor, floor, ceil, ceil of
    ``delta/2``; vertex ids are assigned class by class.
    """
    if delta < 2:
        raise ValueError("blownup_c5 needs delta >= 2")
    sizes = blowup_class_sizes(delta)
    start = [sum(sizes[:i]) for i in range(5)]
    classes = [list(range(start[i], start[i] + sizes[i])) for i in range(5)]
    edges = []
    for i in range(5):
        for u in classes[i]:
            for v in classes[(i + 1) % 5]:
                edges.append((min(u, v), max(u, v)))
    g = Graph(sum(sizes), sorted(edges))
    assert g.max_degree == delta
    return g


def blowup_classes(delta: int) -> list[list[int]]:
    sizes = blowup_class_sizes(delta)
    start = [sum(sizes[:i]) for i in range(5)]
    return [list(range(start[i], start[i] + sizes[i])) for i in range(5)]


def gen_random_bounded(n: int, delta: int, seed: int) -> Graph:
    """Shuffle all vertex pairs with ``random.Random(seed)``; keep a pair while both degrees allow."""
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < delta and deg[v] < delta:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, sorted(edges))


# -- gap formulas ---------------------------------------------------------------

def conjecture_gap_bound(delta: int) -> Fraction:
    """Conjectured maximum of nu_s^* / nu_s over graphs of maximum degree ``delta``."""
    if delta < 2:
        raise ValueError("delta must be >= 2")
    d = delta
    if d % 2 == 0:
        return Fraction(5 * d * d, 8 * d - 4)
    den = 8 * d * d - 36 * d + 20
    if den == 0:
        raise ZeroDivisionError(f"odd-case denominator vanishes at delta={d}")
    return Fraction(5 * d**3 - 21 * d * d + 7 * d + 1, den)


def blowup_optimal_primal(delta: int) -> EdgeWeights:
    """Closed-form optimal (P) solution on ``gen_blownup_c5(delta)``.

    Even delta: uniform ``1/(2 delta - 1)``.  Odd delta: edges between a class
    of size (delta-1)/2 and one of size (delta+1)/2 get ``(delta-5)/q``, all
    others ``(delta-3)/q`` with ``q = 2 delta^2 - 9 delta + 5``.  Feasibility and
    the objective value are checked before returning.
    """
    g = gen_blownup_c5(delta)
    if delta % 2 == 0:
        x = EdgeWeights.uniform(g.m, Fraction(1, 2 * delta - 1))
    else:
        q = 2 * delta * delta - 9 * delta + 5
        if q == 0:
            raise ValueError(f"formula undefined at delta={delta}")
        mixed, other = Fraction(delta - 5, q), Fraction(delta - 3, q)
        if mixed < 0 or other < 0:
            raise ValueError(f"formula gives negative weights at delta={delta}")
        cls = {}
        for i, members in enumerate(blowup_classes(delta)):
            for v in members:
                cls[v] = i
        sizes = blowup_class_sizes(delta)
        vals = []
        for u, v in g.edges:
            su, sv = sizes[cls[u]], sizes[cls[v]]
            vals.append(mixed if su != sv else other)
        x = EdgeWeights(vals)
    if not check_primal_feasible(g, x):
        raise ArithmeticError(f"closed-form primal infeasible at delta={delta}")
    if x.total() != conjecture_gap_bound(delta):
        raise ArithmeticError(f"closed-form objective {x.total()} != gap bound at delta={delta}")
    return x


def measure_gap(g: Graph, cap: int | None = None) -> Fraction:
    """Exact ratio nu_s^*(g) / nu_s(g)."""
    if g.m == 0:
        raise ValueError("gap undefined on an edgeless graph")
    nu, _ = exact_nu_s(g, cap)
    return fractional_nu_s(g) / nu
