"""The fractional induced-matching LP and its dual, solved exactly.

Primal (P): maximise x(E) subject to x(delta(e)) <= 1 for every edge e, x >= 0.
Dual (D):   minimise y(E) subject to y(delta(e)) >= 1 for every edge e, y >= 0.

The constraint matrix is symmetric (f is in delta(e) iff e is in delta(f)),
so the row multipliers of an optimal primal tableau form an optimal dual
vector indexed by the same edge ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph, edge_closed_neighborhood
from .simplex import maximize

ZERO = Fraction(0)
ONE = Fraction(1)


class EdgeWeights(tuple):
    """Nonnegative exact rationals indexed by edge id."""

    def __new__(cls, values: Iterable = ()):
        vals = tuple(Fraction(v) for v in values)
        if any(v < 0 for v in vals):
            raise ValueError("edge weights must be nonnegative")
        return super().__new__(cls, vals)

    @classmethod
    def zeros(cls, m: int) -> "EdgeWeights":
        return cls([ZERO] * m)

    @classmethod
    def uniform(cls, m: int, value) -> "EdgeWeights":
        return cls([Fraction(value)] * m)

    @classmethod
    def from_mapping(cls, m: int, values: dict) -> "EdgeWeights":
        out = [ZERO] * m
        for e, v in values.items():
            out[e] = Fraction(v)
        return cls(out)

    def total(self) -> Fraction:
        return sum(self, ZERO)

    def restrict(self, edge_map: Sequence[int]) -> "EdgeWeights":
        """Pull weights back to a subgraph whose edge ``i`` is ``edge_map[i]`` here."""
        return EdgeWeights(self[e] for e in edge_map)


@dataclass(frozen=True)
class LpSolution:
    weights: EdgeWeights
    objective: Fraction
    role: str  # "primal" or "dual"


def weight_sum(w: Sequence[Fraction], edges: Iterable[int]) -> Fraction:
    return sum((w[e] for e in edges), ZERO)


def _check_dim(g: Graph, w: Sequence) -> None:
    if len(w) != g.m:
        raise ValueError(f"weight vector has dimension {len(w)}, graph has {g.m} edges")


def neighborhood_loads(g: Graph, w: Sequence[Fraction]) -> list[Fraction]:
    """``w(delta(e))`` for every edge, via vertex sums: load(u) + load(v) - w_e."""
    _check_dim(g, w)
    at = [ZERO] * g.n
    for e, (u, v) in enumerate(g.edges):
        at[u] += w[e]
        at[v] += w[e]
    return [at[u] + at[v] - w[e] for e, (u, v) in enumerate(g.edges)]


def check_primal_feasible(g: Graph, x: Sequence[Fraction]) -> bool:
    _check_dim(g, x)
    if any(v < 0 for v in x):
        return False
    return all(load <= 1 for load in neighborhood_loads(g, x))


def check_dual_feasible(g: Graph, y: Sequence[Fraction]) -> bool:
    _check_dim(g, y)
    if any(v < 0 for v in y):
        return False
    return all(load >= 1 for load in neighborhood_loads(g, y))


def constraint_matrix(g: Graph) -> list[list[int]]:
    A = [[0] * g.m for _ in range(g.m)]
    for e in range(g.m):
        for f in edge_closed_neighborhood(g, e):
            A[e][f] = 1
    return A


def _solve(g: Graph):
    if g.m == 0:
        return None
    return maximize([1] * g.m, constraint_matrix(g), [1] * g.m)


@lru_cache(maxsize=512)
def solve_pair(g: Graph) -> tuple[LpSolution, LpSolution]:
    """Optimal primal and dual solutions from a single simplex run."""
    res = _solve(g)
    if res is None:
        empty = EdgeWeights()
        return LpSolution(empty, ZERO, "primal"), LpSolution(empty, ZERO, "dual")
    x = EdgeWeights(res.x)
    y = EdgeWeights(res.duals)
    assert x.total() == res.objective == y.total()
    assert check_primal_feasible(g, x), "simplex returned an infeasible primal"
    assert check_dual_feasible(g, y), "simplex returned an infeasible dual"
    return LpSolution(x, res.objective, "primal"), LpSolution(y, res.objective, "dual")


def solve_primal(g: Graph) -> LpSolution:
    return solve_pair(g)[0]


def solve_dual(g: Graph) -> LpSolution:
    return solve_pair(g)[1]


def fractional_nu_s(g: Graph) -> Fraction:
    return solve_pair(g)[0].objective


def lp_text(g: Graph, which: str = "primal") -> str:
    """Render (P) or (D) in CPLEX-LP syntax, one variable ``x<e>`` per edge id."""
    if which not in ("primal", "dual"):
        raise ValueError(which)
    var = "x" if which == "primal" else "y"
    lines = ["\\ fractional induced matching " + which, "Maximize" if which == "primal" else "Minimize"]
    lines.append(" obj: " + (" + ".join(f"{var}{e}" for e in range(g.m)) or "0"))
    lines.append("Subject To")
    sense = "<=" if which == "primal" else ">="
    for e in range(g.m):
        terms = " + ".join(f"{var}{f}" for f in sorted(edge_closed_neighborhood(g, e)))
        lines.append(f" c{e}: {terms} {sense} 1")
    lines.append("Bounds")
    for e in range(g.m):
        lines.append(f" {var}{e} >= 0")
    lines.append("End")
    return "\n".join(lines) + "\n"
