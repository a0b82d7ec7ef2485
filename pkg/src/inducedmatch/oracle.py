"""Exact induced matching number and matching number by branch and bound.

The induced matching number is a maximum independent set in the square of the
line graph, found on bitmasks with a greedy clique-cover bound.  The matching
number uses a vertex-branching search bounded by half the live vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, InducedMatching, conflict_set, edge_closed_neighborhood, is_matching
from .lp import EdgeWeights

DEFAULT_CAP = 64
CAP_ENV = "INDUCEDMATCH_ORACLE_CAP"


class OracleCapExceeded(RuntimeError):
    pass


def oracle_cap() -> int:
    """Edge-count cap for exact search; overridable through the environment."""
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class ConflictGraph:
    """Vertices are edge ids of the source graph; ``e ~ f`` iff they cannot share an induced matching."""

    size: int
    adjacency: tuple[frozenset[int], ...]

    def masks(self) -> list[int]:
        out = []
        for nb in self.adjacency:
            mask = 0
            for f in nb:
                mask |= 1 << f
            out.append(mask)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(e, f) for e in range(self.size) for f in sorted(self.adjacency[e]) if e < f]


def build_conflict_graph(g: Graph) -> ConflictGraph:
    adj = [set() for _ in range(g.m)]
    for e in range(g.m):
        for f in conflict_set(g, e):
            if f != e:
                adj[e].add(f)
                adj[f].add(e)
    return ConflictGraph(g.m, tuple(frozenset(a) for a in adj))


def line_graph(g: Graph) -> ConflictGraph:
    adj = [frozenset(edge_closed_neighborhood(g, e) - {e}) for e in range(g.m)]
    return ConflictGraph(g.m, tuple(adj))


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _clique_cover_size(cand: int, adj: list[int]) -> int:
    count = 0
    while cand:
        v = _lowest(cand)
        clique_common = adj[v]
        cand &= ~(1 << v)
        rest = cand & clique_common
        while rest:
            w = _lowest(rest)
            cand &= ~(1 << w)
            clique_common &= adj[w]
            rest &= clique_common
        count += 1
    return count


def max_independent_set(adj: list[int]) -> int:
    """Bitmask of a maximum independent set; branches on the lowest candidate id."""
    n = len(adj)
    best = [0, 0]  # size, mask

    def expand(cand: int, chosen: int, size: int) -> None:
        # vertices with no candidate neighbours can always be taken
        while cand:
            free = 0
            c = cand
            while c:
                v = _lowest(c)
                c &= c - 1
                if not adj[v] & cand:
                    free |= 1 << v
            if not free:
                break
            chosen |= free
            size += bin(free).count("1")
            cand &= ~free
        if size > best[0]:
            best[0], best[1] = size, chosen
        if not cand:
            return
        if size + _clique_cover_size(cand, adj) <= best[0]:
            return
        v = _lowest(cand)
        bit = 1 << v
        expand(cand & ~bit & ~adj[v], chosen | bit, size + 1)
        expand(cand & ~bit, chosen, size)

    expand((1 << n) - 1, 0, 0)
    return best[1]


def _mask_to_ids(mask: int) -> list[int]:
    out = []
    while mask:
        out.append(_lowest(mask))
        mask &= mask - 1
    return out


def _guard(g: Graph, cap: int | None) -> None:
    cap = oracle_cap() if cap is None else cap
    if g.m > cap:
        raise OracleCapExceeded(f"graph has {g.m} edges, exact search capped at {cap}")


def exact_nu_s(g: Graph, cap: int | None = None) -> tuple[int, InducedMatching]:
    _guard(g, cap)
    mask = max_independent_set(build_conflict_graph(g).masks())
    witness = InducedMatching.certify(g, _mask_to_ids(mask))
    return witness.size, witness


def _max_matching(g: Graph) -> list[int]:
    """Branch on the lowest vertex that still has an edge: leave it unmatched or match it.

    The bound is half the number of vertices that still have an edge.
    """
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best: list = [0, []]

    def live_vertices(alive: int) -> int:
        live = 0
        c = alive
        while c:
            v = _lowest(c)
            c &= c - 1
            if nbr[v] & alive:
                live |= 1 << v
        return live

    def expand(alive: int, chosen: list) -> None:
        live = live_vertices(alive)
        if len(chosen) > best[0]:
            best[0], best[1] = len(chosen), list(chosen)
        if not live or len(chosen) + bin(live).count("1") // 2 <= best[0]:
            return
        v = _lowest(live)
        rest = alive & ~(1 << v)
        c = nbr[v] & rest
        while c:
            u = _lowest(c)
            c &= c - 1
            chosen.append(g.edge_id(u, v))
            expand(rest & ~(1 << u), chosen)
            chosen.pop()
        expand(rest, chosen)

    expand((1 << g.n) - 1, [])
    return sorted(best[1])


def exact_matching(g: Graph, cap: int | None = None) -> list[int]:
    _guard(g, cap)
    edges = _max_matching(g)
    assert is_matching(g, edges)
    return edges


def exact_matching_number(g: Graph, cap: int | None = None) -> int:
    return len(exact_matching(g, cap))


def half_matching_primal(g: Graph, matching) -> EdgeWeights:
    """Weight 1/2 on each matching edge; always feasible for (P)."""
    es = list(matching)
    if len(set(es)) != len(es) or not is_matching(g, es):
        raise ValueError("edges do not form a matching")
    half = Fraction(1, 2)
    return EdgeWeights.from_mapping(g.m, {e: half for e in es})
