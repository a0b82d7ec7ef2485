"""Independent re-checking of solver reports.

Nothing here reuses the solver-side feasibility helpers: loads, conflict
tests and bounds are recomputed from the embedded edge list so that a bug in
the library cannot certify itself.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations

_RATIONAL = re.compile(r"^-?\d+/\d+$")
BRUTE_FORCE_LIMIT = 24


class MalformedReport(ValueError):
    pass


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise MalformedReport(f"expected a 'p/q' string, got {s!r}")
    return Fraction(s)


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class _Edges:
    def __init__(self, n: int, edges):
        self.n = n
        self.edges = [tuple(e) for e in edges]
        self.at = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise MalformedReport(f"bad edge {u} {v}")
            self.at[u].append(i)
            self.at[v].append(i)
        self.pairs = set(map(frozenset, self.edges))
        if len(self.pairs) != len(self.edges):
            raise MalformedReport("repeated edge")

    def closed(self, i: int) -> set[int]:
        u, v = self.edges[i]
        return set(self.at[u]) | set(self.at[v])

    def adjacent_or_joined(self, i: int, j: int) -> bool:
        a, b = self.edges[i]
        c, d = self.edges[j]
        if {a, b} & {c, d}:
            return True
        return any(frozenset((x, y)) in self.pairs for x in (a, b) for y in (c, d))

    def degree(self, v: int) -> int:
        return len(self.at[v])


def _vector(report, key, m, errors) -> list[Fraction] | None:
    raw = report.get(key)
    if raw is None:
        return None
    if not isinstance(raw, list) or len(raw) != m:
        errors.append(f"{key}: expected {m} entries")
        return None
    vals = [parse_rational(s) for s in raw]
    for e, val in enumerate(vals):
        if val < 0:
            errors.append(f"{key}[{e}] is negative")
    return vals


def _max_induced(g: _Edges) -> int:
    best = 0

    def grow(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(g.edges)):
            if all(not g.adjacent_or_joined(i, j) for j in chosen):
                chosen.append(i)
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best


def verify_report(report: dict) -> list[str]:
    """Return the list of violated checks (empty iff the report verifies)."""
    try:
        gdata = report["graph"]
        g = _Edges(int(gdata["n"]), gdata["edges"])
    except (KeyError, TypeError) as exc:
        raise MalformedReport(f"missing or invalid graph: {exc}") from exc
    m = len(g.edges)
    errors: list[str] = []

    matching = report.get("matching")
    if matching is not None:
        if any(not isinstance(e, int) or not 0 <= e < m for e in matching):
            raise MalformedReport("matching holds invalid edge ids")
        if len(set(matching)) != len(matching):
            errors.append("matching repeats an edge")
        for i, j in combinations(matching, 2):
            if g.adjacent_or_joined(i, j):
                errors.append(f"matching edges {i} and {j} are adjacent or joined by an edge")
        if report.get("size") is not None and report["size"] != len(matching):
            errors.append(f"size {report['size']} != {len(matching)} matching edges")

    lp = report.get("lp")
    lp_value = None
    if lp is not None:
        x = _vector(lp, "x", m, errors)
        y = _vector(lp, "y", m, errors)
        lp_value = parse_rational(lp["value"])
        if x is not None:
            for e in range(m):
                load = sum((x[f] for f in g.closed(e)), Fraction(0))
                if load > 1:
                    errors.append(f"lp.x violates the constraint of edge {e}: {load} > 1")
            if sum(x, Fraction(0)) != lp_value:
                errors.append("lp.x total differs from lp.value")
        if y is not None:
            for e in range(m):
                load = sum((y[f] for f in g.closed(e)), Fraction(0))
                if load < 1:
                    errors.append(f"lp.y violates the covering constraint of edge {e}: {load} < 1")
            if sum(y, Fraction(0)) != lp_value:
                errors.append("lp.y total differs from lp.value")
        if x is None or y is None:
            errors.append("lp block needs both x and y to certify optimality")
        if "nu_s_star" in report and parse_rational(report["nu_s_star"]) != lp_value:
            errors.append("nu_s_star differs from lp.value")

    if report.get("nu_s") is not None:
        nu = report["nu_s"]
        if matching is None or len(matching) != nu:
            errors.append("nu_s is not witnessed by the matching")
        if lp_value is not None and nu > lp_value:
            errors.append(f"nu_s = {nu} exceeds the LP value {lp_value}")
        if m <= BRUTE_FORCE_LIMIT and _max_induced(g) != nu:
            errors.append("nu_s is not the maximum (exhaustive recount differs)")

    pd = report.get("pd")
    if pd is not None:
        y = _vector(pd, "y", m, errors)
        size = len(matching or [])
        ok = True
        if y is not None:
            for e in range(m):
                if sum((y[f] for f in g.closed(e)), Fraction(0)) < 1:
                    errors.append(f"pd.y violates the covering constraint of edge {e}")
                    ok = False
            for v in range(g.n):
                if 0 < g.degree(v) <= 2 and sum((y[e] for e in g.at[v]), Fraction(0)) < Fraction(1, 3):
                    errors.append(f"pd.y gives vertex {v} of degree {g.degree(v)} less than 1/3")
                    ok = False
            if sum(y, Fraction(0)) * 3 > 7 * size:
                errors.append(f"pd.y total exceeds 7/3 times the matching size {size}")
                ok = False
            if sum(y, Fraction(0)) != parse_rational(pd["y_total"]):
                errors.append("pd.y_total differs from the sum of pd.y")
        if pd.get("ratio_ok") is not ok:
            errors.append(f"pd.ratio_ok claims {pd.get('ratio_ok')}, recheck gives {ok}")

    lr = report.get("lr")
    if lr is not None:
        eps, delta = parse_rational(lr["epsilon"]), int(lr["delta"])
        f = (1 - eps) * delta + Fraction(1, 2)
        if parse_rational(lr["f"]) != f:
            errors.append(f"lr.f should be {f}")
        if delta < max((g.degree(v) for v in range(g.n)), default=0):
            errors.append("lr.delta is below the maximum degree")
        if lp_value is None:
            errors.append("lr block needs an lp block for nu_s_star")
        else:
            ok = f * len(matching or []) >= lp_value
            if not ok:
                errors.append(f"|M| f = {f * len(matching or [])} < nu_s_star = {lp_value}")
            if lr.get("ratio_ok") is not ok:
                errors.append(f"lr.ratio_ok claims {lr.get('ratio_ok')}, recheck gives {ok}")

    guarantee = report.get("guarantee")
    if guarantee is not None:
        ratio = parse_rational(guarantee)
        if lp_value is None:
            errors.append("guarantee needs an lp block")
        elif ratio * len(matching or []) < lp_value:
            errors.append(f"|M| * {ratio} < nu_s_star = {lp_value}")
    return errors
