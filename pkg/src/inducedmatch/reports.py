"""Run an algorithm on a graph and package the result as a checkable report."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .extremal import InstanceSpec, conjecture_gap_bound
from .graph import Graph
from .local_ratio import approximate_fim, auto_induced_matching, cubic_components, default_params
from .lp import solve_pair
from .oracle import OracleCapExceeded, exact_nu_s, oracle_cap
from .subcubic import HEAD_BUDGET, SubcubicPreconditionError, subcubic_primal_dual
from .verify import format_rational

ALGORITHMS = ("lp", "dual", "exact", "subcubic", "localratio", "auto")


def _vec(w) -> list[str]:
    return [format_rational(v) for v in w]


def _lp_block(g: Graph) -> dict:
    x, y = solve_pair(g)
    return {"value": format_rational(x.objective), "x": _vec(x.weights), "y": _vec(y.weights)}


def ratio_delta(g: Graph, delta: int | None = None) -> int:
    """Degree bound used by the local-ratio pipeline: at least 3 and at least Delta(G)."""
    d = max(3, g.max_degree)
    if delta is not None:
        if delta < g.max_degree:
            raise ValueError(f"--delta {delta} is below the maximum degree {g.max_degree}")
        d = max(d, delta)
    return d


def build_report(g: Graph, algo: str, delta: int | None = None, instance: str = "") -> dict:
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    report: dict = {"instance": instance, "algorithm": algo,
                    "graph": {"n": g.n, "edges": [list(e) for e in g.edges]}}
    lp = _lp_block(g)
    report["nu_s_star"] = lp["value"]
    report["lp"] = lp
    if algo == "exact":
        nu, witness = exact_nu_s(g)
        report["nu_s"] = nu
        report["matching"] = list(witness.edges)
    elif algo == "subcubic":
        cert = subcubic_primal_dual(g)
        report["matching"] = list(cert.matching.edges)
        d = cert.to_dict()
        report["pd"] = {"y": d["y"], "y_total": d["y_total"], "ratio_ok": cert.ratio_ok,
                        "heads": list(cert.heads)}
    elif algo == "localratio":
        d = ratio_delta(g, delta)
        params = default_params(d)
        m, cert = approximate_fim(g, d, params)
        report["matching"] = list(m.edges)
        report["lr"] = {"epsilon": format_rational(params.epsilon), "c": format_rational(params.c),
                        "delta": d, "f": format_rational(params.f), "ratio_ok": cert.ratio_ok,
                        "preprocess_trace": list(cert.preprocess_trace)}
    elif algo == "auto":
        m, info = auto_induced_matching(g)
        report["matching"] = list(m.edges)
        report["dispatch"] = info["algorithms"]
        guarantee = HEAD_BUDGET if info["algorithms"] == ["subcubic"] else default_params(
            ratio_delta(g, delta)).f
        report["guarantee"] = format_rational(guarantee)
    if "matching" in report:
        report["size"] = len(report["matching"])
    return report


def add_float_view(report: dict) -> dict:
    """Decimal approximations of the headline rationals, for reading only."""
    approx = {}
    for key in ("nu_s_star", "guarantee"):
        if key in report:
            approx[key] = float(Fraction(report[key]))
    for block, keys in (("pd", ("y_total",)), ("lr", ("f",))):
        for k in keys:
            if block in report:
                approx[f"{block}.{k}"] = float(Fraction(report[block][k]))
    report["approximate_floats"] = approx
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def run_timed(g: Graph, algo: str, **kw) -> dict:
    t0 = time.perf_counter()
    report = build_report(g, algo, **kw)
    report["wall_time_s"] = round(time.perf_counter() - t0, 6)
    return report


# -- batch ----------------------------------------------------------------------

CSV_COLUMNS = ("index", "instance", "family", "delta", "n", "m", "max_degree", "nu_s", "nu_s_star",
               "gap", "gap_bound", "gap_ok", "size_subcubic", "subcubic_ok", "size_localratio",
               "localratio_ok", "size_auto", "error")


def batch_row(index: int, raw) -> dict:
    row = dict.fromkeys(CSV_COLUMNS, "")
    row["index"] = index
    try:
        spec = InstanceSpec.from_dict(raw) if isinstance(raw, dict) else None
        if spec is None:
            raise ValueError("instance spec must be an object")
        row.update(instance=spec.instance_id, family=spec.family, delta=spec.delta)
        g = spec.build()
        row.update(n=g.n, m=g.m, max_degree=g.max_degree)
        x, _ = solve_pair(g)
        row["nu_s_star"] = format_rational(x.objective)
        if g.m and g.m <= oracle_cap():
            nu, _ = exact_nu_s(g)
            row["nu_s"] = nu
            gap = x.objective / nu
            row["gap"] = format_rational(gap)
            if g.max_degree >= 2:
                bound = conjecture_gap_bound(g.max_degree)
                row["gap_bound"] = format_rational(bound)
                row["gap_ok"] = gap <= bound
        if g.m and g.max_degree <= 3 and not cubic_components(g):
            cert = subcubic_primal_dual(g)
            row["size_subcubic"] = cert.matching.size
            row["subcubic_ok"] = 7 * cert.matching.size >= 3 * x.objective
        if g.m:
            d = ratio_delta(g)
            m, cert = approximate_fim(g, d)
            row["size_localratio"] = m.size
            row["localratio_ok"] = cert.ratio_ok
            row["size_auto"] = auto_induced_matching(g)[0].size
    except (ValueError, TypeError, OracleCapExceeded, SubcubicPreconditionError, AssertionError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}".replace("\n", " ")
    return row


def _row_star(args):
    return batch_row(*args)


def run_batch(specs: list, jobs: int = 1) -> list[dict]:
    work = list(enumerate(specs))
    if jobs <= 1:
        return [batch_row(i, s) for i, s in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_star, work))


def rows_to_csv(rows: list[dict]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in r.items()})
    return buf.getvalue()
