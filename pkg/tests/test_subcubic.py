import json
from fractions import Fraction

import pytest

from conftest import FIXTURES, subcubic_corpus
from inducedmatch.extremal import gen_complete, gen_cycle, gen_path, gen_star, gen_t_star
from inducedmatch.graph import Graph, is_induced_matching
from inducedmatch.lp import check_dual_feasible, fractional_nu_s
from inducedmatch.oracle import exact_nu_s
from inducedmatch.subcubic import (MAX_HEAD_ORDER, SubcubicPreconditionError, assign_head_duals, build_head,
                                   check_head_conditions, check_pd_certificate, select_head,
                                   subcubic_primal_dual)

THIRD = Fraction(1, 3)


def load_configurations():
    data = json.loads((FIXTURES / "head_configurations.json").read_text())
    return data["configurations"]


def check_certificate(g, cert):
    y = cert.y
    assert is_induced_matching(g, cert.matching.edges)
    assert check_dual_feasible(g, y)
    for u in range(g.n):
        if 0 < g.degree(u) <= 2:
            assert sum((y[e] for e in g.incident(u)), Fraction(0)) >= THIRD
    assert 3 * y.total() <= 7 * cert.matching.size
    assert cert.ratio_ok


def test_small_examples():
    cert = subcubic_primal_dual(gen_path(3))
    assert cert.matching.edges == (0,) and list(cert.y) == [THIRD, 2 * THIRD]
    cert = subcubic_primal_dual(gen_path(2))
    assert cert.matching.size == 1 and list(cert.y) == [1]
    # two C5s, each with a pendant vertex
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(0, 5)]
    edges += [(a + 6, b + 6) for a, b in edges]
    g = Graph(12, edges)
    cert = subcubic_primal_dual(g)
    check_certificate(g, cert)
    assert 7 * cert.matching.size >= 3 * fractional_nu_s(g)


def test_select_head():
    assert select_head(gen_path(3)) == (0, 1)
    assert select_head(gen_star(3)) == (1, 0)
    assert select_head(gen_cycle(5)) == (0, 1)
    with pytest.raises(ValueError):
        select_head(Graph(3))


def test_build_head_examples():
    head = build_head(gen_path(5), 0, 1)
    assert head.h.vertex_map == (0, 1, 2) and head.isolates == ()
    assert head.boundary == (2,)
    head = build_head(gen_path(4), 0, 1)
    assert head.isolates == (3,) and head.h.graph.n == 4
    head = build_head(gen_star(3), 1, 0)
    assert head.h.graph.n == 4 and head.isolates == ()


def test_head_dual_examples():
    y = assign_head_duals(build_head(gen_path(2), 0, 1))
    assert list(y) == [1]
    star = Graph(4, [(0, 1), (1, 2), (1, 3)])
    y = assign_head_duals(build_head(star, 0, 1))
    assert [3 * v for v in y] == [1, 2, 2]
    triangle = gen_complete(3)
    y = assign_head_duals(build_head(triangle, 0, 1))
    assert y.total() == 1
    assert not any(check_head_conditions(triangle, 0, 1, y).values())


def test_drawn_head_configurations_pass_independent_checker():
    configs = load_configurations()
    assert [c["config"] for c in configs] == list(range(1, 57))
    for c in configs:
        g = Graph(c["n"], [(a, b) for a, b, _ in c["edges"]])
        y = [Fraction(w, 3) for *_, w in c["edges"]]
        assert not any(check_head_conditions(g, 0, 1, y).values()), c["config"]
        assert g.n <= MAX_HEAD_ORDER
        # the per-head program never needs more than the drawn weights
        head = build_head(g, 0, 1)
        if head.h.graph.n == g.n:
            assert assign_head_duals(head).total() <= sum(y)


def test_checker_detects_violations():
    star = Graph(4, [(0, 1), (1, 2), (1, 3)])
    bad = check_head_conditions(star, 0, 1, [Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)])
    assert bad["b"] == [2]
    bad = check_head_conditions(gen_path(2), 0, 1, [Fraction(1, 2)])
    assert bad["a"] == [0]
    bad = check_head_conditions(gen_path(2), 0, 1, [Fraction(3)])
    assert bad["e"]


def test_corpus_certificates_and_oracle():
    worst = Fraction(0)
    for g in subcubic_corpus(200):
        cert = subcubic_primal_dual(g)
        check_certificate(g, cert)
        nu_star = fractional_nu_s(g)
        assert 7 * cert.matching.size >= 3 * nu_star
        nu, _ = exact_nu_s(g)
        assert 7 * cert.matching.size >= 3 * nu
        worst = max([worst] + [Fraction(h["y_total"]) for h in cert.heads])
    assert worst <= Fraction(7, 3)


def test_isolated_vertices_are_ignored():
    g = Graph(6, [(1, 2), (2, 3), (4, 5)])
    cert = subcubic_primal_dual(g)
    check_certificate(g, cert)
    assert check_pd_certificate(g, cert.matching.edges, cert.y)


def test_preconditions():
    with pytest.raises(SubcubicPreconditionError):
        subcubic_primal_dual(gen_complete(4))
    with pytest.raises(SubcubicPreconditionError):
        subcubic_primal_dual(gen_star(4))
    # a cubic component next to a path is rejected too
    g = Graph(7, list(gen_complete(4).edges) + [(4, 5), (5, 6)])
    with pytest.raises(SubcubicPreconditionError):
        subcubic_primal_dual(g)


def test_certificate_json():
    d = subcubic_primal_dual(gen_t_star(3)).to_dict()
    assert d["ratio_ok"] is True
    assert all("/" in v for v in d["y"])
