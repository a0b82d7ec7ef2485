import json
from fractions import Fraction

import pytest

from conftest import diamond_with_tail
from inducedmatch.extremal import gen_blownup_c5, gen_complete, gen_cycle, gen_path, gen_random_bounded, gen_t_star
from inducedmatch.good_dual import PreconditionError, build_good_dual, is_t_star, theorem1_bound
from inducedmatch.graph import Graph, delete_vertices
from inducedmatch.lp import check_dual_feasible, fractional_nu_s


def without_small_components(g: Graph) -> Graph:
    small = [v for c in g.components() if len(c) <= 2 for v in c]
    return delete_vertices(g, small).graph


def eligible_graphs(count: int):
    seed = 0
    while count:
        d = 2 + seed % 4
        g = without_small_components(gen_random_bounded(5 + seed % 14, d, seed))
        seed += 1
        if g.m and g.max_degree >= 2:
            count -= 1
            yield g


def assert_good(g: Graph, delta: int):
    good, trace = build_good_dual(g, delta)
    y = good.y
    assert check_dual_feasible(g, y)
    for u in range(g.n):
        if g.degree(u) < delta:
            assert sum((y[e] for e in g.incident(u)), Fraction(0)) >= Fraction(1, 2)
    assert good.total == y.total() <= theorem1_bound(g.n, delta)
    assert fractional_nu_s(g) <= good.total
    assert trace.replay(g.m) == y
    for level in trace.levels:
        if level.tag == "case1":
            assert 2 * len(level.i1) + len(level.i2) <= 2 * (delta - 1)
    return good, trace


def test_degree_bound_examples():
    assert theorem1_bound(7, 3) == 3
    assert theorem1_bound(0, 5) == 0
    assert theorem1_bound(5, 2) == 2
    with pytest.raises(ValueError):
        theorem1_bound(4, 1)


def test_t_star_is_the_equality_case():
    for d in range(2, 7):
        g = gen_t_star(d)
        assert is_t_star(g, d)
        good, _ = assert_good(g, d)
        assert good.total == d == theorem1_bound(g.n, d)


def test_c5_uses_uniform_weights():
    good, trace = assert_good(gen_cycle(5), 2)
    assert set(good.y) == {Fraction(1, 3)} and good.total == Fraction(5, 3)
    assert [lv.tag for lv in trace.levels] == ["regular"]


def test_dense_graphs_with_tail():
    g = Graph(6, list(gen_complete(4).edges) + [(3, 4), (4, 5)])
    good, _ = assert_good(g, 4)
    assert good.total < theorem1_bound(6, 4)
    good, _ = assert_good(diamond_with_tail(), 3)
    assert good.total < theorem1_bound(6, 3)


def test_equality_rewrites_are_exercised():
    a = Graph(7, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (2, 5), (5, 6)])
    b = Graph(14, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (1, 11), (7, 8), (7, 9), (7, 10),
                   (8, 11), (9, 12), (10, 13)])
    c = Graph(7, [(0, 1), (0, 2), (3, 4), (5, 6), (1, 3), (2, 4), (1, 5), (2, 6)])
    tags = set()
    for g in (a, b, c):
        _, trace = assert_good(g, 3)
        tags |= {lv.tag for lv in trace.levels}
    assert {"case1_eq_i2", "case1_eq_tstar", "case2_eq"} <= tags


def test_random_graphs_are_strictly_below_bound():
    tags = set()
    for g in eligible_graphs(150):
        d = g.max_degree
        good, trace = assert_good(g, d)
        tags |= {lv.tag for lv in trace.levels}
        comps_t_star = all(_component_is_t_star(g, c, d) for c in g.components())
        if comps_t_star:
            assert good.total == theorem1_bound(g.n, d)
        else:
            assert good.total < theorem1_bound(g.n, d)
    assert {"regular", "case1", "case2"} <= tags


def _component_is_t_star(g, comp, d):
    return is_t_star(delete_vertices(g, set(range(g.n)) - set(comp)).graph, d)


def test_larger_delta_than_needed():
    good, _ = assert_good(gen_path(5), 3)
    assert good.total < theorem1_bound(5, 3)
    assert_good(gen_blownup_c5(4), 5)


def test_preconditions():
    with pytest.raises(PreconditionError):
        build_good_dual(gen_path(2), 2)
    with pytest.raises(PreconditionError):
        build_good_dual(Graph(4, [(0, 1), (1, 2)]), 2)
    with pytest.raises(PreconditionError):
        build_good_dual(gen_t_star(4), 3)
    with pytest.raises(PreconditionError):
        build_good_dual(gen_path(3), 1)


def test_trace_serializes():
    _, trace = build_good_dual(gen_t_star(3), 3)
    levels = json.loads(trace.to_json())
    assert levels[0]["tag"] == "case1"
    assert all("/" in v for v in levels[0]["assigned"].values())
