import json
from fractions import Fraction

import pytest

from inducedmatch.extremal import (InstanceSpec, blowup_class_sizes, blowup_optimal_primal, conjecture_gap_bound,
                                   dump_manifest, gen_blownup_c5, gen_cycle, gen_random_bounded, gen_t_star,
                                   load_manifest, measure_gap)
from inducedmatch.graph import Graph
from inducedmatch.lp import check_primal_feasible, fractional_nu_s
from inducedmatch.oracle import exact_nu_s


def test_t_star_shape():
    assert gen_t_star(1).edges == ((0, 1), (1, 2))
    g = gen_t_star(3)
    assert (g.n, g.m) == (7, 6)
    assert sorted(g.degrees()) == [1, 1, 1, 2, 2, 2, 3]
    assert exact_nu_s(g)[0] == 3 and fractional_nu_s(g) == 3
    with pytest.raises(ValueError):
        gen_t_star(0)


def test_blowup_shape():
    assert gen_blownup_c5(2) == gen_cycle(5)
    g = gen_blownup_c5(4)
    assert (g.n, g.m) == (10, 20) and g.is_regular(4)
    assert blowup_class_sizes(3) == [1, 1, 1, 2, 2] and gen_blownup_c5(3).n == 7
    for d in range(2, 9):
        assert gen_blownup_c5(d).max_degree == d
    with pytest.raises(ValueError):
        gen_blownup_c5(1)


def test_gap_bound_values():
    assert conjecture_gap_bound(4) == Fraction(20, 7)
    assert conjecture_gap_bound(3) == 2
    assert conjecture_gap_bound(6) == Fraction(45, 11)
    with pytest.raises(ValueError):
        conjecture_gap_bound(1)


def test_blowup_lp_equals_bound():
    for d in (2, 4, 6, 8):
        assert fractional_nu_s(gen_blownup_c5(d)) == Fraction(5 * d * d, 8 * d - 4)
    for d in (3, 5, 7):
        x = blowup_optimal_primal(d)
        g = gen_blownup_c5(d)
        assert check_primal_feasible(g, x)
        assert x.total() == conjecture_gap_bound(d) == fractional_nu_s(g)
    assert set(blowup_optimal_primal(3)) == {Fraction(1, 2), Fraction(0)}
    assert set(blowup_optimal_primal(5)) == {Fraction(0), Fraction(1, 5)}


def test_measure_gap_examples():
    assert measure_gap(gen_blownup_c5(4)) == Fraction(20, 7)
    assert measure_gap(gen_t_star(3)) == 1
    assert measure_gap(gen_cycle(5)) == Fraction(5, 3)
    with pytest.raises(ValueError):
        measure_gap(Graph(3))


def test_random_generator():
    assert gen_random_bounded(1, 3, 9) == Graph(1)
    assert gen_random_bounded(10, 3, 5) == gen_random_bounded(10, 3, 5)
    for s in range(100):
        assert gen_random_bounded(14, 3, s).max_degree <= 3


def test_instance_specs():
    spec = InstanceSpec("random_bounded", 3, 12, 7)
    assert InstanceSpec.from_dict(spec.to_dict()) == spec
    assert spec.build() == gen_random_bounded(12, 3, 7)
    for bad in ({"family": "nope"}, {"family": "t_star", "delta": 0}, {"family": "cycle", "n": 2},
                {"family": "path", "n": 3, "seed": -1}, {"family": "path", "n": 3, "extra": 1}):
        with pytest.raises((ValueError, TypeError)):
            InstanceSpec.from_dict(bad)
    text = dump_manifest([spec, InstanceSpec("t_star", 2)])
    assert [InstanceSpec.from_dict(d) for d in load_manifest(text)][0] == spec
    assert load_manifest(json.dumps([spec.to_dict()])) == [spec.to_dict()]
