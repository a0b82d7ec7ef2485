"""Exact LP bounds on small graphs, and the degree-based upper bound.

Run: python3 demos/01_lp_bounds.py
"""
from inducedmatch.extremal import gen_cycle, gen_t_star
from inducedmatch.good_dual import build_good_dual, theorem1_bound
from inducedmatch.lp import solve_dual, solve_primal
from inducedmatch.oracle import exact_nu_s

for name, g in [("C5", gen_cycle(5)), ("T*(3)", gen_t_star(3)), ("T*(4)", gen_t_star(4))]:
    p, d = solve_primal(g), solve_dual(g)
    nu, _ = exact_nu_s(g)
    print(f"{name}: n={g.n} m={g.m} integral={nu} fractional={p.objective} dual={d.objective}")

# The star-like tree T*(D) is where the D*n/(2D+1) upper bound is tight.
for d in range(2, 6):
    g = gen_t_star(d)
    good, _ = build_good_dual(g, d)
    print(f"T*({d}): explicit dual total {good.total}, bound {theorem1_bound(g.n, d)}")
