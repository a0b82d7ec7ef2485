"""The blown-up 5-cycle: one induced edge, but a large fractional value.

Run: python3 demos/02_integrality_gap.py
"""
from inducedmatch.extremal import conjecture_gap_bound, gen_blownup_c5, measure_gap

for d in range(2, 7):
    g = gen_blownup_c5(d)
    gap = measure_gap(g)
    print(f"D={d}: n={g.n} m={g.m} gap={gap} (~{float(gap):.3f}), conjectured worst {conjecture_gap_bound(d)}")
