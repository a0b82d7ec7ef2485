"""Local-ratio rounding for larger degree bounds, and its parameter choice.

Run: python3 demos/04_local_ratio.py
"""
from inducedmatch.extremal import gen_random_bounded
from inducedmatch.local_ratio import approximate_fim, default_params, q_slacks

p = default_params(3)
s1, s2 = q_slacks(p.epsilon, p.c)
print(f"epsilon={p.epsilon} c={p.c}: constraint slacks {float(s1):.2e}, {float(s2):.2e}")

for d in (3, 4, 5):
    g = gen_random_bounded(24, d, 11)
    m, cert = approximate_fim(g, d)
    print(f"D={d}: |M|={m.size}, LP={cert.nu_s_star} (~{float(cert.nu_s_star):.2f}), "
          f"f={float(cert.f):.3f}, |M|*f >= LP: {cert.ratio_ok}")
