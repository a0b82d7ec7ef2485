"""Primal-dual 3/7-approximation on a subcubic graph, with its certificate.

Run: python3 demos/03_subcubic_certificate.py
"""
from inducedmatch.extremal import gen_random_bounded
from inducedmatch.oracle import exact_nu_s
from inducedmatch.subcubic import check_pd_certificate, subcubic_primal_dual

def has_cubic_component(g):
    return any(all(g.degree(v) == 3 for v in c) for c in g.components())


# first seed whose graph has no 3-regular component (those go to the local-ratio path)
g = next(h for h in (gen_random_bounded(16, 3, s) for s in range(1000)) if not has_cubic_component(h))

cert = subcubic_primal_dual(g)
nu, _ = exact_nu_s(g)
print(f"graph: n={g.n} m={g.m}")
print(f"picked {cert.matching.size} edges: {[g.edges[e] for e in cert.matching.edges]}")
print(f"dual total {cert.y.total()} <= 7/3 * {cert.matching.size}; optimum is {nu}")
for h in cert.heads:
    print(f"  head at ({h['v0']}, {h['v1']}) on {h['vertices']}, dual mass {h['y_total']}")
print("certificate ok:", check_pd_certificate(g, cert.matching, cert.y))
