import sys
from functools import lru_cache
from pathlib import Path

from inducedmatch.extremal import (gen_blownup_c5, gen_complete, gen_cycle, gen_path, gen_random_bounded,
                                   gen_star, gen_t_star)
from inducedmatch.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


@lru_cache(maxsize=None)
def standard_corpus() -> tuple:
    """(label, graph) pairs: classic families plus seeded random graphs with Delta <= 5, n <= 25."""
    out = []
    for n in range(1, 13):
        out.append((f"path{n}", gen_path(n)))
    for n in range(3, 16):
        out.append((f"cycle{n}", gen_cycle(n)))
    for d in range(1, 6):
        out.append((f"star{d}", gen_star(d)))
        out.append((f"tstar{d}", gen_t_star(d)))
    for d in range(2, 7):
        out.append((f"blowup{d}", gen_blownup_c5(d)))
    for n in range(2, 6):
        out.append((f"K{n}", gen_complete(n)))
    for d in range(2, 6):
        for n in (6, 9, 12, 16, 20, 25):
            for seed in range(7):
                out.append((f"rand-n{n}-d{d}-s{seed}", gen_random_bounded(n, d, seed)))
    return tuple(out)


def subcubic_corpus(count: int = 300, max_n: int = 20) -> list:
    """Random subcubic graphs without 3-regular components or isolated-only content."""
    out = []
    seed = 0
    while len(out) < count:
        n = 4 + seed % (max_n - 3)
        g = gen_random_bounded(n, 2 + seed % 2, seed)
        seed += 1
        if g.m == 0 or any(all(g.degree(v) == 3 for v in c) for c in g.components()):
            continue
        out.append(g)
    return out


def diamond_with_tail() -> Graph:
    """K4 minus an edge, plus a path of length 2 hanging off a degree-2 vertex."""
    return Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (4, 5)])
