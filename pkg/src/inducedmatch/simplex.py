"""Exact primal simplex for ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``.

The tableau is kept fraction-free: every entry is an integer equal to the
true value times the current basis determinant ``D`` (integer pivoting in the
style of Edmonds/Bareiss).  The slack basis is feasible because ``b >= 0``, so
no phase one is needed.  Entering and leaving variables follow Bland's rule,
which prevents cycling and makes the reported optimal vertex deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


class LPError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SimplexResult:
    x: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]
    objective: Fraction
    pivots: int


def _integer_row(values: Sequence, extra=()) -> tuple[list[int], int]:
    vals = [Fraction(v) for v in values] + [Fraction(v) for v in extra]
    scale = lcm(1, *(v.denominator for v in vals))
    return [int(v * scale) for v in vals], scale


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence, max_pivots: int = 1_000_000) -> SimplexResult:
    """Solve the LP exactly.

    ``duals[i]`` is the optimal multiplier of row ``i``; by strong duality
    ``sum(b[i] * duals[i]) == objective``.  Raises :class:`LPError` when the
    program is unbounded or ``b`` has a negative entry.
    """
    m, n = len(A), len(c)
    if len(b) != m or any(len(row) != n for row in A):
        raise LPError("dimension mismatch")
    if any(Fraction(bi) < 0 for bi in b):
        raise LPError("right-hand side must be nonnegative")

    # Rows are scaled to integers: (s_i a_i) x + t_i = s_i b_i with slack t_i.
    # The slack basis is the identity, so the starting determinant is 1.
    rows: list[list[int]] = []
    row_scale: list[int] = []
    for i in range(m):
        ints, s = _integer_row(A[i], (b[i],))
        row = ints[:n] + [0] * m + [ints[n]]
        row[n + i] = 1
        rows.append(row)
        row_scale.append(s)
    cints, cscale = _integer_row(c)
    obj = [-v for v in cints] + [0] * (m + 1)  # D * (z_j - c_j)
    D = 1
    basis = [n + i for i in range(m)]

    pivots = 0
    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                # compare rhs_i / a  (both scaled by D); ties -> lowest basic var
                key_num, key_den = rows[i][-1], a
                if best is None:
                    best = (i, key_num, key_den)
                else:
                    _, bn, bd = best
                    lhs, rhs = key_num * bd, bn * key_den
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[best[0]]):
                        best = (i, key_num, key_den)
        if best is None:
            raise LPError("unbounded")
        r = best[0]
        pivot_row = rows[r]
        p = pivot_row[enter]
        for k in range(m):
            if k == r:
                continue
            row = rows[k]
            q = row[enter]
            if q == 0:
                rows[k] = [(p * v) // D for v in row]
            else:
                rows[k] = [(p * v - q * pv) // D for v, pv in zip(row, pivot_row)]
        q = obj[enter]
        obj = [(p * v - q * pv) // D for v, pv in zip(obj, pivot_row)]
        D = p
        basis[r] = enter
        pivots += 1
        if pivots > max_pivots:
            raise LPError("pivot limit exceeded")

    x = [Fraction(0)] * (n + m)
    for i, var in enumerate(basis):
        x[var] = Fraction(rows[i][-1], D)
    objective = Fraction(obj[-1], D * cscale)
    # reduced cost of slack i is the multiplier of scaled row i
    duals = tuple(Fraction(obj[n + i] * row_scale[i], D * cscale) for i in range(m))
    return SimplexResult(tuple(x[:n]), duals, objective, pivots)
