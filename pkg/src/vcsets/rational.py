"""Exact rational linear algebra: rank and strict-inequality feasibility."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = tuple[Fraction, ...]


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-exact Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][col] / m[r][col]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solvable(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> bool:
    """Whether ``matrix @ a = rhs`` has a solution (Rouché–Capelli)."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    return rank(matrix) == rank(aug)


def _normalize(coeffs: Sequence[Fraction], const: Fraction) -> tuple[int, ...]:
    """Scale ``coeffs . a + const > 0`` to coprime integers (positive factor only)."""
    vals = list(coeffs) + [const]
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def strictly_feasible(system: Sequence[tuple[Sequence[Fraction], Fraction]]) -> bool:
    """Decide whether ``coeffs . a + const > 0`` holds for all rows at once.

    Fourier–Motzkin elimination.  For strict inequalities the positive combination
    of two strict rows is strict again, so projecting variable by variable is exact
    and the system is feasible iff every constant-only row left has a positive
    constant.
    """
    rows = set()
    for coeffs, const in system:
        rows.add(_normalize(coeffs, Fraction(const)))
    if not rows:
        return True
    nvars = len(next(iter(rows))) - 1
    for k in range(nvars):
        pos, neg, rest = [], [], set()
        for row in rows:
            if row[k] > 0:
                pos.append(row)
            elif row[k] < 0:
                neg.append(row)
            elif any(row[:-1]):
                rest.add(row)
            elif row[-1] <= 0:
                return False
        for p in pos:
            for q in neg:
                combo = [-q[k] * x + p[k] * y for x, y in zip(p, q)]
                if not any(combo[:-1]):
                    if combo[-1] <= 0:
                        return False
                    continue
                g = 0
                for v in combo:
                    g = gcd(g, v)
                rest.add(tuple(v // g for v in combo))
        rows = rest
        if not rows:
            return True
    return all(row[-1] > 0 for row in rows)
