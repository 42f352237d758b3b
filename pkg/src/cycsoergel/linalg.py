"""Exact rank computations over a field (entries CycNumber, Fraction or int)."""
from __future__ import annotations

from fractions import Fraction


def rank(rows) -> int:
    """Row rank by Gaussian elimination; ``rows`` is a list of equal-length lists."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        inv = 1 / (Fraction(p) if isinstance(p, int) else p)
        pivot_row = [x * inv if x else x for x in m[r]]
        m[r] = pivot_row
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = [a - f * b if b else a for a, b in zip(m[i], pivot_row)]
        r += 1
        if r == len(m):
            break
    return r


def nullity(columns) -> int:
    """Dimension of the kernel of the map whose images of basis vectors are ``columns``."""
    return len(columns) - rank(columns)
