"""Exact solution of rational linear systems by fraction-free elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row) -> list[int]:
    den = 1
    for v in row:
        den = lcm(den, Fraction(v).denominator)
    out = [int(Fraction(v) * den) for v in row]
    g = 0
    for v in out:
        g = gcd(g, v)
    return [v // g for v in out] if g > 1 else out


def solve(A, b) -> list[Fraction] | None:
    """One solution of ``A x = b`` (free variables set to 0), or ``None``.

    Rows are scaled to integers and eliminated with cross-multiplication
    followed by content removal, so no rational arithmetic happens until
    back substitution.
    """
    rows = [_integer_row(list(r) + [bi]) for r, bi in zip(A, b)]
    ncols = len(rows[0]) - 1 if rows else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pv = prow[col]
        for k in range(len(rows)):
            if k == rank or not rows[k][col]:
                continue
            f = rows[k][col]
            new = [pv * x - f * y for x, y in zip(rows[k], prow)]
            g = 0
            for v in new:
                g = gcd(g, v)
            rows[k] = [v // g for v in new] if g > 1 else new
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    for k in range(rank, len(rows)):
        if rows[k][-1]:
            return None
    x = [Fraction(0)] * ncols
    for k, col in enumerate(pivots):
        x[col] = Fraction(rows[k][-1], rows[k][col])
    return x
