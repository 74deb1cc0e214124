"""Exact linear solving by fraction-free (Bareiss) elimination."""

from fractions import Fraction
from math import lcm


def integer_rows(rows, rhs):
    """Scale each equation of a rational system to integer coefficients."""
    out_rows, out_rhs = [], []
    for r, c in zip(rows, rhs):
        vals = [Fraction(v) for v in r] + [Fraction(c)]
        L = lcm(*(v.denominator for v in vals))
        ints = [int(v * L) for v in vals]
        out_rows.append(ints[:-1])
        out_rhs.append(ints[-1])
    return out_rows, out_rhs


def solve(rows, rhs, ncols):
    """One solution of ``rows @ x = rhs`` over Q, or None if inconsistent.

    ``rows`` are integer lists of length ``ncols``.  Pivots are the first
    nonzero entries in row-major order; free variables are set to zero.
    """
    M = [list(r) + [c] for r, c in zip(rows, rhs)]
    nrows = len(M)
    prev = 1
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][col]
        for i in range(r + 1, nrows):
            mi = M[i][col]
            Mi = M[i]
            Mr = M[r]
            for k in range(col, ncols + 1):
                num = p * Mi[k] - mi * Mr[k]
                q, rem = divmod(num, prev)
                if rem:
                    raise AssertionError("Bareiss division not exact")
                Mi[k] = q
        prev = p
        pivots.append((r, col))
        r += 1
    for i in range(r, nrows):
        if M[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for row, col in reversed(pivots):
        Mr = M[row]
        s = Fraction(Mr[ncols])
        for k in range(col + 1, ncols):
            if Mr[k] and x[k]:
                s -= Mr[k] * x[k]
        x[col] = s / Mr[col]
    return x
