"""Canonical text form of polynomials and rational functions.

Terms are ordered by descending (deg_y, deg_x) and written with explicit
``*`` and ``^``; coefficients are integers or ``p/q``.  The output parses
back to the same value.
"""

from fractions import Fraction


def _monomial(i, j):
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _coeff(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_bpoly(p):
    if not p.terms:
        return "0"
    out = []
    for (i, j) in sorted(p.terms, key=lambda m: (m[1], m[0]), reverse=True):
        c = p.terms[(i, j)]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _monomial(i, j)
        if not mono:
            body = _coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coeff(a)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _is_atom(p):
    return len(p.terms) == 1 and next(iter(p.terms.values())) > 0


def format_ratfunc(f):
    num = format_bpoly(f.num)
    if f.den.is_constant() and f.den.constant_value() == 1:
        return num
    den = format_bpoly(f.den)
    if not _is_atom(f.num):
        num = f"({num})"
    if not (f.den.is_constant() and f.den.constant_value().denominator == 1):
        den = f"({den})"
    return f"{num}/{den}"
