"""Polynomial-in-y solutions of ``u = p(x+m, y-n) - p(x, y)``.

With ``u = a/b`` and b free of y, a Gosper representation of
``b(x)/b(x+m)`` pins the x-denominator of any solution, a degree bound
limits the numerator, and an undetermined-coefficients linear system
decides solvability.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .dispersion import disp_uni
from .factor import factor_upoly
from .linalg import integer_rows, solve
from .poly import BPoly, UPoly, upoly_gcd
from .ratfunc import RatFunc


@dataclass(frozen=True)
class GosperRep:
    """``b(x)/b(x+m) = (A/B) * C(x+m)/C(x)`` with gcd(A(x), B(x+hm)) = 1, h >= 0."""

    A: UPoly
    B: UPoly
    C: UPoly


@dataclass(frozen=True)
class KernelProblem:
    a: BPoly
    b: UPoly
    m: int
    n: int
    d0: int

    def __post_init__(self):
        if self.b.is_zero():
            raise ValueError("zero denominator")
        if self.m <= 0:
            raise ValueError("shift m must be positive")
        if self.d0 <= 0 or self.a.deg_y >= self.d0:
            raise ValueError("deg_y(a) must be below d0")

    @property
    def u(self):
        return RatFunc(self.a, BPoly.from_upoly(self.b, "x"))


@dataclass(frozen=True)
class KernelSolution:
    p: RatFunc
    p1: BPoly
    d4: int


def _shift_step_hs(A, B, m):
    """All h >= 1 with gcd(A(x), B(x + h*m)) nontrivial."""
    fa = [f.monic() for f, _ in factor_upoly(A).factors] if A.degree > 0 else []
    fb = [f.monic() for f, _ in factor_upoly(B).factors] if B.degree > 0 else []
    hs = set()
    for alpha in fa:
        for beta in fb:
            # alpha(x) = beta(x + k)
            for k in disp_uni(alpha, beta, "x").values:
                if k > 0 and k % m == 0:
                    hs.add(k // m)
    return sorted(hs)


def gosper_rep(b, m):
    if b.is_zero():
        raise ValueError("zero polynomial")
    if m <= 0:
        raise ValueError("shift m must be positive")
    one = UPoly.const(1)
    if b.degree == 0:
        return GosperRep(one, one, one)
    A, B = b, b.shift(m)
    g = upoly_gcd(A, B)
    A, B = A.exact_div(g), B.exact_div(g)
    C = one
    for h in _shift_step_hs(A, B, m):
        s = upoly_gcd(A, B.shift(h * m))
        if s.degree <= 0:
            continue
        A = A.exact_div(s)
        B = B.exact_div(s.shift(-h * m))
        for k in range(1, h + 1):
            C = C * s.shift(-k * m)
    return GosperRep(A.monic(), B.monic(), C.monic())


def degree_bound(d0, d1, d2, d3, a_d1, a_d1m1, b_d1m1, m):
    """x-degree bound on the numerator polynomial p1 (may be negative)."""
    if a_d1 == 0:
        raise ValueError("leading coefficient a_d1 must be nonzero")
    ratio = Fraction(b_d1m1 - a_d1m1) / (m * Fraction(a_d1))
    return max(d2 + d3 - d1 + d0, floor(ratio) + d0 - 1)


def _rep_bound(a, rep, m, d0):
    A, Bm = rep.A, rep.B.shift(-m)
    d1 = A.degree
    d3 = a.deg_x
    return degree_bound(d0, d1, rep.C.degree, d3, A.lc,
                        A.coeff(d1 - 1), Bm.coeff(d1 - 1), m)


def solve_p1(a, rep, m, n, d0):
    """A polynomial p1 with ``a*C = A*p1(x+m, y-n) - B(x-m)*p1``, or None."""
    if a.is_zero():
        return BPoly()
    if a.deg_y >= d0:
        raise ValueError("deg_y(a) must be below d0")
    d4 = _rep_bound(a, rep, m, d0)
    X = max(d4, d0 - 1)
    A = BPoly.from_upoly(rep.A, "x")
    Bm = BPoly.from_upoly(rep.B.shift(-m), "x")
    lhs = a * BPoly.from_upoly(rep.C, "x")
    unknowns = [(i, j) for i in range(X + 1) for j in range(d0)]
    columns = []
    for i, j in unknowns:
        mono = BPoly({(i, j): 1})
        columns.append(A * mono.shift(m, -n) - Bm * mono)
    monos = set(lhs.terms)
    for c in columns:
        monos.update(c.terms)
    monos = sorted(monos)
    rows = [[c.terms.get(mo, 0) for c in columns] for mo in monos]
    rhs = [lhs.terms.get(mo, 0) for mo in monos]
    irows, irhs = integer_rows(rows, rhs)
    sol = solve(irows, irhs, len(unknowns))
    if sol is None:
        return None
    return BPoly({u: c for u, c in zip(unknowns, sol) if c})


def solve_kernel(prob):
    """Solve ``u = σx^m σy^{-n} p - p`` for p in Q(x)[y], deg_y(p) < d0."""
    if prob.a.is_zero():
        return KernelSolution(RatFunc.zero(), BPoly(), 0)
    rep = gosper_rep(prob.b, prob.m)
    d4 = _rep_bound(prob.a, rep, prob.m, prob.d0)
    p1 = solve_p1(prob.a, rep, prob.m, prob.n, prob.d0)
    if p1 is None:
        return None
    num = BPoly.from_upoly(rep.B.shift(-prob.m), "x") * p1
    den = BPoly.from_upoly(prob.b * rep.C, "x")
    p = RatFunc(num, den)
    if p.shift(prob.m, -prob.n) - p != prob.u:
        raise AssertionError("kernel solution fails the substitution check")
    return KernelSolution(p, p1, d4)
