"""Additive reduction of a bivariate rational function.

Every f is rewritten as ``Δx(g) + Δy(h) + r`` where r is a sum of proper
fractions ``a / d^j`` (in y over Q(x)) whose irreducible denominators lie in
pairwise distinct shift classes.  Numerators are kept as ``RatFunc`` values
whose denominators are free of y, i.e. as elements of Q(x)[y].
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .dispersion import disp_bi
from .factor import Factorization, factor_bpoly
from .poly import BPoly, UPoly, upoly_gcdex
from .ratfunc import RatFunc, delta_x, delta_y, from_qxy, to_qxy


@dataclass(frozen=True)
class PFD:
    """``poly_part + sum(a / d**j for d, j, a in terms)``."""

    poly_part: RatFunc
    terms: tuple

    def total(self):
        acc = self.poly_part
        for d, j, a in self.terms:
            acc = acc + a / RatFunc(d) ** j
        return acc


@dataclass(frozen=True)
class Group:
    """Fractions ``a / d**j`` sharing the class representative ``d``."""

    d: BPoly
    fractions: tuple   # ((j, a), ...) with j ascending

    def total(self):
        D = RatFunc(self.d)
        acc = RatFunc.zero()
        for j, a in self.fractions:
            acc = acc + a / D ** j
        return acc


@dataclass(frozen=True)
class ResidualForm:
    g_acc: RatFunc
    h_acc: RatFunc
    groups: tuple

    def remainder(self):
        acc = RatFunc.zero()
        for grp in self.groups:
            acc = acc + grp.total()
        return acc


# -- partial fractions in y ---------------------------------------------------------

def _qxy_of_poly(p):
    """A BPoly as a UPoly in y with Q(x) (RatFunc) coefficients."""
    return UPoly([RatFunc(BPoly.from_upoly(r, "x")) for r in p.y_view()])


def pfd_y(f, den_factors=None):
    """Partial fractions of f in y over Q(x) with respect to its denominator."""
    fac = factor_bpoly(f.den) if den_factors is None else den_factors
    if fac.expand() != f.den:
        raise ValueError("bad factorization")
    b = BPoly.const(fac.unit)
    powers = []
    for d, k in fac.factors:
        if d.free_of("y"):
            b = b * d ** k
        else:
            powers.append((d, k))
    N = to_qxy(RatFunc(f.num, b))
    if not powers:
        return PFD(from_qxy(N), ())
    Ds = [_qxy_of_poly(d ** k) for d, k in powers]
    total = UPoly.const(RatFunc.one())
    for D in Ds:
        total = total * D
    P, R = divmod(N, total)
    terms = []
    for i, ((d, k), D) in enumerate(zip(powers, Ds)):
        Q = UPoly.const(RatFunc.one())
        for i2, D2 in enumerate(Ds):
            if i2 != i:
                Q = Q * D2
        s, _, g = upoly_gcdex(Q % D, D)
        if g.degree != 0:
            raise ValueError("bad factorization")
        Ri = (R * s) % D
        # d-adic expansion: Ri = sum c_e d^e, so Ri/d^k = sum c_e / d^(k-e)
        dq = _qxy_of_poly(d)
        e = 0
        while not Ri.is_zero():
            Ri, c = divmod(Ri, dq)
            if not c.is_zero():
                terms.append((d, k - e, from_qxy(c)))
            e += 1
    terms.sort(key=lambda t: (t[0].sort_key(), t[1]))
    return PFD(from_qxy(P), tuple(terms))


# -- polynomial part ------------------------------------------------------------------

def _binomial_poly(k):
    """C(y, k) as a UPoly in y."""
    p = UPoly.const(Fraction(1, factorial(k)))
    for i in range(k):
        p = p * UPoly((-i, 1))
    return p


def poly_antidifference_y(P):
    """H with ``H(x, y+1) - H(x, y) = P`` for P polynomial in y over Q(x)."""
    if P.is_zero():
        return RatFunc.zero()
    if not P.den.free_of("y"):
        raise ValueError("not a polynomial in y")
    rows = P.num.y_view()
    deg = len(rows) - 1
    vals = []
    for k in range(deg + 1):
        v = UPoly()
        for j, r in enumerate(rows):
            v = v + r * (k ** j)
        vals.append(v)
    # Newton forward differences give P = sum coeffs[k] * C(y, k)
    coeffs = []
    while vals:
        coeffs.append(vals[0])
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    H = BPoly()
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        H = H + BPoly.from_upoly(c, "x") * BPoly.from_upoly(_binomial_poly(k + 1), "y")
    return RatFunc(H, P.den)


# -- orbit merging ---------------------------------------------------------------------

def _shift_sum(F, ks, dm, dn):
    acc = RatFunc.zero()
    for k in ks:
        acc = acc + F.shift(k * dm, k * dn)
    return acc


def orbit_shift(a, d_k, j, m, n, source=None):
    """Move ``a / d_i^j`` with ``d_i = d_k(x+m, y+n)`` onto ``d_k``.

    Returns ``(g, h, a2)`` with ``a/d_i^j = Δx g + Δy h + a2/d_k^j``.
    """
    d_i = d_k.shift(m, n)
    if source is not None and source != d_i:
        raise ValueError("source denominator is not the claimed shift of d_k")
    a2 = a.shift(-m, -n)
    if m == 0 and n == 0:
        return RatFunc.zero(), RatFunc.zero(), a2
    F = a2 / RatFunc(d_k) ** j
    G = F.shift(0, n)
    # a/d_i^j = σx^m G and G = σy^n F
    if m >= 0:
        g = _shift_sum(G, range(m), 1, 0)
    else:
        g = -_shift_sum(G, range(m, 0), 1, 0)
    if n >= 0:
        h = _shift_sum(F, range(n), 0, 1)
    else:
        h = -_shift_sum(F, range(n, 0), 0, 1)
    lhs = a / RatFunc(d_i) ** j
    if lhs - delta_x(g) - delta_y(h) - F != 0:
        raise AssertionError("orbit shift identity failed")
    return g, h, a2


def reduce(f):
    """Residual form of f: certificates plus fractions in distinct orbits."""
    fac = factor_bpoly(f.den)
    pfd = pfd_y(f, fac)
    h_acc = poly_antidifference_y(pfd.poly_part)
    g_acc = RatFunc.zero()

    # shift classes among the y-dependent factors
    ds = sorted({d for d, _, _ in pfd.terms}, key=BPoly.sort_key)
    reps = []          # class representatives, grlex-least first member
    where = {}         # d -> (rep, (m, n)) with d = rep(x+m, y+n)
    for d in ds:
        for rep in reps:
            D = disp_bi(d, rep)
            if not D.is_empty():
                where[d] = (rep, D.sample())
                break
        else:
            reps.append(d)
            where[d] = (d, (0, 0))

    sums = {}
    for d, j, a in pfd.terms:
        rep, (m, n) = where[d]
        if (m, n) != (0, 0):
            g, h, a = orbit_shift(a, rep, j, m, n, source=d)
            g_acc = g_acc + g
            h_acc = h_acc + h
        key = (rep, j)
        sums[key] = sums[key] + a if key in sums else a

    groups = []
    for rep in reps:
        fr = tuple((j, sums[(rep, j)])
                   for j in sorted(j for r, j in sums if r == rep)
                   if not sums[(rep, j)].is_zero())
        if fr:
            groups.append(Group(rep, fr))
    out = ResidualForm(g_acc, h_acc, tuple(groups))
    if f - delta_x(g_acc) - delta_y(h_acc) - out.remainder() != 0:
        raise AssertionError("reduction identity failed")
    return out
