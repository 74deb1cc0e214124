"""Dispersion sets: all integer shifts relating two polynomials.

``Disp(f, g)`` is the set of ``(m, n)`` with ``f(x, y) = g(x + m, y + n)``.
It is computed by a case analysis on the two leading x-coefficients; the
results are finite point sets, lines ``base + t*dir`` or the whole plane.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm, floor, ceil

from .poly import BPoly, UPoly, upoly_gcd

# ShiftSet1D kinds
EMPTY = "empty"
FINITE = "finite"
ALL = "all"


@dataclass(frozen=True)
class ShiftSet1D:
    kind: str
    values: tuple = ()

    @classmethod
    def empty(cls):
        return cls(EMPTY)

    @classmethod
    def all(cls):
        return cls(ALL)

    @classmethod
    def of(cls, values):
        vals = tuple(sorted(set(values)))
        return cls(FINITE, vals) if vals else cls(EMPTY)

    def __contains__(self, n):
        return self.kind == ALL or n in self.values

    def __str__(self):
        if self.kind == ALL:
            return "Z"
        return "{" + ",".join(str(v) for v in self.values) + "}"


def _norm_dir(u, w):
    if u < 0 or (u == 0 and w < 0):
        return -u, -w
    return u, w


def _canonical_base(base, dir_):
    """Point of the line minimizing (|m|+|n|, |n|, m, n)."""
    (v, w), (u, uu) = base, dir_
    key = lambda t: (abs(v + u * t) + abs(w + uu * t), abs(w + uu * t),
                     v + u * t, w + uu * t)
    breaks = [Fraction(-v, u) if u else None, Fraction(-w, uu) if uu else None]
    breaks = [b for b in breaks if b is not None]
    lo = floor(min(breaks)) - 1
    hi = ceil(max(breaks)) + 1
    t = min(range(lo, hi + 1), key=key)
    return v + u * t, w + uu * t


@dataclass(frozen=True)
class Line:
    """The integer points ``base + t*dir``; dir normalized, base canonical."""

    base: tuple
    dir: tuple

    @classmethod
    def make(cls, base, dir_):
        dir_ = _norm_dir(*dir_)
        if dir_ == (0, 0):
            raise ValueError("line direction must be nonzero")
        return cls(_canonical_base(base, dir_), dir_)

    def __contains__(self, pt):
        dm, dn = pt[0] - self.base[0], pt[1] - self.base[1]
        u, uu = self.dir
        if dm * uu != dn * u:
            return False
        if u:
            return dm % u == 0
        return dn % uu == 0

    def point(self, t):
        return (self.base[0] + t * self.dir[0], self.base[1] + t * self.dir[1])

    def __str__(self):
        return f"({self.base[0]},{self.base[1]}) + t*({self.dir[0]},{self.dir[1]})"


@dataclass(frozen=True)
class DispSet:
    all_plane: bool = False
    points: tuple = ()
    lines: tuple = field(default_factory=tuple)

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def plane(cls):
        return cls(all_plane=True)

    @classmethod
    def build(cls, points=(), lines=()):
        ls = []
        for ln in lines:
            if ln not in ls:
                ls.append(ln)
        pts = sorted({p for p in points if not any(p in ln for ln in ls)})
        ls.sort(key=lambda ln: (ln.dir, ln.base))
        return cls(False, tuple(pts), tuple(ls))

    def is_empty(self):
        return not (self.all_plane or self.points or self.lines)

    def __contains__(self, pt):
        if self.all_plane:
            return True
        return tuple(pt) in self.points or any(pt in ln for ln in self.lines)

    def sample(self):
        """Some member of the set (None when empty)."""
        if self.all_plane:
            return (0, 0)
        if self.points:
            return self.points[0]
        if self.lines:
            return self.lines[0].base
        return None

    def to_json(self):
        return {"all_plane": self.all_plane,
                "points": [list(p) for p in self.points],
                "lines": [{"base": list(l.base), "dir": list(l.dir)}
                          for l in self.lines]}

    def __str__(self):
        if self.all_plane:
            return "Z^2"
        items = [f"({m},{n})" for m, n in self.points]
        items += [str(l) for l in self.lines]
        return "{" + ", ".join(items) + "}"


@dataclass(frozen=True)
class Stabilizer:
    """``trivial`` or ``generator = (t, l)`` with t > 0 minimal and
    sigma_x^t d = sigma_y^l d."""

    trivial: bool
    generator: tuple = None

    def __str__(self):
        if self.trivial:
            return "trivial"
        return f"t={self.generator[0]}, l={self.generator[1]}"


# -- univariate ------------------------------------------------------------------

def _as_b(p, var):
    if isinstance(p, BPoly):
        return p
    if isinstance(p, UPoly):
        return BPoly.from_upoly(p, var)
    return BPoly.const(p)


def _shift_var(p, var, k):
    return p.shift(k, 0) if var == "x" else p.shift(0, k)


def _integral(q):
    """The integer value of a constant UPoly, else None."""
    if q.degree > 0:
        return None
    c = q.coeff(0)
    return c.numerator if c.denominator == 1 else None


def disp_uni(f, g, var="x"):
    """``{n : f = g(var + n)}``; the other variable is a coefficient."""
    f, g = _as_b(f, var), _as_b(g, var)
    d = f.degree(var)
    if d != g.degree(var):
        return ShiftSet1D.empty()
    if d <= 0:
        return ShiftSet1D.all() if f == g else ShiftSet1D.empty()
    fv, gv = f.view(var), g.view(var)
    if fv[d] != gv[d]:
        return ShiftSet1D.empty()
    q, r = divmod(fv[d - 1] - gv[d - 1], gv[d] * d)
    n = _integral(q) if r.is_zero() else None
    if n is None:
        return ShiftSet1D.empty()
    return ShiftSet1D.of([n]) if f == _shift_var(g, var, n) else ShiftSet1D.empty()


# -- integer solutions -------------------------------------------------------------

def solve_diophantine(a, b, c):
    """Integer solutions of ``a*m + b*n = c``: None or (base, dir)."""
    if a == 0 and b == 0:
        raise ValueError("degenerate equation")
    g = gcd(a, b)
    if c % g:
        return None
    s, t = _ext_euclid(a, b)
    base = (s * (c // g), t * (c // g))
    return base, _norm_dir(b // g, -a // g)


def _ext_euclid(a, b):
    """Bezout coefficients (s, t) with s*a + t*b = gcd(a, b) >= 0."""
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        s0, t0 = -s0, -t0
    return s0, t0


def _divisors(n):
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


_DIVISOR_SCAN_LIMIT = 10 ** 6


def integer_roots(p):
    """Integer roots of a UPoly; ``ALL`` for the zero polynomial."""
    if p.is_zero():
        return ShiftSet1D.all()
    _, ints = p.to_int_list()
    roots = []
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.append(0)
        ints = ints[low:]
    if len(ints) == 1:
        return ShiftSet1D.of(roots)
    a0 = ints[0]
    if abs(a0) <= _DIVISOR_SCAN_LIMIT:
        cands = _divisors(a0)
        cands = [s * c for c in cands for s in (1, -1)]
        for c in cands:
            v = 0
            for coef in reversed(ints):
                v = v * c + coef
            if v == 0:
                roots.append(c)
    else:
        from .factor import factor_upoly
        for fac, _ in factor_upoly(UPoly(ints)).factors:
            if fac.degree == 1 and abs(fac.lc) == 1:
                roots.append(int(-fac.coeff(0) / fac.lc))
    return ShiftSet1D.of(roots)


# -- bivariate -------------------------------------------------------------------

def _shifted_line(g, base, dir_):
    """``g(x + v + u t, y + w + u' t)`` as ``{(i, j): UPoly in t}``."""
    gs = g.shift(*base)
    u, uu = dir_
    out = {}
    binom_x = _binomial_rows(gs.deg_x, u)
    binom_y = _binomial_rows(gs.deg_y, uu)
    for (i, j), c in gs.terms.items():
        for a, pa in enumerate(binom_x[i]):
            for b, pb in enumerate(binom_y[j]):
                term = pa * pb * c
                key = (a, b)
                out[key] = out[key] + term if key in out else term
    return out


def _binomial_rows(n, u):
    """rows[i][a] = coefficient (a UPoly in t) of z^a in (z + u t)^i."""
    rows = [[UPoly((1,))]]
    ut = UPoly((0, u))
    for _ in range(max(n, 0)):
        prev = rows[-1]
        nxt = [UPoly() for _ in range(len(prev) + 1)]
        for a, c in enumerate(prev):
            nxt[a + 1] = nxt[a + 1] + c
            nxt[a] = nxt[a] + c * ut
        rows.append(nxt)
    return rows


def _case_line(f, g, base, dir_):
    """Members of Disp(f, g) on the line ``base + t*dir``."""
    expanded = _shifted_line(g, base, dir_)
    common = UPoly()
    for key in set(expanded) | set(f.terms):
        eq = UPoly.const(f.terms.get(key, 0)) - expanded.get(key, UPoly())
        if not eq.is_zero():
            common = eq if common.is_zero() else upoly_gcd(common, eq)
            if common.degree == 0:
                return DispSet.empty()
    roots = integer_roots(common)
    if roots.kind == ALL:
        return DispSet.build(lines=[Line.make(base, dir_)])
    pts = [(base[0] + t * dir_[0], base[1] + t * dir_[1]) for t in roots.values]
    return DispSet.build(points=pts)


def _clear(*vals):
    L = lcm(*(Fraction(v).denominator for v in vals))
    return [int(Fraction(v) * L) for v in vals]


def disp_bi(f, g):
    """The exact dispersion set ``{(m, n) : f(x, y) = g(x + m, y + n)}``."""
    d = f.deg_x
    if d != g.deg_x:
        return DispSet.empty()
    if d <= 0:
        dy = disp_uni(f, g, "y")
        if dy.kind == ALL:
            return DispSet.plane()
        return DispSet.build(lines=[Line.make((0, n), (1, 0)) for n in dy.values])
    fx, gx = f.x_view(), g.x_view()
    ad, bd = fx[d], gx[d]
    if ad.degree > 0:
        pts = []
        N = disp_uni(ad, bd, "y")
        for n0 in N.values:
            S = disp_uni(f, g.shift(0, n0), "x")
            pts.extend((m, n0) for m in S.values)
        return DispSet.build(points=pts)
    if ad != bd:
        return DispSet.empty()
    c = ad.coeff(0)
    a1, b1 = fx[d - 1], gx[d - 1]
    deg1 = a1.degree
    if deg1 > 1:
        h = deg1
        if b1.degree != h or b1.lc != a1.lc:
            return DispSet.empty()
        n0 = (a1.coeff(h - 1) - b1.coeff(h - 1)) / (h * b1.lc)
        if n0.denominator != 1:
            return DispSet.empty()
        n0 = n0.numerator
        S = disp_uni(f, g.shift(0, n0), "x")
        return DispSet.build(points=[(m, n0) for m in S.values])
    if deg1 == 1:
        if b1.degree != 1 or b1.lc != a1.lc:
            return DispSet.empty()
        A, B, C = _clear(d * c, a1.lc, a1.coeff(0) - b1.coeff(0))
        sol = solve_diophantine(A, B, C)
        if sol is None:
            return DispSet.empty()
        return _case_line(f, g, *sol)
    if b1.degree > 0:
        return DispSet.empty()
    m0 = (a1.coeff(0) - b1.coeff(0)) / (d * c)
    if m0.denominator != 1:
        return DispSet.empty()
    m0 = m0.numerator
    S = disp_uni(f, g.shift(m0, 0), "y")
    if S.kind == ALL:
        return DispSet.build(lines=[Line.make((m0, 0), (0, 1))])
    return DispSet.build(points=[(m0, n) for n in S.values])


def stabilizer(d):
    """Generator (t, l) of the shift stabilizer of an irreducible d."""
    if d.is_constant():
        raise ValueError("stabilizer of a constant polynomial")
    if d.deg_y < 1:
        raise ValueError("stabilizer needs a polynomial involving y")
    D = disp_bi(d, d)
    if D.all_plane:
        raise AssertionError("nonconstant polynomial invariant under all shifts")
    if not D.lines:
        if D.points != ((0, 0),):
            raise AssertionError(f"inconsistent self-dispersion {D}")
        return Stabilizer(True)
    if len(D.lines) != 1 or D.points:
        raise AssertionError(f"inconsistent self-dispersion {D}")
    u, uu = D.lines[0].dir
    if u == 0:
        raise AssertionError("polynomial with positive y-degree invariant under a y-shift")
    return Stabilizer(False, (u, -uu))
