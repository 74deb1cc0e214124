"""Exact univariate and bivariate polynomials over Q.

``UPoly`` is dense and generic in its coefficient field (``Fraction`` by
default, y-free ``RatFunc`` values when used as Q(x)[y]).  ``BPoly`` is a
sparse map ``(i, j) -> Fraction`` for monomials x^i y^j and exposes both
recursive views: as a polynomial in x over Q[y] and in y over Q[x].

Monomials are ordered graded-lexicographically with y > x; that order
fixes leading terms, canonical signs and the ordering of factor lists.
"""

from fractions import Fraction
from math import inf, lcm

from . import _zpoly as zp

NEG_INF = -inf
"""Degree of the zero polynomial."""


def _coerce(v):
    return Fraction(v) if type(v) is int else v


def _taylor(coeffs, k):
    """Coefficients of p(t + k) for a dense list (lowest first)."""
    r = list(coeffs)
    n = len(r)
    if k == 0 or n < 2:
        return r
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            r[j] = r[j] + k * r[j + 1]
    return r


class UPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [_coerce(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def gen(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r})"

    def format(self, var="x"):
        from .printing import format_bpoly
        return format_bpoly(BPoly.from_upoly(self, var))

    def __str__(self):
        return self.format("x")

    # arithmetic ----------------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, UPoly):
            return other
        return UPoly((other,))

    def __add__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, c in enumerate(b):
            r[i] = r[i] + c
        return UPoly(r)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            if other == 0:
                return UPoly()
            return UPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        r = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                r[i + j] = r[i + j] + u * v
        return UPoly(r)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = UPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        """Division with remainder; coefficients must form a field."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(r) - 1 < db:
            return UPoly(), UPoly(r)
        inv = 1 / other.coeffs[-1]
        q = [0] * (len(r) - db)
        for k in range(len(q) - 1, -1, -1):
            c = r[k + db]
            if c == 0:
                continue
            c = c * inv
            q[k] = c
            for i, v in enumerate(other.coeffs):
                r[k + i] = r[k + i] - c * v
        return UPoly(q), UPoly(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def __call__(self, v):
        r = Fraction(0)
        for c in reversed(self.coeffs):
            r = r * v + c
        return r

    def shift(self, k):
        """p(t + k)."""
        return UPoly(_taylor(self.coeffs, k))

    def derivative(self):
        return UPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def monic(self):
        if not self.coeffs:
            return self
        return self * (1 / self.coeffs[-1])

    # integer views (Q coefficients only) ----------------------------------

    def to_int_list(self):
        """Return ``(scale, ints)`` with ``self = scale * ints``, ints primitive."""
        if not self.coeffs:
            return Fraction(0), []
        L = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * L) for c in self.coeffs]
        c, prim = zp.primitive(ints)
        return Fraction(c, L), prim

    @classmethod
    def from_ints(cls, ints):
        return cls([Fraction(v) for v in ints])

    def primitive(self):
        """``(unit, p)`` with p integral, content 1, positive leading coeff."""
        u, ints = self.to_int_list()
        return u, UPoly.from_ints(ints)

    def sort_key(self):
        return (len(self.coeffs), tuple(reversed(self.coeffs)))


def upoly_gcd(a, b):
    """Monic gcd over a field (Euclid)."""
    while b:
        a, b = b, a % b
    return a.monic()


def upoly_gcdex(a, b):
    """``(s, t, g)`` with ``s*a + t*b = g`` and g the monic gcd."""
    r0, r1 = a, b
    s0, s1 = UPoly.const(1), UPoly()
    t0, t1 = UPoly(), UPoly.const(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return s0, t0, r0
    inv = 1 / r0.lc
    return s0 * inv, t0 * inv, r0 * inv


def _grkey(m):
    return (m[0] + m[1], m[1], m[0])


class BPoly:
    """Sparse bivariate polynomial over Q: ``terms[(i, j)]`` multiplies x^i y^j."""

    def __init__(self, terms=None):
        d = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    d[(int(m[0]), int(m[1]))] = _coerce(c)
        self.terms = d
        self._cache = {}

    @classmethod
    def _raw(cls, d):
        p = cls.__new__(cls)
        p.terms = d
        p._cache = {}
        return p

    @classmethod
    def x(cls):
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls):
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def from_upoly(cls, u, var="x"):
        if var == "x":
            return cls({(k, 0): c for k, c in enumerate(u.coeffs)})
        if var == "y":
            return cls({(0, k): c for k, c in enumerate(u.coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    @classmethod
    def from_x_view(cls, rows):
        """Inverse of ``x_view``: ``rows[i]`` is the Q[y] coefficient of x^i."""
        return cls({(i, j): c for i, u in enumerate(rows)
                    for j, c in enumerate(u.coeffs)})

    @classmethod
    def from_y_view(cls, rows):
        return cls({(i, j): c for j, u in enumerate(rows)
                    for i, c in enumerate(u.coeffs)})

    # basic queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self):
        return self.terms.get((0, 0), Fraction(0))

    @property
    def deg_x(self):
        if not self.terms:
            return NEG_INF
        return max(i for i, _ in self.terms)

    @property
    def deg_y(self):
        if not self.terms:
            return NEG_INF
        return max(j for _, j in self.terms)

    @property
    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(i + j for i, j in self.terms)

    def degree(self, var):
        return self.deg_x if var == "x" else self.deg_y

    def free_of(self, var):
        k = 0 if var == "x" else 1
        return all(m[k] == 0 for m in self.terms)

    @property
    def leading_monomial(self):
        return max(self.terms, key=_grkey)

    @property
    def lc(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[self.leading_monomial]

    def __eq__(self, other):
        if isinstance(other, BPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == BPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BPoly({self})"

    def __str__(self):
        from .printing import format_bpoly
        return format_bpoly(self)

    def sort_key(self):
        """Graded-lex (y > x) comparison key; smaller sorts first."""
        ms = sorted(self.terms, key=_grkey, reverse=True)
        return tuple((_grkey(m), self.terms[m]) for m in ms)

    # views ---------------------------------------------------------------

    def x_view(self):
        """Coefficients in x: tuple of UPoly in y, index = power of x."""
        v = self._cache.get("xv")
        if v is None:
            if not self.terms:
                v = ()
            else:
                dy = self.deg_y
                rows = [[0] * (dy + 1) for _ in range(self.deg_x + 1)]
                for (i, j), c in self.terms.items():
                    rows[i][j] = c
                v = tuple(UPoly(r) for r in rows)
            self._cache["xv"] = v
        return v

    def y_view(self):
        """Coefficients in y: tuple of UPoly in x, index = power of y."""
        v = self._cache.get("yv")
        if v is None:
            if not self.terms:
                v = ()
            else:
                dx = self.deg_x
                rows = [[0] * (dx + 1) for _ in range(self.deg_y + 1)]
                for (i, j), c in self.terms.items():
                    rows[j][i] = c
                v = tuple(UPoly(r) for r in rows)
            self._cache["yv"] = v
        return v

    def view(self, var):
        return self.x_view() if var == "x" else self.y_view()

    def coeff_x(self, k):
        v = self.x_view()
        return v[k] if 0 <= k < len(v) else UPoly()

    def coeff_y(self, k):
        v = self.y_view()
        return v[k] if 0 <= k < len(v) else UPoly()

    def to_upoly(self, var):
        """The polynomial as a UPoly in ``var``; requires the other var absent."""
        other = "y" if var == "x" else "x"
        if not self.free_of(other):
            raise ValueError(f"polynomial depends on {other}")
        k = 0 if var == "x" else 1
        if not self.terms:
            return UPoly()
        n = max(m[k] for m in self.terms)
        c = [0] * (n + 1)
        for m, v in self.terms.items():
            c[m[k]] = v
        return UPoly(c)

    # arithmetic ----------------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, BPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return BPoly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return BPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m, 0) - c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return BPoly._raw(d)

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return BPoly()
            return BPoly._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, BPoly):
            return NotImplemented
        d = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                d[m] = d.get(m, 0) + c1 * c2
        return BPoly._raw({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            return BPoly._raw({m: v / c for m, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = BPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div(self, other):
        """Quotient self/other in Q[x,y]; ValueError when not exact."""
        q = self.div_or_none(other)
        if q is None:
            raise ValueError("inexact polynomial division")
        return q

    def div_or_none(self, other):
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.terms:
            return BPoly()
        b = other.terms
        lm_b = max(b, key=_grkey)
        inv = 1 / b[lm_b]
        if len(b) == 1:
            out = {}
            for (i, j), c in self.terms.items():
                if i < lm_b[0] or j < lm_b[1]:
                    return None
                out[(i - lm_b[0], j - lm_b[1])] = c * inv
            return BPoly._raw(out)
        r = dict(self.terms)
        q = {}
        while r:
            lm = max(r, key=_grkey)
            i, j = lm[0] - lm_b[0], lm[1] - lm_b[1]
            if i < 0 or j < 0:
                return None
            c = r[lm] * inv
            q[(i, j)] = c
            for (bi, bj), bc in b.items():
                k = (bi + i, bj + j)
                v = r.get(k, 0) - c * bc
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return BPoly._raw(q)

    def shift(self, m, n):
        """p(x + m, y + n) by exact binomial expansion."""
        if (m == 0 and n == 0) or not self.terms:
            return self
        cached = self._cache.get(("shift", m, n))
        if cached is not None:
            return cached
        p = self
        if m:
            rows = {}
            for (i, j), c in p.terms.items():
                rows.setdefault(j, {})[i] = c
            d = {}
            for j, row in rows.items():
                dense = [0] * (max(row) + 1)
                for i, c in row.items():
                    dense[i] = c
                for i, c in enumerate(_taylor(dense, m)):
                    if c:
                        d[(i, j)] = c
            p = BPoly._raw(d)
        if n:
            cols = {}
            for (i, j), c in p.terms.items():
                cols.setdefault(i, {})[j] = c
            d = {}
            for i, col in cols.items():
                dense = [0] * (max(col) + 1)
                for j, c in col.items():
                    dense[j] = c
                for j, c in enumerate(_taylor(dense, n)):
                    if c:
                        d[(i, j)] = c
            p = BPoly._raw(d)
        self._cache[("shift", m, n)] = p
        return p

    def swap(self):
        """Exchange the roles of x and y."""
        return BPoly._raw({(j, i): c for (i, j), c in self.terms.items()})

    def diff(self, var):
        if var == "x":
            return BPoly._raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})
        return BPoly._raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def __call__(self, x, y):
        return sum((c * Fraction(x) ** i * Fraction(y) ** j
                    for (i, j), c in self.terms.items()), Fraction(0))

    # integrality ---------------------------------------------------------

    def int_terms(self):
        """``(scale, {m: int})`` with self = scale * ints, ints primitive and
        the graded-lex leading coefficient positive."""
        if not self.terms:
            return Fraction(0), {}
        L = lcm(*(c.denominator for c in self.terms.values()))
        ints = {m: int(c * L) for m, c in self.terms.items()}
        g = zp.content(list(ints.values()))
        if ints[max(ints, key=_grkey)] < 0:
            g = -g
        return Fraction(g, L), {m: v // g for m, v in ints.items()}

    def primitive(self):
        """``(unit, p)`` with self = unit * p and p canonical (integral,
        content 1, positive graded-lex leading coefficient)."""
        u, ints = self.int_terms()
        return u, BPoly._raw({m: Fraction(v) for m, v in ints.items()})

    def canonical(self):
        return self.primitive()[1]


def shift(p, m, n):
    """sigma_x^m sigma_y^n applied to a polynomial or rational function."""
    return p.shift(m, n)


# -- gcd ------------------------------------------------------------------------

def _y_rows(ints):
    """Integer term map -> list over y-degree of dense int lists in x."""
    dy = max(j for _, j in ints)
    rows = [dict() for _ in range(dy + 1)]
    for (i, j), c in ints.items():
        rows[j][i] = c
    out = []
    for r in rows:
        if not r:
            out.append([])
            continue
        dense = [0] * (max(r) + 1)
        for i, c in r.items():
            dense[i] = c
        out.append(dense)
    return out


def _rows_content(rows):
    g = []
    for r in rows:
        if r:
            g = zp.gcd_z(g, r) if g else zp.primitive(r)[1]
            if len(g) == 1:
                return [1]
    return g


def _rows_divexact(rows, c):
    if c == [1]:
        return rows
    return [zp.divexact(r, c) if r else [] for r in rows]


def _rows_trim(rows):
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _rows_prem(a, b):
    """Sparse pseudo-remainder in Z[x][y]."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [zp.mul(lb, c) for c in r]
        for i, c in enumerate(b):
            r[i + k] = zp.sub(r[i + k], zp.mul(lr, c))
        _rows_trim(r)
    return r


def _rows_to_bpoly(rows):
    return BPoly._raw({(i, j): Fraction(c) for j, r in enumerate(rows)
                       for i, c in enumerate(r) if c})


def gcd_bpoly(a, b):
    """Greatest common divisor in Q[x, y], integral with content 1 and
    positive graded-lex leading coefficient."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of zeros undefined")
    if a.is_zero():
        return b.canonical()
    if b.is_zero():
        return a.canonical()
    if a.is_constant() or b.is_constant():
        return BPoly.const(1)
    _, ia = a.int_terms()
    _, ib = b.int_terms()
    ra, rb = _y_rows(ia), _y_rows(ib)
    ca, cb = _rows_content(ra), _rows_content(rb)
    cont = zp.gcd_z(ca, cb)
    A = _rows_divexact(ra, ca)
    B = _rows_divexact(rb, cb)
    if len(A) == 1 or len(B) == 1:
        return _rows_to_bpoly([cont]).canonical()
    g = zp.heu_gcd_rows(A, B)
    if g is None:
        g = _prs_gcd_rows(A, B)
    return _rows_to_bpoly([zp.mul(cont, c) for c in g]).canonical()


def _prs_gcd_rows(A, B):
    """Primitive PRS gcd of two y-primitive row lists (up to sign)."""
    if len(A) < len(B):
        A, B = B, A
    while True:
        if len(B) == 1:
            return [[1]]
        r = _rows_trim(_rows_prem(A, B))
        if not r:
            return B
        A, B = B, _rows_divexact(r, _rows_content(r))
