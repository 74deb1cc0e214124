"""Reduced bivariate rational functions over Q."""

from fractions import Fraction
from math import lcm

from . import _zpoly as zp
from .poly import BPoly, UPoly, gcd_bpoly, _grkey


def _scalar_normalize(num, den):
    """Scale num/den to integer coefficients with joint content 1 and a
    positive graded-lex leading coefficient in the denominator."""
    vals = list(num.terms.values()) + list(den.terms.values())
    L = lcm(*(c.denominator for c in vals))
    g = zp.content([int(c * L) for c in vals])
    if den.terms[max(den.terms, key=_grkey)] < 0:
        g = -g
    s = Fraction(L, g)
    if s == 1:
        return num, den
    return num * s, den * s


class RatFunc:
    """``num/den`` with gcd(num, den) = 1, integral coefficients of joint
    content 1 and positive leading coefficient of ``den``; zero is 0/1.

    Instances are immutable.  Besides the bivariate use they also serve as
    the coefficient field Q(x) (y-free values) of ``UPoly`` in y.
    """

    __slots__ = ("num", "den", "_shifts")

    def __init__(self, num, den=None):
        num = _as_bpoly(num)
        den = BPoly.const(1) if den is None else _as_bpoly(den)
        n, d = rf_normalize_parts(num, den)
        self.num, self.den = n, d
        self._shifts = {}

    @classmethod
    def _raw(cls, num, den):
        f = cls.__new__(cls)
        f.num, f.den = num, den
        f._shifts = {}
        return f

    @classmethod
    def zero(cls):
        return cls._raw(BPoly(), BPoly.const(1))

    @classmethod
    def one(cls):
        return cls._raw(BPoly.const(1), BPoly.const(1))

    @classmethod
    def x(cls):
        return cls(BPoly.x())

    @classmethod
    def y(cls):
        return cls(BPoly.y())

    # queries -------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def free_of(self, var):
        return self.num.free_of(var) and self.den.free_of(var)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.num.is_zero()
        if isinstance(other, (int, Fraction, BPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        from .printing import format_ratfunc
        return format_ratfunc(self)

    # arithmetic ----------------------------------------------------------

    @staticmethod
    def _wrap(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, BPoly)):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = gcd_bpoly(self.den, other.den)
        if g.is_constant():
            num = self.num * other.den + other.num * self.den
            return RatFunc(num, self.den * other.den)
        d1 = self.den.exact_div(g)
        d2 = other.den.exact_div(g)
        return RatFunc(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = gcd_bpoly(n1, d2)
        if not g1.is_constant():
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        g2 = gcd_bpoly(n2, d1)
        if not g2.is_constant():
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num, den = _scalar_normalize(n1 * n2, d1 * d2)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        num, den = _scalar_normalize(self.den, self.num)
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        num, den = _scalar_normalize(self.num ** e, self.den ** e)
        return RatFunc._raw(num, den)

    def shift(self, m, n):
        """f(x + m, y + n); shifts preserve the canonical form."""
        if m == 0 and n == 0:
            return self
        key = (m, n)
        r = self._shifts.get(key)
        if r is None:
            r = RatFunc._raw(self.num.shift(m, n), self.den.shift(m, n))
            self._shifts[key] = r
        return r

    def swap(self):
        return RatFunc(self.num.swap(), self.den.swap())


def _as_bpoly(v):
    if isinstance(v, BPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return BPoly.const(v)
    if isinstance(v, UPoly):
        return BPoly.from_upoly(v, "x")
    raise TypeError(f"cannot use {type(v).__name__} as a polynomial")


def rf_normalize_parts(num, den):
    if den.is_zero():
        raise ZeroDivisionError("division by zero")
    if num.is_zero():
        return BPoly(), BPoly.const(1)
    if not den.is_constant():
        g = gcd_bpoly(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
    return _scalar_normalize(num, den)


def rf_normalize(num, den):
    """Reduced canonical RatFunc for num/den."""
    return RatFunc(num, den)


def delta_x(f):
    return f.shift(1, 0) - f


def delta_y(f):
    return f.shift(0, 1) - f


# -- Q(x)[y] bridge ---------------------------------------------------------------

def to_qxy(f):
    """A RatFunc with y-free denominator as a UPoly in y over Q(x)."""
    if not f.den.free_of("y"):
        raise ValueError("denominator depends on y")
    den = RatFunc._raw(f.den, BPoly.const(1))
    rows = f.num.y_view()
    return UPoly([RatFunc(BPoly.from_upoly(r, "x")) / den for r in rows])


def from_qxy(p):
    """Inverse of ``to_qxy``: a UPoly in y over Q(x) as one RatFunc."""
    acc = RatFunc.zero()
    y = RatFunc.y()
    ypow = RatFunc.one()
    for c in p.coeffs:
        if c != 0:
            acc = acc + RatFunc._wrap(c) * ypow
        ypow = ypow * y
    return acc
