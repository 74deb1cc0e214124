from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from bisum import BPoly, RatFunc, UPoly, delta_x, delta_y, gcd_bpoly, parse_ratfunc, rf_normalize, shift
from bisum.gen import random_bpoly, seeded
from fixtures import SHIFT_F, SHIFT_G, X, Y, poly_of, to_sympy, x, y

small_int = st.integers(-5, 5)


@st.composite
def bpolys(draw, max_deg=3):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)),
        st.integers(-6, 6), max_size=5))
    return BPoly(terms)


# -- shifts --------------------------------------------------------------------------

def test_shift_relates_the_dispersion_pair():
    # f(x, y) = g(x - 1, y + 1), equivalently g = f(x + 1, y - 1)
    assert shift(SHIFT_G, -1, 1) == SHIFT_F
    assert shift(SHIFT_F, 1, -1) == SHIFT_G
    assert shift(SHIFT_F, -1, 1) != SHIFT_G


def test_shift_identity_and_invariant_form():
    p = poly_of("x^3 - 7*x*y + 2")
    assert shift(p, 0, 0) == p
    assert shift(x + y, 3, -3) == x + y


def test_shift_matches_sympy_substitution():
    p = poly_of("3*x^2*y - x*y^3 + 5*y - 1")
    got = to_sympy(shift(p, 2, -3))
    want = to_sympy(p).subs({X: X + 2, Y: Y - 3}, simultaneous=True)
    assert sp.expand(got - want) == 0


@given(bpolys(), small_int, small_int, small_int, small_int)
def test_shift_composes(p, m1, n1, m2, n2):
    assert shift(shift(p, m1, n1), m2, n2) == shift(p, m1 + m2, n1 + n2)


@given(bpolys(), small_int, small_int)
def test_shift_preserves_degrees(p, m, n):
    q = shift(p, m, n)
    assert (q.deg_x, q.deg_y, q.total_degree) == (p.deg_x, p.deg_y, p.total_degree)


# -- polynomial arithmetic --------------------------------------------------------

@given(bpolys(), bpolys(), bpolys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == BPoly()


@given(bpolys(), bpolys())
def test_product_matches_sympy(a, b):
    assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


def test_exact_division():
    a = poly_of("x^2 - y^2")
    assert a.exact_div(x + y) == x - y
    with pytest.raises(ValueError):
        a.exact_div(x + 2 * y)


def test_upoly_basics():
    p = UPoly([1, 0, 1])
    q, r = divmod(p * UPoly([2, 1]) + 3, UPoly([2, 1]))
    assert q == p and r == UPoly.const(3)
    assert p.shift(1) == UPoly([2, 2, 1])
    assert p(Fraction(1, 2)) == Fraction(5, 4)
    assert UPoly([0, 0]).is_zero()


# -- gcd ---------------------------------------------------------------------------

def test_gcd_shared_linear_factor():
    assert gcd_bpoly(poly_of("x^2 - y^2"), poly_of("x^2 + 2*x*y + y^2")) == x + y


def test_gcd_coprime():
    assert gcd_bpoly(x + y, x - y) == BPoly.const(1)


def test_gcd_of_constructed_products():
    s = x**2 + y**2
    a, b = s * (x - 2), s * x**3
    g = gcd_bpoly(a, b)
    assert g == s
    assert a.div_or_none(g) is not None and b.div_or_none(g) is not None


def test_gcd_of_zeros_is_an_error():
    with pytest.raises(ValueError, match="gcd of zeros undefined"):
        gcd_bpoly(BPoly(), BPoly())


def test_gcd_normalization():
    g = gcd_bpoly(-2 * (x + y) * (x - 1), 4 * (x + y) * y)
    assert g == x + y


def test_gcd_against_sympy_on_random_products():
    rng = seeded(11)
    for _ in range(60):
        c = random_bpoly(rng)
        a, b = random_bpoly(rng) * c, random_bpoly(rng) * c
        g = gcd_bpoly(a, b)
        ratio = sp.cancel(to_sympy(g) / sp.gcd(to_sympy(a), to_sympy(b)))
        assert ratio.is_number and ratio != 0


# -- rational functions ---------------------------------------------------------------

def test_normalization_examples():
    assert rf_normalize(poly_of("x^2 - y^2"), x + y) == RatFunc(x - y)
    f = rf_normalize(poly_of("x^2 - y^2"), x + y)
    assert f.den == BPoly.const(1)
    z = rf_normalize(BPoly(), x + y)
    assert z.num.is_zero() and z.den == BPoly.const(1)
    h = rf_normalize(2 * x + 2 * y, BPoly.const(4))
    assert h.num == x + y and h.den == BPoly.const(2)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        RatFunc(x, BPoly())


@given(bpolys(), bpolys())
def test_normal_form_is_reduced_and_idempotent(n, d):
    if d.is_zero():
        return
    f = RatFunc(n, d)
    again = RatFunc(f.num, f.den)
    assert (again.num, again.den) == (f.num, f.den)
    if not f.num.is_zero():
        assert gcd_bpoly(f.num, f.den) == BPoly.const(1)
    assert f.den.lc > 0


@given(bpolys(), bpolys(), bpolys(), bpolys())
def test_field_operations_match_sympy(a, b, c, d):
    if b.is_zero() or d.is_zero():
        return
    f, g = RatFunc(a, b), RatFunc(c, d)
    F, G = to_sympy(f), to_sympy(g)
    assert sp.cancel(to_sympy(f + g) - (F + G)) == 0
    assert sp.cancel(to_sympy(f * g) - F * G) == 0
    if not g.is_zero():
        assert sp.cancel(to_sympy(f / g) - F / G) == 0


def test_differences():
    f = RatFunc(1, x * y)
    assert delta_x(f) == RatFunc(-1, x * (x + 1) * y)
    assert delta_y(f) == RatFunc(-1, x * y * (y + 1))


@given(bpolys(), bpolys())
def test_print_parse_round_trip(n, d):
    if d.is_zero():
        return
    f = RatFunc(n, d)
    assert parse_ratfunc(str(f)) == f
    assert parse_ratfunc(str(f.num)) == RatFunc(f.num)


def test_canonical_printing():
    assert str(poly_of("1 + x + y^2 - 2*x*y")) == "y^2 - 2*x*y + x + 1"
    assert str(RatFunc(Fraction(3, 2) * x)) == "3*x/2"
    assert str(Fraction(3, 2) * x) == "3/2*x"
    assert str(RatFunc(x - 1, 2 * y)) == "(x - 1)/(2*y)"


def test_heuristic_gcd_agrees_with_prs():
    from bisum import _zpoly as zp
    from bisum.poly import _prs_gcd_rows, _rows_content, _rows_divexact, _rows_to_bpoly, _y_rows

    def rows(p):
        r = _y_rows(p.int_terms()[1])
        return _rows_divexact(r, _rows_content(r))

    rng = seeded(12)
    hits = 0
    for _ in range(60):
        c = random_bpoly(rng) * random_bpoly(rng)
        a, b = rows(random_bpoly(rng) * c), rows(random_bpoly(rng) * c)
        if len(a) == 1 or len(b) == 1:
            continue
        heu = zp.heu_gcd_rows(a, b)
        prs = _rows_to_bpoly(_prs_gcd_rows(a, b)).canonical()
        if heu is not None:
            hits += 1
            assert _rows_to_bpoly(heu).canonical() == prs
    assert hits > 20
