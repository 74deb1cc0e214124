import pytest
import sympy as sp
from sympy.polys.dispersion import dispersionset

from bisum import BPoly, KernelProblem, RatFunc, UPoly, degree_bound, gosper_rep, solve_kernel, solve_p1
from bisum.gen import gosper_instance, kernel_instance, seeded
from bisum.poly import upoly_gcd
from fixtures import X, poly_of, rf, x, y


def U(*c):
    return UPoly(list(c))


def gosper_identity_holds(b, m, rep):
    return b * rep.B * rep.C == b.shift(m) * rep.A * rep.C.shift(m)


def sym(p):
    return sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in p.coeffs])), X)


# -- Gosper representation ---------------------------------------------------------------

def test_gosper_constant():
    assert gosper_rep(U(1), 1) == gosper_rep(U(7), 2)
    r = gosper_rep(U(1), 1)
    assert (r.A, r.B, r.C) == (U(1), U(1), U(1))


def test_gosper_linear():
    r = gosper_rep(U(0, 1), 1)
    assert (r.A, r.B, r.C) == (U(0, 1), U(1, 1), U(1))


def test_gosper_cancels_common_factor():
    r = gosper_rep(U(0, 1) * U(1, 1), 1)
    assert (r.A, r.B, r.C) == (U(0, 1), U(2, 1), U(1))


def test_gosper_moves_shift_chain_into_c():
    b = U(0, 1) * U(3, 1) * U(7, 1)
    r = gosper_rep(b, 2)
    assert gosper_identity_holds(b, 2, r)
    assert (r.A, r.B, r.C) == (U(0, 3, 1), U(18, 11, 1), U(5, 1))


def test_gosper_invariants_random():
    rng = seeded(51)
    for _ in range(60):
        b = gosper_instance(rng)
        m = rng.choice([1, 2, 3])
        r = gosper_rep(b, m)
        assert gosper_identity_holds(b, m, r)
        assert all(p.lc == 1 for p in (r.A, r.B, r.C))
        if r.A.degree > 0 and r.B.degree > 0:
            bad = dispersionset(sym(r.A), sym(r.B))
            assert not any(h % m == 0 for h in bad)
        for h in range(0, 25):
            assert upoly_gcd(r.A, r.B.shift(h * m)).degree <= 0


def test_gosper_errors():
    with pytest.raises(ValueError):
        gosper_rep(UPoly(), 1)
    with pytest.raises(ValueError):
        gosper_rep(U(0, 1), 0)


# -- degree bound ---------------------------------------------------------------------

def test_degree_bound_examples():
    assert degree_bound(2, 0, 0, 0, 1, 0, 0, 1) == 2
    assert degree_bound(2, 1, 0, 1, 1, 0, 3, 1) == 4
    assert degree_bound(3, 2, 1, 0, 2, 5, 5, 1) == max(1 + 0 - 2 + 3, 3 - 1)


def test_degree_bound_may_be_negative():
    assert degree_bound(1, 3, 0, 0, 1, 0, -9, 1) < 0


def test_degree_bound_requires_leading_coefficient():
    with pytest.raises(ValueError):
        degree_bound(1, 1, 0, 0, 0, 0, 0, 1)


# -- solving -----------------------------------------------------------------------------

def test_solve_p1_line_example():
    rep = gosper_rep(U(1), 1)
    p1 = solve_p1(BPoly.const(1), rep, 1, 1, 2)
    assert p1.shift(1, -1) - p1 == BPoly.const(1)
    cand = -y - 1
    assert cand.shift(1, -1) - cand == BPoly.const(1)


def test_solve_p1_zero_and_pure_x():
    rep = gosper_rep(U(1), 1)
    assert solve_p1(BPoly(), rep, 1, 1, 2).is_zero()
    assert solve_p1(BPoly.const(1), rep, 1, 0, 1) == x


def test_solve_kernel_line_example():
    sol = solve_kernel(KernelProblem(BPoly.const(1), U(1), 1, 1, 2))
    assert sol.p.shift(1, -1) - sol.p == RatFunc(1)
    other_p = RatFunc(-y - 1)
    assert other_p.shift(1, -1) - other_p == RatFunc(1)


def test_solve_kernel_zero():
    sol = solve_kernel(KernelProblem(BPoly(), U(1), 1, 0, 1))
    assert sol.p.is_zero()


def test_solve_kernel_constructed_two_three():
    q = rf("(x*y + 3)/(x^2 + 1)")
    u = q.shift(2, -3) - q
    sol = solve_kernel(KernelProblem(u.num, u.den.to_upoly("x"), 2, 3, 2))
    assert sol is not None and sol.p.shift(2, -3) - sol.p == u


def test_solve_kernel_unsolvable_univariate():
    # 1/x is not a difference of a rational function in x
    assert solve_kernel(KernelProblem(BPoly.const(1), U(0, 1), 1, 0, 1)) is None


def test_solve_kernel_random_round_trips():
    rng = seeded(52)
    for _ in range(100):
        u, m, n, d0 = kernel_instance(rng)
        prob = KernelProblem(u.num, u.den.to_upoly("x"), m, n, d0)
        sol = solve_kernel(prob)
        assert sol is not None
        assert sol.p.shift(m, -n) - sol.p == u


def test_kernel_problem_validation():
    with pytest.raises(ValueError):
        KernelProblem(BPoly.const(1), UPoly(), 1, 0, 1)
    with pytest.raises(ValueError):
        KernelProblem(BPoly.const(1), U(1), 0, 0, 1)
    with pytest.raises(ValueError):
        KernelProblem(y * y, U(1), 1, 0, 2)
    assert KernelProblem(poly_of("x*y"), U(1, 1), 1, 0, 2).u == rf("x*y/(x+1)")
