import pytest

from bisum import BPoly, RatFunc, delta_x, delta_y, factor_bpoly, orbit_shift, pfd_y, poly_antidifference_y, reduce
from bisum.factor import Factorization
from bisum.gen import InstanceConfig, random_pool_ratfunc, seeded
from fixtures import D_CUBIC, D_LINE, D_SQUARES, NONSUMMABLE_F, SUMMABLE_F, rf, x, y


def term_map(pfd):
    return {(d, j): a for d, j, a in pfd.terms}


# -- partial fractions ----------------------------------------------------------------

def test_pfd_of_summable_example():
    P = pfd_y(SUMMABLE_F)
    assert P.poly_part.is_zero()
    assert term_map(P) == {(D_LINE, 1): rf("-x - y"),
                           (D_LINE.shift(1, 0), 1): rf("x + y + 2")}


def test_pfd_telescoping_pair():
    P = pfd_y(rf("1/(y*(y+1))"))
    assert term_map(P) == {(y, 1): RatFunc(1), (y + 1, 1): RatFunc(-1)}


def test_pfd_of_non_summable_example():
    P = pfd_y(NONSUMMABLE_F)
    den = x**3 * (x - 2)
    assert term_map(P) == {
        (D_SQUARES, 1): RatFunc(-x**4 + y, den),
        (D_CUBIC, 1): rf("x^5+x^4-2*x+x^2-2*x^3+x^4*y-x*y-y^2") / RatFunc(den),
    }
    assert P.total() == NONSUMMABLE_F


def test_pfd_powers_and_polynomial_part():
    f = rf("(x*y^4 + 3)/((y^2 + x)^2 * (x - 1) * (y + x))")
    P = pfd_y(f)
    assert P.total() == f
    assert {(d, j) for d, j, _ in P.terms} == {(y**2 + x, 1), (y**2 + x, 2), (x + y, 1)}
    for d, _, a in P.terms:
        assert a.den.free_of("y") and a.num.deg_y < d.deg_y
    g = rf("(y^3 + x)/(x + 2)")
    P = pfd_y(g)
    assert P.terms == () and P.poly_part == g


def test_pfd_rejects_bad_factorization():
    bad = Factorization(1, ((y + 1, 1),))
    with pytest.raises(ValueError, match="bad factorization"):
        pfd_y(rf("1/(y*(y+2))"), bad)


def test_pfd_random_reconstruction():
    rng = seeded(31)
    cfg = InstanceConfig()
    for _ in range(25):
        f = random_pool_ratfunc(rng, cfg)
        assert pfd_y(f).total() == f


# -- polynomial antidifference -----------------------------------------------------

def test_antidifference_examples():
    assert poly_antidifference_y(RatFunc(1)) == RatFunc(y)
    assert poly_antidifference_y(RatFunc(y)) == rf("y*(y-1)/2")
    P = rf("3*y^2/x")
    assert delta_y(poly_antidifference_y(P)) == P


def test_antidifference_random():
    rng = seeded(32)
    for _ in range(20):
        num = BPoly({(rng.randint(0, 3), rng.randint(0, 4)): rng.randint(-5, 5) for _ in range(4)})
        P = RatFunc(num, x + rng.randint(1, 4))
        assert delta_y(poly_antidifference_y(P)) == P


def test_antidifference_rejects_fractions_in_y():
    with pytest.raises(ValueError):
        poly_antidifference_y(rf("1/y"))


# -- orbit shifts -------------------------------------------------------------------

def test_orbit_shift_x_step():
    g, h, a2 = orbit_shift(rf("x + y + 2"), D_LINE, 1, 1, 0)
    assert g == rf("(x+y+1)/((x+y)^2-2)") and h.is_zero()
    assert a2 == rf("x + y + 1")


def test_orbit_shift_identity_shift():
    a = rf("x*y + 1")
    assert orbit_shift(a, D_LINE, 1, 0, 0) == (RatFunc.zero(), RatFunc.zero(), a)


@pytest.mark.parametrize("m,n", [(1, -2), (-2, 3), (2, 2), (-1, -1), (0, 3), (3, 0)])
def test_orbit_shift_all_sign_branches(m, n):
    d_k, j, a = y - 2 * x, 2, rf("x + 1")
    g, h, a2 = orbit_shift(a, d_k, j, m, n)
    lhs = a / RatFunc(d_k.shift(m, n)) ** j
    assert lhs == delta_x(g) + delta_y(h) + a2 / RatFunc(d_k) ** j


def test_orbit_shift_checks_source():
    with pytest.raises(ValueError):
        orbit_shift(RatFunc(1), D_LINE, 1, 1, 0, source=D_SQUARES)


# -- reduce ------------------------------------------------------------------------------

def test_reduce_summable_example():
    R = reduce(SUMMABLE_F)
    assert R.g_acc == rf("(x+y+1)/((x+y)^2-2)")
    assert R.h_acc.is_zero()
    assert len(R.groups) == 1
    assert R.groups[0].d == D_LINE and R.groups[0].fractions == ((1, RatFunc(1)),)


def test_reduce_polynomial():
    f = rf("x^2*y + 3*x - 1")
    R = reduce(f)
    assert R.groups == () and R.g_acc.is_zero()
    assert delta_y(R.h_acc) == f


def test_reduce_non_summable_example_keeps_two_classes():
    R = reduce(NONSUMMABLE_F)
    assert [g.d for g in R.groups] == [D_SQUARES, D_CUBIC]


def test_reduce_residual_input_is_unchanged():
    f = rf("(x^2 - 1)/((x + 3)*(x*y + 1))")
    R = reduce(f)
    assert R.g_acc.is_zero() and R.h_acc.is_zero()
    assert R.remainder() == f


def test_reduce_merges_classes_and_cancels():
    f = rf("1/(x*y + 1)") - rf("1/((x+2)*(y-1) + 1)")
    R = reduce(f)
    assert R.groups == ()
    assert delta_x(R.g_acc) + delta_y(R.h_acc) == f


def test_reduce_identity_on_random_inputs():
    rng = seeded(33)
    cfg = InstanceConfig()
    for _ in range(20):
        f = random_pool_ratfunc(rng, cfg) + random_pool_ratfunc(rng, cfg)
        R = reduce(f)
        assert delta_x(R.g_acc) + delta_y(R.h_acc) + R.remainder() == f
        reps = [g.d for g in R.groups]
        assert len(set(reps)) == len(reps)
        for g in R.groups:
            assert factor_bpoly(g.d).factors == ((g.d, 1),)
