from fractions import Fraction

import pytest
import sympy as sp

from bisum import BPoly, UPoly, factor_bpoly, factor_upoly, shift, squarefree_decomp
from bisum.gen import factor_instance, random_bpoly, seeded
from fixtures import D_CUBIC, D_LINE, D_SQUARES, X, Y, poly_of, to_sympy, x, y


def U(*coeffs):
    return UPoly(list(coeffs))


def as_dict(F):
    return {q: k for q, k in F.factors}


# -- squarefree decomposition --------------------------------------------------------

def test_squarefree_by_inspection():
    parts = squarefree_decomp(U(0, 0, 1, 1))
    assert parts == [(U(0, 1), 2), (U(1, 1), 1)]


def test_squarefree_already_squarefree():
    parts = squarefree_decomp(U(1, 0, 1))
    assert parts == [(U(1, 0, 1), 1)]


def test_squarefree_reconstructs_expanded_product():
    p = U(-1, 1) ** 2 * U(2, 1) ** 3
    parts = squarefree_decomp(p)
    assert parts == [(U(-1, 1), 2), (U(2, 1), 3)]
    prod = UPoly.const(1)
    for q, k in parts:
        prod = prod * q ** k
    assert prod == p


def test_squarefree_zero_is_an_error():
    with pytest.raises(ValueError):
        squarefree_decomp(UPoly())


# -- univariate factorization --------------------------------------------------------

def test_factor_upoly_small():
    F = factor_upoly(U(-1, 0, 1))
    assert sorted(q.monic().coeffs[0] for q, _ in F.factors) == [-1, 1]
    assert len(factor_upoly(U(1, 0, 1)).factors) == 1
    F = factor_upoly(U(1, 5, 6))
    assert F.unit == 1 and as_dict(F) == {U(1, 2): 1, U(1, 3): 1}


def test_factor_upoly_cyclotomic_split():
    F = factor_upoly(UPoly([-1] + [0] * 29 + [1]))
    assert len(F.factors) == 8 and F.expand() == UPoly([-1] + [0] * 29 + [1])


def test_factor_upoly_swinnerton_dyer_is_irreducible():
    p = U(576, 0, -960, 0, 352, 0, -40, 0, 1)
    assert len(factor_upoly(p).factors) == 1


def test_factor_upoly_matches_sympy():
    rng = seeded(3)
    for _ in range(80):
        p = UPoly.const(rng.choice([1, -2, 3]))
        for _ in range(rng.randint(1, 4)):
            p = p * UPoly([rng.randint(-4, 4) for _ in range(rng.randint(2, 4))] + [1])
        F = factor_upoly(p)
        assert F.expand() == p
        want = sp.factor_list(sp.Poly(list(reversed(p.coeffs)), X))
        assert sorted(k for _, k in F.factors) == sorted(k for _, k in want[1])


def test_factor_upoly_rational_content():
    p = U(Fraction(1, 2), Fraction(3, 2), 1)
    F = factor_upoly(p)
    assert F.expand() == p and len(F.factors) == 2


def test_factor_zero_is_an_error():
    with pytest.raises(ValueError):
        factor_upoly(UPoly())
    with pytest.raises(ValueError):
        factor_bpoly(BPoly())


# -- bivariate factorization ---------------------------------------------------------

def test_difference_of_squares():
    F = factor_bpoly(poly_of("x^2 - y^2"))
    assert F.expand() == poly_of("x^2 - y^2")
    assert as_dict(F) == {y - x: 1, x + y: 1} and F.unit == -1


def test_line_invariant_denominator_is_irreducible():
    F = factor_bpoly(D_LINE)
    assert F.factors == ((D_LINE, 1),) and F.unit == 1


def test_non_summable_denominator_splits_in_two():
    F = factor_bpoly(D_SQUARES * D_CUBIC)
    assert as_dict(F) == {D_SQUARES: 1, D_CUBIC: 1}


def test_contents_and_powers():
    p = 6 * x**2 * (y + 1) ** 3 * (x + y) ** 2 * (x - 3)
    F = factor_bpoly(p)
    assert F.expand() == p
    assert as_dict(F) == {x: 2, y + 1: 3, x + y: 2, x - 3: 1}


def test_factors_are_irreducible_per_sympy():
    rng = seeded(4)
    for _ in range(40):
        p, _ = factor_instance(rng)
        for q, _k in factor_bpoly(p).factors:
            _, parts = sp.factor_list(to_sympy(q), X, Y)
            assert len(parts) == 1 and parts[0][1] == 1


def test_factorization_agrees_with_sympy_multiplicities():
    rng = seeded(5)
    for _ in range(40):
        p = random_bpoly(rng) * random_bpoly(rng) * random_bpoly(rng)
        F = factor_bpoly(p)
        assert F.expand() == p
        _, want = sp.factor_list(to_sympy(p), X, Y)
        want = sorted((sp.Poly(q, X, Y).total_degree(), k) for q, k in want
                      if sp.Poly(q, X, Y).total_degree() > 0)
        got = sorted((q.total_degree, k) for q, k in F.factors)
        assert got == want


def test_shift_commutes_with_factorization():
    rng = seeded(6)
    for _ in range(20):
        p = random_bpoly(rng) * random_bpoly(rng)
        if p.is_constant():
            continue
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        F, G = factor_bpoly(p), factor_bpoly(shift(p, m, n))
        assert {shift(q, m, n).canonical(): k for q, k in F.factors} == as_dict(G)
