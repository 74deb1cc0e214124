"""Seeded random instances for property tests and experiment scripts."""

import random
from dataclasses import dataclass
from fractions import Fraction

from .factor import factor_bpoly
from .parse import parse_ratfunc
from .poly import BPoly, UPoly
from .ratfunc import RatFunc, delta_x, delta_y

# x+2y and (x+y)^2-2 have nontrivial shift stabilizers, x*y+1 does not,
# x+1 puts a y-free factor into the denominators.
ROUNDTRIP_POOL = ("x + 2*y", "x^2 + 2*x*y + y^2 - 2", "x*y + 1", "x + 1")
GOSPER_FACTORS = ("x", "x + 1", "x + 3", "x - 2", "2*x + 1", "x^2 + 1",
                  "x^2 + x + 1", "x^2 - 2", "x^2 + 4*x + 5")


@dataclass(frozen=True)
class InstanceConfig:
    seed: int = 0
    max_deg: int = 3
    coeff: int = 5
    max_terms: int = 4
    max_shift: int = 2
    max_factors: int = 2
    max_den_deg: int = 3
    pool: tuple = ROUNDTRIP_POOL


def _poly(text):
    return parse_ratfunc(text).num


def random_bpoly(rng, max_deg=3, coeff=5, max_terms=4, nonzero=True):
    """Random polynomial with total degree at most ``max_deg``."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            i = rng.randint(0, max_deg)
            j = rng.randint(0, max_deg - i)
            terms[(i, j)] = rng.randint(-coeff, coeff)
        p = BPoly(terms)
        if p or not nonzero:
            return p


def random_upoly(rng, max_deg=3, coeff=5):
    while True:
        p = UPoly([rng.randint(-coeff, coeff) for _ in range(max_deg + 1)])
        if p:
            return p


def _pool_denominator(rng, cfg):
    den = BPoly.const(1)
    for _ in range(rng.randint(1, cfg.max_factors)):
        base = _poly(rng.choice(cfg.pool))
        if den.total_degree + base.total_degree > cfg.max_den_deg:
            continue
        m = rng.randint(-cfg.max_shift, cfg.max_shift)
        n = rng.randint(-cfg.max_shift, cfg.max_shift)
        den = den * base.shift(m, n)
    return den


def random_pool_ratfunc(rng, cfg):
    num = random_bpoly(rng, cfg.max_deg, cfg.coeff, cfg.max_terms, nonzero=False)
    return RatFunc(num, _pool_denominator(rng, cfg))


def roundtrip_instance(rng, cfg=InstanceConfig()):
    """``(f, g, h)`` with ``f = Δx g + Δy h`` and f nonzero."""
    while True:
        g = random_pool_ratfunc(rng, cfg)
        h = random_pool_ratfunc(rng, cfg)
        f = delta_x(g) + delta_y(h)
        if f:
            return f, g, h


def shift_scan(d, bound=8):
    """All (m, n) with |m|, |n| <= bound and d = d(x+m, y+n), by brute force."""
    return [(m, n) for m in range(-bound, bound + 1)
            for n in range(-bound, bound + 1) if d.shift(m, n) == d]


def random_irreducible(rng, max_deg=3, coeff=4, need_y=True):
    while True:
        p = random_bpoly(rng, max_deg, coeff, max_terms=4)
        if need_y and p.deg_y < 1:
            continue
        if p.is_constant():
            continue
        F = factor_bpoly(p)
        if len(F.factors) == 1 and F.factors[0][1] == 1:
            return F.factors[0][0]


def negative_instance(rng, max_deg=3):
    """``(f, d)`` with ``f = a/d``, d irreducible with a trivial stabilizer
    confirmed by exhaustive shift scan."""
    while True:
        d = random_irreducible(rng, max_deg)
        if shift_scan(d) != [(0, 0)]:
            continue
        rows = []
        for _ in range(d.deg_y):
            rows.append(random_upoly(rng, 2, 4) if rng.random() < 0.7 else UPoly())
        a = BPoly.from_y_view(rows)
        if not a:
            continue
        b = BPoly.from_upoly(random_upoly(rng, 1, 3), "x")
        return RatFunc(a, b * d), d


def gosper_instance(rng):
    """A product of at most three small linear or quadratic factors in x."""
    b = UPoly.const(rng.choice([1, 2, -3]))
    for _ in range(rng.randint(0, 3)):
        text = rng.choice(GOSPER_FACTORS)
        b = b * _poly(text).to_upoly("x").shift(rng.randint(-3, 3))
    return b


def factor_instance(rng):
    """``(product, {factor: multiplicity})`` from random small irreducibles."""
    want = {}
    for _ in range(rng.randint(1, 3)):
        q = random_irreducible(rng, 2, 3, need_y=False)
        want[q] = want.get(q, 0) + rng.randint(1, 2)
    p = BPoly.const(rng.choice([1, -1, 2, Fraction(3, 2)]))
    for q, k in want.items():
        p = p * q ** k
    return p, want


def univariate_instance(rng, summable):
    """A y-free rational function, a constructed difference when ``summable``."""
    def rnd():
        den = BPoly.const(1)
        for _ in range(rng.randint(1, 2)):
            den = den * _poly(rng.choice(GOSPER_FACTORS)).shift(rng.randint(-3, 3), 0)
        return RatFunc(BPoly.from_upoly(random_upoly(rng, 2, 4), "x"), den)
    while True:
        if summable:
            q = rnd()
            f = q.shift(1, 0) - q
        else:
            f = rnd() + rnd()
        if f:
            return f


def seeded(seed):
    return random.Random(seed)


def dispersion_instance(rng, max_shift=6):
    """``(f, a, b)`` for the shifted-pair oracle.  Half of the draws are
    polynomials in one linear form, whose dispersion sets are lines."""
    if rng.random() < 0.5:
        f = random_bpoly(rng, 3, 5, 4)
    else:
        p, q = rng.choice([(1, 1), (1, -1), (1, 2), (2, -1), (0, 1), (1, 0), (2, 3)])
        form = BPoly({(1, 0): p, (0, 1): q})
        f = BPoly.const(rng.randint(-3, 3))
        for k, c in enumerate(random_upoly(rng, 3, 4).coeffs):
            f = f + form ** k * c
        f = f + rng.choice([0, 0, 1]) * BPoly.x() * BPoly.y()
    return f, rng.randint(-max_shift, max_shift), rng.randint(-max_shift, max_shift)


def kernel_instance(rng, max_d0=3):
    """``(u, m, n, d0)`` with ``u = q(x+m, y-n) - q`` for a random q in
    Q(x)[y] with deg_y q < d0; u is nonzero."""
    while True:
        d0 = rng.randint(1, max_d0)
        m, n = rng.randint(1, 3), rng.randint(-3, 3)
        num = BPoly({(rng.randint(0, 4), rng.randint(0, d0 - 1)): rng.randint(-4, 4)
                     for _ in range(rng.randint(1, 4))})
        den = BPoly.const(1)
        for _ in range(rng.randint(0, 2)):
            den = den * _poly(rng.choice(GOSPER_FACTORS)).shift(rng.randint(-3, 3), 0)
        q = RatFunc(num, den)
        u = q.shift(m, -n) - q
        if u:
            return u, m, n, d0
