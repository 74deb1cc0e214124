"""Exact factorization over Q.

Univariate polynomials go through a squarefree decomposition and the
Zassenhaus algorithm (modular factorization, Hensel lifting, subset
recombination).  Bivariate polynomials are split into their x-content,
y-content and a primitive part; the squarefree primitive part is mapped to
one variable by Kronecker substitution, the image is factored, and
back-substituted subset products are tried as divisors.  The Kronecker step
is exponential in the worst case, which is acceptable for the small
denominators this package handles.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt

from . import _zpoly as zp
from .poly import BPoly, UPoly, gcd_bpoly

_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
           71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
           139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199]
_PRIME_TRIALS = 4


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(f**k for f, k in factors)`` equals the input exactly."""

    unit: Fraction
    factors: tuple = field(default_factory=tuple)

    def expand(self):
        if not self.factors:
            return self.unit
        acc = None
        for f, k in self.factors:
            acc = f ** k if acc is None else acc * f ** k
        return acc * self.unit


# -- univariate -------------------------------------------------------------------

def squarefree_decomp(p):
    """Squarefree parts of a nonzero UPoly over Q as ``[(part, k)]``.

    Parts are primitive integral with positive leading coefficient and
    pairwise coprime; ``p`` equals a rational unit times the product.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of zero")
    _, ints = p.to_int_list()
    parts = zp.sqf_parts(ints)
    return sorted(((UPoly.from_ints(a), k) for a, k in parts),
                  key=lambda t: t[0].sort_key())


def _mignotte(f):
    n = len(f) - 1
    norm = isqrt(sum(c * c for c in f)) + 1
    return (1 << n) * norm * abs(f[-1])


def _choose_prime(f):
    """Among the first few admissible primes pick the one whose modular
    image has the fewest irreducible factors."""
    best = None
    tried = 0
    for p in _PRIMES:
        if f[-1] % p == 0:
            continue
        fp = zp.mod(f, p)
        if not zp.gf_is_squarefree(fp, p):
            continue
        rng = random.Random(p)
        facs = zp.gf_factor_sqf(zp.gf_monic(fp, p), p, rng)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if tried >= _PRIME_TRIALS or len(facs) == 1:
            break
    if best is None:
        raise RuntimeError("no admissible prime found")
    return best


def zassenhaus(f):
    """Irreducible factors over Z of a squarefree primitive int polynomial."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    p, modular = _choose_prime(f)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte(f) + 1
    k = 1
    while p ** k <= bound:
        k += 1
    pk = p ** k
    lifted = zp.hensel_lift(f, modular, p, k)
    factors = []
    T = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(T):
        for S in combinations(T, s):
            lc = f[-1]
            G = [lc]
            for i in S:
                G = zp.mod(zp.mul(G, lifted[i]), pk)
            G = zp.symmetric(G, pk)
            if G[0] and (lc * f[0]) % G[0]:
                continue
            G = zp.primitive(G)[1]
            q = zp.divexact(f, G)
            if q is None:
                continue
            factors.append(G)
            f = q
            T = [i for i in T if i not in S]
            break
        else:
            s += 1
    factors.append(zp.primitive(f)[1])
    return factors


def _factor_int_list(ints):
    """``[(int factor, multiplicity)]`` of a primitive int polynomial."""
    out = []
    for part, k in zp.sqf_parts(ints):
        low = 0
        while part[low] == 0:
            low += 1
        if low:
            out.append(([0, 1], k))
            part = part[low:]
        if len(part) > 1:
            for g in zassenhaus(part):
                out.append((g, k))
    return out


def factor_upoly(p):
    """Irreducible factorization of a nonzero UPoly over Q."""
    if p.is_zero():
        raise ValueError("factorization of zero")
    unit, ints = p.to_int_list()
    facs = [(UPoly.from_ints(g), k) for g, k in _factor_int_list(ints)]
    facs.sort(key=lambda t: t[0].sort_key())
    return Factorization(unit, tuple(facs))


# -- bivariate --------------------------------------------------------------------

def _kronecker(q, var):
    """Integer image of q under y -> x^B (var='x') or x -> y^B (var='y')."""
    _, ints = q.int_terms()
    if var == "x":
        B = q.deg_x + 1
        key = lambda i, j: i + B * j
    else:
        B = q.deg_y + 1
        key = lambda i, j: j + B * i
    n = max(key(i, j) for i, j in ints)
    img = [0] * (n + 1)
    for (i, j), c in ints.items():
        img[key(i, j)] += c
    return B, img


def _unkronecker(img, B, var):
    d = {}
    for e, c in enumerate(img):
        if c:
            a, b = e % B, e // B
            d[(a, b) if var == "x" else (b, a)] = Fraction(c)
    return BPoly(d)


def _divides_at_points(cand, rem):
    for pt in ((2, 3), (-3, 5)):
        c = cand(*pt)
        if c and rem(*pt) % c:
            return False
    return True


def _factor_primitive_sqf(q):
    """Irreducible factors of a squarefree q without univariate contents."""
    if q.deg_x <= 0 or q.deg_y <= 0:
        return [q.canonical()]
    img_deg = {
        "x": q.deg_y * (q.deg_x + 1) + q.deg_x,
        "y": q.deg_x * (q.deg_y + 1) + q.deg_y,
    }
    var = min(img_deg, key=lambda v: (img_deg[v], v))
    B, img = _kronecker(q, var)
    pieces = []
    for g, k in _factor_int_list(zp.primitive(img)[1]):
        pieces.extend([g] * k)
    rem = q.canonical()
    found = []
    T = list(range(len(pieces)))
    s = 1
    while 2 * s <= len(T):
        for S in combinations(T, s):
            prod = [1]
            for i in S:
                prod = zp.mul(prod, pieces[i])
            cand = _unkronecker(prod, B, var)
            if (cand.is_constant() or cand.deg_x > rem.deg_x
                    or cand.deg_y > rem.deg_y):
                continue
            cand = cand.canonical()
            if not _divides_at_points(cand, rem):
                continue
            quo = rem.div_or_none(cand)
            if quo is None:
                continue
            found.append(cand)
            rem = quo.canonical()
            T = [i for i in T if i not in S]
            break
        else:
            s += 1
    if not rem.is_constant():
        found.append(rem)
    return found


def _univariate_content(p, var):
    """gcd over Q[var] of the coefficients of p seen in the other variable."""
    rows = p.y_view() if var == "x" else p.x_view()
    g = BPoly()
    for r in rows:
        if r:
            g = gcd_bpoly(g, BPoly.from_upoly(r, var))
            if g.is_constant():
                break
    return g


def factor_bpoly(p):
    """Irreducible factorization of a nonzero BPoly over Q."""
    if p.is_zero():
        raise ValueError("factorization of zero")
    unit, q = p.primitive()
    if q.is_constant():
        return Factorization(unit, ())
    factors = []
    for var in ("x", "y"):
        c = _univariate_content(q, var)
        if c.is_constant():
            continue
        q = q.exact_div(c)
        fu = factor_upoly(c.to_upoly(var))
        for f, k in fu.factors:
            factors.append((BPoly.from_upoly(f, var).canonical(), k))
    if not q.is_constant():
        sqf = q.exact_div(gcd_bpoly(q, q.diff("y")))
        for f in _factor_primitive_sqf(sqf.canonical()):
            k = 0
            while True:
                nq = q.div_or_none(f)
                if nq is None:
                    break
                q = nq
                k += 1
            factors.append((f, k))
    factors.sort(key=lambda t: t[0].sort_key())
    result = Factorization(unit, tuple(factors))
    check = result.expand()
    if check != p:
        # unit absorbs the scalar left over from repeated exact divisions
        ratio = (p.terms[p.leading_monomial] / check.terms[check.leading_monomial])
        result = Factorization(unit * ratio, tuple(factors))
        if result.expand() != p:
            raise AssertionError("factorization does not reconstruct input")
    return result
