"""Dense integer and modular polynomial kernels.

Polynomials are plain lists of ints, lowest degree first, with no trailing
zeros; the zero polynomial is the empty list.  These routines back the
public ``UPoly``/``BPoly`` types where speed matters (gcds, factoring).
"""

from math import gcd, isqrt


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return trim(r)


def sub(a, b):
    r = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        r[i] -= c
    return trim(r)


def neg(a):
    return [-c for c in a]


def scale(a, c):
    if c == 0:
        return []
    return [c * v for v in a]


def mul(a, b):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                r[i + j] += u * v
    return r


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    """Return ``(c, p)`` with ``a = c*p``, ``p`` primitive with positive lc."""
    if not a:
        return 0, []
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, list(a)
    return c, [v // c for v in a]


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a, x):
    r = 0
    for c in reversed(a):
        r = r * x + c
    return r


def taylor_shift(a, k):
    """Coefficients of a(x + k)."""
    r = list(a)
    n = len(r)
    if k == 0 or n < 2:
        return r
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            r[j] += k * r[j + 1]
    return r


def prem(a, b):
    """Pseudo-remainder of a by b (b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(r) - len(b) + 1
    if e <= 0:
        return r
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        trim(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [f * v for v in r]
    return r


def divexact(a, b):
    """Quotient a/b over Z if it exists, else None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    r = list(a)
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            return None
        q[k] = qc
        for i, v in enumerate(b):
            r[k + i] -= qc * v
    if any(r[:db]):
        return None
    return trim(q)


def gcd_z(a, b):
    """Primitive gcd over Z[x] (positive leading coefficient)."""
    if not a:
        return primitive(b)[1]
    if not b:
        return primitive(a)[1]
    ca, a = primitive(a)
    cb, b = primitive(b)
    c = gcd(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [abs(c)]
        r = prem(a, b)
        a, b = b, primitive(r)[1]
    return scale(a, abs(c))


def gcd_pp(a, b):
    """Gcd of the primitive parts only (integer content dropped)."""
    g = gcd_z(primitive(a)[1] if a else a, primitive(b)[1] if b else b)
    return primitive(g)[1]


def sqf_parts(a):
    """Squarefree decomposition of a primitive polynomial over Z.

    Returns ``[(part, multiplicity)]`` with primitive, pairwise coprime
    parts; constant parts are omitted.
    """
    out = []
    if len(a) <= 1:
        return out
    c = gcd_pp(a, derivative(a))
    w = primitive(divexact(a, c))[1]
    i = 1
    while len(w) > 1:
        y = gcd_pp(w, c)
        part = primitive(divexact(w, y))[1]
        if len(part) > 1:
            out.append((part, i))
        c = primitive(divexact(c, y))[1]
        w = y
        i += 1
    return out


# -- arithmetic modulo a prime ------------------------------------------------

def mod(a, p):
    return trim([c % p for c in a])


def symmetric(a, m):
    h = m // 2
    return trim([(c % m) - m if (c % m) > h else c % m for c in a])


def gf_add(a, b, p):
    return mod(add(a, b), p)


def gf_sub(a, b, p):
    return mod(sub(a, b), p)


def gf_mul(a, b, p):
    return mod(mul(a, b), p)


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], mod(r, p)
    q = [0] * (len(r) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db] % p
        if c == 0:
            continue
        c = c * inv % p
        q[k] = c
        for i, v in enumerate(b):
            r[k + i] = (r[k + i] - c * v) % p
    return trim(q), mod(r[:db], p)


def gf_rem(a, b, p):
    return gf_divmod(a, b, p)[1]


def gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gf_gcd(a, b, p):
    a, b = mod(a, p), mod(b, p)
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_gcdex(a, b, p):
    """Return ``(s, t, g)`` with ``s*a + t*b = g`` monic gcd, all mod p."""
    r0, r1 = mod(a, p), mod(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return ([c * inv % p for c in s0], [c * inv % p for c in t0],
            [c * inv % p for c in r0])


def gf_powmod(a, e, f, p):
    result = [1]
    base = gf_rem(a, f, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = gf_rem(gf_mul(base, base, p), f, p)
    return result


def gf_is_squarefree(a, p):
    d = mod(derivative(a), p)
    if not d:
        return False
    return len(gf_gcd(a, d, p)) == 1


def gf_ddf(f, p):
    """Distinct-degree factorization of a monic squarefree f mod p."""
    out = []
    h = [0, 1]
    x = [0, 1]
    i = 1
    while 2 * i <= deg(f):
        h = gf_powmod(h, p, f, p)
        g = gf_gcd(f, gf_sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, i))
            f = gf_divmod(f, g, p)[0]
            h = gf_rem(h, f, p)
        i += 1
    if len(f) > 1:
        out.append((f, deg(f)))
    return out


def gf_edf(f, d, p, rng):
    """Equal-degree splitting (Cantor-Zassenhaus, odd p)."""
    n = deg(f)
    if n == d:
        return [f]
    e = (p ** d - 1) // 2
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        b = gf_sub(gf_powmod(a, e, f, p), [1], p)
        g = gf_gcd(f, b, p)
        if 0 < deg(g) < n:
            return (gf_edf(g, d, p, rng)
                    + gf_edf(gf_divmod(f, g, p)[0], d, p, rng))


def gf_factor_sqf(f, p, rng):
    """Monic irreducible factors of a monic squarefree f mod odd p."""
    out = []
    for g, d in gf_ddf(f, p):
        out.extend(gf_edf(g, d, p, rng))
    return out


# -- Hensel lifting -----------------------------------------------------------

def _mod_m(a, m):
    return trim([c % m for c in a])


def _divmod_monic(a, b, m):
    """Division by a monic b with coefficients reduced mod m."""
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _mod_m(r, m)
    q = [0] * (len(r) - db)
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db] % m
        q[k] = c
        if c:
            for i, v in enumerate(b):
                r[k + i] -= c * v
    return _mod_m(q, m), _mod_m(r[:db], m)


def hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step (f = g*h mod m, s*g + t*h = 1 mod m).

    ``h`` must be monic.  Returns the lifted quadruple modulo ``m**2``.
    """
    M = m * m
    e = _mod_m(sub(f, mul(g, h)), M)
    q, r = _divmod_monic(mul(s, e), h, M)
    g1 = _mod_m(add(add(g, mul(t, e)), mul(q, g)), M)
    h1 = _mod_m(add(h, r), M)
    b = _mod_m(sub(add(mul(s, g1), mul(t, h1)), [1]), M)
    c, d = _divmod_monic(mul(s, b), h1, M)
    s1 = _mod_m(sub(s, d), M)
    t1 = _mod_m(sub(sub(t, mul(t, b)), mul(c, g1)), M)
    return g1, h1, s1, t1


def hensel_lift(f, factors, p, k):
    """Lift monic modular factors of f to monic factors modulo p**k.

    ``f`` is an integer polynomial with ``f = lc(f) * prod(factors) mod p``.
    """
    pk = p ** k
    r = len(factors)
    if r == 1:
        inv = pow(f[-1], -1, pk)
        return [_mod_m(scale(f, inv), pk)]
    half = r // 2
    left, right = factors[:half], factors[half:]
    lc = f[-1]
    g = [lc % p]
    for u in left:
        g = gf_mul(g, u, p)
    h = [1]
    for u in right:
        h = gf_mul(h, u, p)
    s, t, one = gf_gcdex(g, h, p)
    assert one == [1]
    m = p
    while m < pk:
        g, h, s, t = hensel_step(f, g, h, s, t, m)
        m = m * m
    g = _mod_m(g, pk)
    h = _mod_m(h, pk)
    return hensel_lift(g, left, p, k) + hensel_lift(h, right, p, k)


# -- heuristic gcd ------------------------------------------------------------
#
# Polynomials over Z in one variable are int lists; in two variables they
# are lists (over the outer variable) of int lists.  Evaluating the outer
# variable at a large integer, taking the gcd one level down and rebuilding
# the coefficients from their symmetric base-xi digits recovers the gcd in
# most cases; every candidate is confirmed by exact division.

_HEU_TRIES = 6


def _sym_digits(h, xi):
    """Symmetric base-xi digits of an int, lowest first."""
    out = []
    half = xi // 2
    while h:
        g = h % xi
        if g > half:
            g -= xi
        out.append(g)
        h = (h - g) // xi
    return out


def _next_xi(xi):
    return 73794 * xi * isqrt(isqrt(xi)) // 27011


def _heu_start(fn, gn, flc, glc):
    B = 2 * min(fn, gn) + 29
    return max(min(B, 99 * isqrt(B)), 2 * min(fn // abs(flc), gn // abs(glc)) + 2)


def heu_gcd(f, g):
    """``(h, f/h, g/h)`` over Z[x] for nonzero f, g, or None on failure."""
    cf, cg = content(f), content(g)
    c = gcd(cf, cg)
    f = [v // c for v in f]
    g = [v // c for v in g]
    if len(f) == 1 or len(g) == 1:
        return [c], f, g
    xi = _heu_start(max(map(abs, f)), max(map(abs, g)), f[-1], g[-1])
    for _ in range(_HEU_TRIES):
        ff, gg = evaluate(f, xi), evaluate(g, xi)
        if ff and gg:
            hv = gcd(ff, gg)
            h = primitive(_sym_digits(hv, xi))[1]
            if h:
                qf = divexact(f, h)
                if qf is not None:
                    qg = divexact(g, h)
                    if qg is not None:
                        return scale(h, c), qf, qg
        xi = _next_xi(xi)
    return None


def rows_eval(rows, xi):
    """Evaluate the outer variable of a bivariate row list at xi."""
    acc = []
    for r in reversed(rows):
        acc = add(scale(acc, xi), r) if acc else list(r)
    return acc


def rows_digits(h, xi):
    """Inverse of ``rows_eval`` by symmetric digits, coefficientwise."""
    rows = []
    h = list(h)
    half = xi // 2
    while h:
        g = []
        for v in h:
            d = v % xi
            if d > half:
                d -= xi
            g.append(d)
        trim(g)
        rows.append(g)
        h = trim([(v - d) // xi for v, d in zip(h, g + [0] * (len(h) - len(g)))])
    while rows and not rows[-1]:
        rows.pop()
    return rows


def rows_divexact(a, b):
    """Exact quotient of bivariate row lists, or None."""
    a = [list(r) for r in a]
    db = len(b) - 1
    if len(a) - 1 < db:
        return None if any(a) else []
    q = [[] for _ in range(len(a) - db)]
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        top = a[k + db]
        if not top:
            continue
        c = divexact(top, lb)
        if c is None:
            return None
        q[k] = c
        for i, bi in enumerate(b):
            if bi:
                a[k + i] = sub(a[k + i], mul(c, bi))
    if any(a[:db]):
        return None
    while q and not q[-1]:
        q.pop()
    return q


def _rows_norm(rows):
    return max(max(map(abs, r)) for r in rows if r)


def _rows_lc(rows):
    return rows[-1][-1]


def heu_gcd_rows(f, g):
    """Heuristic gcd of two primitive-content bivariate row lists; the
    result has unknown sign and is not content-normalized.  None on
    failure."""
    if len(f) == 1 or len(g) == 1:
        return None
    xi = _heu_start(_rows_norm(f), _rows_norm(g), _rows_lc(f), _rows_lc(g))
    for _ in range(_HEU_TRIES):
        ff, gg = rows_eval(f, xi), rows_eval(g, xi)
        if ff and gg:
            res = heu_gcd(ff, gg)
            if res is not None:
                h = rows_digits(res[0], xi)
                if h:
                    cont = 0
                    for r in h:
                        cont = gcd(cont, content(r)) if r else cont
                    h = [[v // cont for v in r] for r in h]
                    if rows_divexact(f, h) is not None and rows_divexact(g, h) is not None:
                        return h
        xi = _next_xi(xi)
    return None
