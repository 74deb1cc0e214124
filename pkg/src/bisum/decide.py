"""Deciding summability and building certificates.

``decide(f)`` reduces f to fractions ``a/d^j`` in distinct shift classes,
tests each one (a nontrivial shift stabilizer of d, then a solution of the
kernel equation), and on success assembles a certificate (g, h) with
``f = Δx g + Δy h`` that is checked exactly before it is returned.
"""

from dataclasses import dataclass, field

from .dispersion import stabilizer
from .kernel import KernelProblem, solve_kernel
from .ratfunc import RatFunc, delta_x, delta_y
from .reduction import reduce

CRITERION_1 = "criterion-1-failed"
CRITERION_2 = "criterion-2-failed"


@dataclass(frozen=True)
class Witness:
    d: object
    j: int
    reason: str

    def to_json(self):
        return {"d": str(self.d), "j": self.j, "reason": self.reason}


@dataclass(frozen=True)
class Decision:
    summable: bool
    g: RatFunc = None
    h: RatFunc = None
    witness: Witness = None
    transcript: list = field(default_factory=list)

    def to_json(self):
        return {
            "summable": self.summable,
            "g": None if self.g is None else str(self.g),
            "h": None if self.h is None else str(self.h),
            "witness": None if self.witness is None else self.witness.to_json(),
            "transcript": self.transcript,
        }


@dataclass(frozen=True)
class FractionResult:
    """Outcome of the per-fraction test; ``p`` is None on failure."""

    stab: object
    problem: KernelProblem = None
    p: RatFunc = None

    @property
    def ok(self):
        return self.p is not None

    @property
    def reason(self):
        if self.ok:
            return None
        return CRITERION_1 if self.stab.trivial else CRITERION_2


def _check_fraction_args(a, d):
    if a.is_zero():
        raise ValueError("numerator must be nonzero")
    if not a.den.free_of("y"):
        raise ValueError("numerator must be polynomial in y")
    if d.deg_y < 1:
        raise ValueError("denominator must involve y")
    if a.num.deg_y >= d.deg_y:
        raise ValueError("numerator y-degree must be below that of d")


def check_fraction(a, d, j):
    """Run both criteria on ``a / d^j`` and keep the intermediate data."""
    _check_fraction_args(a, d)
    stab = stabilizer(d)
    if stab.trivial:
        return FractionResult(stab)
    t, l = stab.generator
    prob = KernelProblem(a.num, a.den.to_upoly("x"), t, l, d.deg_y)
    sol = solve_kernel(prob)
    return FractionResult(stab, prob, None if sol is None else sol.p)


def decide_fraction(a, d, j):
    """``(p, t, l)`` with ``a = σx^t σy^{-l} p - p``, or None."""
    res = check_fraction(a, d, j)
    if not res.ok:
        return None
    t, l = res.stab.generator
    return res.p, t, l


def _shift_sum(w, start, count):
    acc = RatFunc.zero()
    for k in range(start, start + count):
        acc = acc + w.shift(0, k)
    return acc


def certificate_fraction(p, d, j, t, l):
    """(g, h) with ``a/d^j = Δx g + Δy h`` for ``a = σx^t σy^{-l} p - p``."""
    dj = RatFunc(d) ** j
    F = p / dj
    g = RatFunc.zero()
    for k in range(t):
        g = g + F.shift(k, 0)
    w = p.shift(t, -l) / dj
    if l > 0:
        h = -_shift_sum(w, 0, l)
    elif l < 0:
        h = _shift_sum(w, l, -l)
    else:
        h = RatFunc.zero()
    a = p.shift(t, -l) - p
    if a / dj != delta_x(g) + delta_y(h):
        raise AssertionError("fraction certificate fails verification")
    return g, h


def verify(f, g, h):
    """Exact check of ``f = g(x+1,y) - g + h(x,y+1) - h``."""
    return f == delta_x(g) + delta_y(h)


def _entry(d, j, a, res):
    e = {"d": str(d), "j": j, "a": str(a),
         "stabilizer": None if res.stab.trivial else list(res.stab.generator)}
    if res.problem is not None:
        pr = res.problem
        e["kernel"] = {"a": str(pr.a), "b": pr.b.format("x"),
                       "m": pr.m, "n": pr.n, "d0": pr.d0,
                       "p": None if res.p is None else str(res.p)}
    e["status"] = "ok" if res.ok else res.reason
    return e


def decide(f):
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    rf = reduce(f)
    transcript = [{"step": "reduce", "g": str(rf.g_acc), "h": str(rf.h_acc),
                   "classes": [str(grp.d) for grp in rf.groups]}]
    g, h = rf.g_acc, rf.h_acc
    witness = None
    for grp in rf.groups:
        for j, a in grp.fractions:
            res = check_fraction(a, grp.d, j)
            transcript.append(_entry(grp.d, j, a, res))
            if not res.ok:
                if witness is None:
                    witness = Witness(grp.d, j, res.reason)
                continue
            if witness is None:
                t, l = res.stab.generator
                g1, h1 = certificate_fraction(res.p, grp.d, j, t, l)
                g, h = g + g1, h + h1
    if witness is not None:
        return Decision(False, witness=witness, transcript=transcript)
    if not verify(f, g, h):
        raise AssertionError("certificate fails verification")
    transcript.append({"step": "verify", "ok": True})
    return Decision(True, g, h, transcript=transcript)
