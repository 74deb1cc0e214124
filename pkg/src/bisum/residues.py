"""Polynomial residues of a rational function in one shift variable.

The other variable is an inert coefficient.  A function is summable with
respect to the chosen shift exactly when every residue vanishes; this module
is an independent cross-check for the bivariate pipeline.
"""

from dataclasses import dataclass

from .dispersion import disp_uni
from .poly import BPoly
from .ratfunc import RatFunc
from .reduction import pfd_y


@dataclass(frozen=True)
class OrbitResidue:
    orbit_rep: BPoly
    multiplicity: int
    residue: RatFunc


def _swap_residue(r):
    return OrbitResidue(r.orbit_rep.swap(), r.multiplicity, r.residue.swap())


def poly_residues(f, var="y"):
    """Residues of f at each shift orbit (w.r.t. ``var``) and multiplicity."""
    if var == "x":
        return [_swap_residue(r) for r in poly_residues(f.swap(), "y")]
    if var != "y":
        raise ValueError(f"unknown variable {var!r}")
    pfd = pfd_y(f)
    ds = sorted({d for d, _, _ in pfd.terms}, key=BPoly.sort_key)
    reps, where = [], {}
    for d in ds:
        for rep in reps:
            S = disp_uni(d, rep, "y")
            if S.values:
                where[d] = (rep, S.values[0])
                break
        else:
            reps.append(d)
            where[d] = (d, 0)
    sums = {}
    for d, j, a in pfd.terms:
        rep, l = where[d]
        # d = rep(y + l): the numerator moves back by l
        a = a.shift(0, -l)
        key = (rep, j)
        sums[key] = sums[key] + a if key in sums else a
    out = []
    for rep in reps:
        for j in sorted(k for r, k in sums if r == rep):
            out.append(OrbitResidue(rep, j, sums[(rep, j)]))
    return out


def is_summable_uni(f, var="y"):
    """Whether f = σ(g) - g for a rational g, σ the shift in ``var``."""
    return all(r.residue.is_zero() for r in poly_residues(f, var))
