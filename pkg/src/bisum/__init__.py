"""Deciding (σx, σy)-summability of bivariate rational functions over Q."""

from .decide import Decision, Witness, certificate_fraction, decide, decide_fraction, verify
from .dispersion import DispSet, Line, ShiftSet1D, Stabilizer, disp_bi, disp_uni, integer_roots, solve_diophantine, stabilizer
from .factor import Factorization, factor_bpoly, factor_upoly, squarefree_decomp
from .kernel import GosperRep, KernelProblem, KernelSolution, degree_bound, gosper_rep, solve_kernel, solve_p1
from .parse import ParseError, parse, parse_ratfunc
from .poly import BPoly, UPoly, gcd_bpoly, shift
from .ratfunc import RatFunc, delta_x, delta_y, rf_normalize
from .reduction import PFD, Group, ResidualForm, orbit_shift, pfd_y, poly_antidifference_y, reduce
from .residues import OrbitResidue, is_summable_uni, poly_residues

__all__ = [name for name in dir() if not name.startswith("_")]
