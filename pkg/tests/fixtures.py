"""Worked examples shared by the test modules."""

import sympy as sp

from bisum import BPoly, RatFunc, parse_ratfunc

x, y = BPoly.x(), BPoly.y()

# Shift-equivalent pair with a single dispersion point.
SHIFT_F = 2 * x**2 + 2 * x * y + y**2 + y + 1
SHIFT_G = 2 * x**2 + 2 * x * y + y**2 + 2 * x + y + 1

# Summable example with denominator factor (x+y)^2 - 2.
D_LINE = (x + y) ** 2 - 2
SUMMABLE_TEXT = "-(x+y+4)/((x^2+2*x+2*x*y-1+2*y+y^2)*(x^2+2*x*y+y^2-2))"
SUMMABLE_F = parse_ratfunc(SUMMABLE_TEXT)

# Non-summable example with a trivially stabilized factor x^2 + y^2.
D_SQUARES = x**2 + y**2
D_CUBIC = x**3 + 2 * x * y + x * y**2 + y**3
NONSUMMABLE_TEXT = "(x^2+x^2*y+y^2+1)/((x^2+y^2)*(x^3+2*x*y+x*y^2+y^3))"
NONSUMMABLE_F = parse_ratfunc(NONSUMMABLE_TEXT)

X, Y = sp.symbols("x y")


def rf(text):
    return parse_ratfunc(text)


def to_sympy(obj):
    """Independent conversion through the printed form."""
    return sp.sympify(str(obj).replace("^", "**"), locals={"x": X, "y": Y})


def sympy_equal(a, b):
    return sp.simplify(to_sympy(a) - to_sympy(b)) == 0


def poly_of(expr):
    f = parse_ratfunc(expr)
    assert f.is_polynomial() and f.den == 1
    return f.num
