"""Walk the three worked examples through every pipeline stage."""

from bisum import (RatFunc, decide, disp_bi, factor_bpoly, parse_ratfunc, pfd_y, reduce,
                   stabilizer, verify)


def show(title, value):
    print(f"  {title:<22} {value}")


def shifted_pair():
    print("shift-equivalent pair")
    f = parse_ratfunc("2*x^2+2*x*y+y^2+y+1").num
    g = parse_ratfunc("2*x^2+2*x*y+y^2+2*x+y+1").num
    show("Disp(f, g)", disp_bi(f, g))


def summable():
    print("summable function")
    f = parse_ratfunc("-(x+y+4)/((x^2+2*x+2*x*y-1+2*y+y^2)*(x^2+2*x*y+y^2-2))")
    d = parse_ratfunc("x^2+2*x*y+y^2-2").num
    for q, j, a in pfd_y(f).terms:
        show(f"fraction over ({q})", a)
    R = reduce(f)
    show("reduction g", R.g_acc)
    show("remainder", R.remainder())
    show("stabilizer", stabilizer(d))
    D = decide(f)
    show("certificate g", D.g)
    show("certificate h", D.h)
    show("verified", verify(f, D.g, D.h))
    show("closed forms verify", verify(f, RatFunc(parse_ratfunc("x").num, d),
                                      RatFunc(parse_ratfunc("y").num, d)))


def not_summable():
    print("non-summable function")
    f = parse_ratfunc("(x^2+x^2*y+y^2+1)/((x^2+y^2)*(x^3+2*x*y+x*y^2+y^3))")
    show("denominator factors", [str(q) for q, _ in factor_bpoly(f.den).factors])
    for q, j, a in pfd_y(f).terms:
        show(f"fraction over ({q})", a)
    D = decide(f)
    show("summable", D.summable)
    show("witness", f"{D.witness.d} ({D.witness.reason})")


if __name__ == "__main__":
    shifted_pair()
    summable()
    not_summable()
