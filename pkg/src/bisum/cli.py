"""Command-line interface.

Exit codes: 0 success or summable, 1 not summable (decide/certify) or no
kernel solution, 2 usage, parse or evaluation errors.
"""

import argparse
import json
import sys

from .decide import decide, verify
from .dispersion import disp_bi, stabilizer
from .factor import factor_bpoly
from .kernel import KernelProblem, gosper_rep, solve_kernel
from .parse import ParseError, parse_ratfunc
from .reduction import reduce
from .residues import poly_residues

EXIT_OK, EXIT_NO, EXIT_ERR = 0, 1, 2


class UsageError(Exception):
    pass


def _poly(text, what="polynomial"):
    f = parse_ratfunc(text)
    if not f.is_polynomial():
        raise UsageError(f"{what} expected, got {f}")
    return f.num * (1 / f.den.constant_value())


def _upoly_x(text):
    p = _poly(text)
    if not p.free_of("y"):
        raise UsageError(f"polynomial in x expected, got {p}")
    return p.to_upoly("x")


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


# -- commands: each returns (exit code, json payload, text lines) ---------------------

def cmd_decide(args, expr):
    f = parse_ratfunc(expr)
    D = decide(f)
    lines = []
    if D.summable:
        lines += ["summable", f"g = {D.g}", f"h = {D.h}", "verified: true"]
    else:
        w = D.witness
        lines += ["not summable", f"witness: d = {w.d}, j = {w.j}, {w.reason}"]
    if args.transcript:
        lines += ["transcript:"] + [json.dumps(e) for e in D.transcript]
    return (EXIT_OK if D.summable else EXIT_NO), D.to_json(), lines


def cmd_certify(args, expr):
    f = parse_ratfunc(expr)
    D = decide(f)
    if not D.summable:
        w = D.witness
        return EXIT_NO, D.to_json(), [f"not summable: d = {w.d}, j = {w.j}, {w.reason}"]
    ok = verify(f, D.g, D.h)
    payload = D.to_json()
    lines = [f"g = {D.g}", f"h = {D.h}", f"f = Δx g + Δy h: {'verified' if ok else 'FAILED'}"]
    if args.transcript:
        lines += ["transcript:"] + [json.dumps(e) for e in D.transcript]
    return (EXIT_OK if ok else EXIT_ERR), payload, lines


def cmd_reduce(args, expr):
    r = reduce(parse_ratfunc(expr))
    groups = [{"d": str(g.d), "fractions": [{"j": j, "a": str(a)} for j, a in g.fractions]}
              for g in r.groups]
    payload = {"g": str(r.g_acc), "h": str(r.h_acc), "groups": groups}
    lines = [f"g = {r.g_acc}", f"h = {r.h_acc}"]
    for g in r.groups:
        for j, a in g.fractions:
            lines.append(f"({a}) / ({g.d})^{j}")
    return EXIT_OK, payload, lines


def cmd_disp(args, f, g):
    D = disp_bi(_poly(f), _poly(g))
    return EXIT_OK, D.to_json(), [str(D)]


def cmd_stab(args, expr):
    d = _poly(expr)
    if d.deg_y < 1:
        raise UsageError("stabilizer needs a polynomial involving y")
    s = stabilizer(d)
    payload = {"trivial": s.trivial,
               "generator": None if s.trivial else list(s.generator)}
    return EXIT_OK, payload, [str(s)]


def cmd_factor(args, expr):
    p = _poly(expr)
    if p.is_zero():
        raise UsageError("cannot factor zero")
    F = factor_bpoly(p)
    payload = {"unit": str(F.unit),
               "factors": [{"factor": str(q), "multiplicity": k} for q, k in F.factors]}
    parts = [str(F.unit)] + [f"({q})" + (f"^{k}" if k > 1 else "") for q, k in F.factors]
    return EXIT_OK, payload, [" * ".join(parts)]


def cmd_gosper(args, expr, m):
    m = _int(m, "M")
    if m <= 0:
        raise UsageError("M must be positive")
    b = _upoly_x(expr)
    if b.is_zero():
        raise UsageError("b must be nonzero")
    r = gosper_rep(b, m)
    payload = {"A": r.A.format("x"), "B": r.B.format("x"), "C": r.C.format("x")}
    return EXIT_OK, payload, [f"{k} = {v}" for k, v in payload.items()]


def cmd_residues(args, expr):
    res = poly_residues(parse_ratfunc(expr), args.var)
    items = [{"orbit": str(r.orbit_rep), "multiplicity": r.multiplicity,
              "residue": str(r.residue)} for r in res]
    summable = all(r.residue.is_zero() for r in res)
    lines = [f"orbit {i['orbit']}, multiplicity {i['multiplicity']}: residue {i['residue']}"
             for i in items]
    lines.append(f"summable in {args.var}: {'true' if summable else 'false'}")
    return EXIT_OK, {"residues": items, "summable": summable}, lines


def cmd_kernel(args, a, b, m, n, d0):
    prob = KernelProblem(_poly(a), _upoly_x(b), _int(m, "M"), _int(n, "N"), _int(d0, "D0"))
    sol = solve_kernel(prob)
    if sol is None:
        return EXIT_NO, {"solvable": False, "p": None, "p1": None}, ["no solution"]
    payload = {"solvable": True, "p": str(sol.p), "p1": str(sol.p1), "d4": sol.d4}
    return EXIT_OK, payload, [f"p = {sol.p}", f"p1 = {sol.p1}", f"degree bound = {sol.d4}"]


COMMANDS = {
    "decide": (cmd_decide, ["EXPR"], "decide summability and print a certificate"),
    "certify": (cmd_certify, ["EXPR"], "print a verified certificate (g, h)"),
    "reduce": (cmd_reduce, ["EXPR"], "print the residual form"),
    "disp": (cmd_disp, ["F", "G"], "dispersion set of two polynomials"),
    "stab": (cmd_stab, ["D"], "shift stabilizer of an irreducible polynomial"),
    "factor": (cmd_factor, ["EXPR"], "irreducible factorization over Q"),
    "gosper": (cmd_gosper, ["B", "M"], "Gosper representation of b(x)/b(x+M)"),
    "residues": (cmd_residues, ["EXPR"], "polynomial residues in one variable"),
    "kernel": (cmd_kernel, ["A", "B", "M", "N", "D0"],
               "solve A/B = p(x+M, y-N) - p(x, y) with deg_y p < D0"),
}
BATCH = {"decide", "certify"}


def build_parser():
    def flags(default):
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--json", action="store_true", default=default,
                       help="emit JSON")
        p.add_argument("--transcript", action="store_true", default=default,
                       help="include the decision transcript in text output")
        return p

    # flags are accepted before or after the subcommand
    common = flags(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="bisum", parents=[flags(False)],
                                     description="Bivariate rational summability.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, params, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        for i, p in enumerate(params):
            if name in BATCH and i == 0:
                sp.add_argument(p.lower(), metavar=p, nargs="?")
            else:
                sp.add_argument(p.lower(), metavar=p)
        if name in BATCH:
            sp.add_argument("--file", metavar="PATH",
                            help="one expression per line; emits JSON lines")
        if name == "residues":
            sp.add_argument("--var", choices=["x", "y"], default="x")
    return parser


_OPTIONS = {"-h", "--help", "--json", "--transcript", "--file", "--var"}


def _shield(argv):
    """Keep arguments such as "-x^2" from being read as options."""
    out = []
    for a in argv:
        if a.startswith("-") and a not in _OPTIONS and not a.startswith("--"):
            a = " " + a
        out.append(a)
    return out


def _run_one(args, values):
    fn = COMMANDS[args.command][0]
    values = [v[1:] if v.startswith(" -") else v for v in values]
    try:
        return fn(args, *values)
    except (ParseError, UsageError, ZeroDivisionError, ValueError) as e:
        return EXIT_ERR, {"error": str(e)}, None


def _emit(args, code, payload, lines, out, err):
    if lines is None:
        print(f"error: {payload['error']}", file=err)
        if args.json:
            print(json.dumps(payload), file=out)
        return
    if args.json:
        print(json.dumps(payload), file=out)
    else:
        for line in lines:
            print(line, file=out)


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_shield(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERR
    params = COMMANDS[args.command][1]
    values = [getattr(args, p.lower()) for p in params]
    if args.command in BATCH and getattr(args, "file", None):
        return _batch(args, out, err)
    if args.command in BATCH and values[0] is None:
        print("error: EXPR or --file is required", file=err)
        return EXIT_ERR
    code, payload, lines = _run_one(args, values)
    _emit(args, code, payload, lines, out, err)
    return code


def _batch(args, out, err):
    try:
        with open(args.file, encoding="utf-8") as fh:
            exprs = [ln.strip() for ln in fh]
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_ERR
    worst = EXIT_OK
    for lineno, expr in enumerate(exprs, 1):
        if not expr or expr.startswith("#"):
            continue
        code, payload, lines = _run_one(args, [expr])
        payload = dict(payload, line=lineno, input=expr)
        if lines is None:
            print(f"error: line {lineno}: {payload['error']}", file=err)
        print(json.dumps(payload), file=out)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
