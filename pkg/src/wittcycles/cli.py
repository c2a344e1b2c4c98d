"""Command-line front end.

Subcommands: nf (normal form of relative Milnor symbols), cyc (class of a
0-cycle generator), witt (Witt-vector operations), drw (de Rham-Witt
operations), verify (property suites).  Output is JSON by default;
--pretty switches to a human-readable rendering.  Exit codes: 0 success,
1 property failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import addchow, drw, relmilnor, verify, witt
from .errors import ParseError, WittCyclesError
from .scalars import Context, parse_elem
from .trunc import TruncElem, parse_trunc


def _split_top(text, sep):
    """Split on sep outside parentheses."""
    parts = []
    depth = 0
    cur = []
    for c in text:
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        if c == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(c)
    parts.append("".join(cur))
    return parts


def _parse_coef(text, ring):
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        coef = Fraction(int(p), int(q))
    else:
        coef = Fraction(int(text))
    if ring == "z" and coef.denominator != 1:
        raise ParseError("coefficient %s is not an integer (--coeff z)" % coef)
    return coef


def parse_symbol(ctx, m, text, ring="q"):
    """`{u_1, ..., u_n}` with an optional `c*` prefix; entries use the
    truncated-polynomial grammar."""
    text = text.strip()
    coef = Fraction(1)
    if "{" not in text:
        raise ParseError("symbol must contain {...}: %r" % text)
    head, body = text.split("{", 1)
    head = head.strip()
    if head:
        if not head.endswith("*"):
            raise ParseError("bad symbol prefix %r" % head)
        coef = _parse_coef(head[:-1], ring)
    if not body.rstrip().endswith("}"):
        raise ParseError("unterminated symbol %r" % text)
    body = body.rstrip()[:-1]
    entries = [parse_trunc(ctx, m, part) for part in _split_top(body, ",")]
    return relmilnor.RelSymbol(entries, coef)


def parse_generator(ctx, m, text, ring="q"):
    """`c*(f(t); b_1, ..., b_(n-1))`; without a semicolon the generator
    has no cube coordinates."""
    text = text.strip()
    coef = Fraction(1)
    if "*(" in text and not text.startswith("("):
        head, text = text.split("(", 1)
        text = "(" + text
        coef = _parse_coef(head.rstrip("*"), ring)
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("generator must be parenthesized: %r" % text)
    body = text[1:-1]
    parts = body.split(";")
    if len(parts) > 2:
        raise ParseError("too many ';' in generator %r" % text)
    fpoly = parse_trunc(ctx, m, parts[0])
    bs = []
    if len(parts) == 2 and parts[1].strip():
        bs = [parse_elem(ctx, p) for p in _split_top(parts[1], ",")]
    return addchow.CycleGen(list(fpoly.coeffs), bs, coef)


def parse_tuple(ctx, text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError("tuple must be parenthesized: %r" % text)
    return [parse_elem(ctx, p) for p in _split_top(text[1:-1], ",")]


def _context(args):
    names = tuple(n.strip() for n in args.vars.split(",") if n.strip())
    if not names:
        raise ParseError("empty variable list")
    return Context(names)


def _emit(payload, pretty):
    if pretty:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(json.dumps(payload, default=str))


# -- subcommands --------------------------------------------------------

def cmd_nf(args):
    ctx = _context(args)
    syms = [parse_symbol(ctx, args.m, text, args.coeff) for text in args.symbol]
    cls = relmilnor.normal_form(syms)
    if args.n is not None and cls.degree != args.n:
        raise ParseError("symbol degree %d does not match --n %d"
                         % (cls.degree, args.n))
    if args.pretty:
        print("degree %d, level %d" % (cls.degree, cls.level))
        print("canon: %s" % (cls.canon,))
        return 0
    _emit(cls.to_json(), False)
    return 0


def cmd_cyc(args):
    ctx = _context(args)
    gens = [parse_generator(ctx, args.m, text, args.coeff) for text in args.gen]
    cls = addchow.cyc_milnor(gens, args.m)
    if args.pretty:
        print("degree %d, level %d" % (cls.degree, cls.level))
        print("canon: %s" % (cls.canon,))
        return 0
    _emit(cls.to_json(), False)
    return 0


def cmd_witt(args):
    ctx = _context(args)
    tuples = [parse_tuple(ctx, t) for t in args.args]
    op = args.subop

    def vec(i=0, level=None):
        coords = tuples[i]
        level = level or args.m or len(coords)
        if len(coords) != level:
            raise ParseError("expected %d coordinates, got %d" % (level, len(coords)))
        return witt.WittVector(ctx, level, coords)

    if op in ("add", "mul"):
        a, b = vec(0), vec(1)
        out = a + b if op == "add" else a * b
        payload = out.to_json()
        text = repr(out)
    elif op == "ghost":
        g = witt.ghost(vec())
        payload = {"ghost": [c.to_json() for c in g.comps]}
        text = repr(g)
    elif op == "unghost":
        coords = tuples[0]
        out = witt.unghost(witt.GhostTuple(ctx, len(coords), coords))
        payload = out.to_json()
        text = repr(out)
    elif op == "gamma":
        out = witt.gamma(vec())
        payload = out.to_json()
        text = repr(out)
    elif op == "gamma-inv":
        coeffs = tuples[0]
        out = witt.gamma_inv(TruncElem(ctx, len(coeffs) - 1, coeffs))
        payload = out.to_json()
        text = repr(out)
    elif op == "decompose":
        pairs = witt.witt_decompose(vec())
        payload = [[i, a.to_json()] for i, a in pairs]
        text = ", ".join("V_%d[%s]" % (i, a) for i, a in pairs) or "0"
    else:
        raise ParseError("unknown witt subop %r" % op)
    if args.pretty:
        print(text)
    else:
        _emit(payload, False)
    return 0


def cmd_drw(args):
    ctx = _context(args)
    coords = parse_tuple(ctx, args.witt)
    level = args.m or len(coords)
    if len(coords) != level:
        raise ParseError("expected %d coordinates, got %d" % (level, len(coords)))
    a = witt.WittVector(ctx, level, coords)
    bs = [parse_elem(ctx, b) for b in _split_top(args.bs, ",")] if args.bs else []
    form = drw.phi(a, bs)
    op = args.subop
    if op == "phi":
        out = form
    elif op == "d":
        out = drw.drw_d(form)
    elif op == "v":
        out = drw.drw_V(args.s, form, args.level or args.s * form.level)
    elif op == "f":
        out = drw.drw_F(args.s, form)
    elif op == "restrict":
        if args.level is None:
            raise ParseError("restrict needs --level")
        out = drw.drw_restrict(form, args.level)
    else:
        raise ParseError("unknown drw subop %r" % op)
    if args.pretty:
        print(repr(out))
    else:
        _emit(out.to_json(), False)
    return 0


def cmd_verify(args):
    names = tuple(n.strip() for n in args.vars.split(",") if n.strip())
    report = verify.run_suite(args.suite, seed=args.seed, trials=args.trials,
                              names=names)
    if args.pretty:
        reports = report.get("reports", [report])
        for r in reports:
            for p in r["properties"]:
                status = "PASS" if p["ok"] else "FAIL"
                line = "%s  %s/%s (%d trials)" % (status, r["suite"],
                                                  p["name"], p["trials"])
                if p["counterexample"]:
                    line += "  counterexample: %s" % p["counterexample"]
                print(line)
        print("overall: %s" % ("PASS" if report["ok"] else "FAIL"))
    else:
        _emit(report, False)
    return 0 if report["ok"] else 1


def build_parser():
    top = argparse.ArgumentParser(prog="wittcycles")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, m_default=None):
        p.add_argument("--vars", default="x", help="comma-separated variable names")
        p.add_argument("--m", type=int, default=m_default, help="truncation level")
        p.add_argument("--n", type=int, default=None, help="expected degree")
        p.add_argument("--coeff", choices=("z", "q"), default="q",
                       help="coefficient ring for symbol scalars")
        p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("nf", help="normal form of a relative symbol sum")
    common(p, m_default=1)
    p.add_argument("--symbol", action="append", required=True,
                   help='e.g. "{1+t, x}" or "3*{1+t, x}"; repeatable')
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("cyc", help="Milnor class of 0-cycle generators")
    common(p, m_default=1)
    p.add_argument("--gen", action="append", required=True,
                   help='e.g. "(1-3t; x)"; repeatable')
    p.set_defaults(fn=cmd_cyc)

    p = sub.add_parser("witt", help="Witt vector operations")
    common(p)
    p.add_argument("subop", choices=("add", "mul", "ghost", "unghost",
                                     "gamma", "gamma-inv", "decompose"))
    p.add_argument("args", nargs="+", help='coordinate tuples like "(3,0)"')
    p.set_defaults(fn=cmd_witt)

    p = sub.add_parser("drw", help="de Rham-Witt operations on phi(a, bs)")
    common(p)
    p.add_argument("subop", choices=("phi", "d", "v", "f", "restrict"))
    p.add_argument("--witt", required=True, help='Witt coordinates "(a1,...,am)"')
    p.add_argument("--bs", default="", help="comma-separated dlog entries")
    p.add_argument("--s", type=int, default=2, help="index for V_s / F_s")
    p.add_argument("--level", type=int, default=None, help="target level")
    p.set_defaults(fn=cmd_drw)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", default="all",
                   choices=("all", "witt", "drw", "relmilnor", "reciprocity",
                            "cycle-iso", "rewriting"))
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vars", default="x,y")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_verify)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except WittCyclesError as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error), file=sys.stderr)
        return 2
    except ValueError as exc:
        error = {"error": {"type": "ValueError", "message": str(exc)}}
        print(json.dumps(error), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
