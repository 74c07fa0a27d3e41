"""Command-line front end: ``equimetric <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad flags or parameters, 3 I/O failure.
"""

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext

from . import elliptic, families, oracle
from .affine import SolutionTuple, residuals, verify_solution
from .exactq import format_rat, parse_rat, rat_sqrt

OK, FAIL, BAD_FLAGS, IO_ERROR = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(BAD_FLAGS)


def _rat(text):
    try:
        return parse_rat(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def approx(x):
    """Exact rational followed by a 12-significant-digit decimal."""
    with localcontext() as ctx:
        ctx.prec = 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return f"{format_rat(x)}  ≈ {d}"


def _emit(obj, as_json, out):
    if as_json:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


# --- subcommands ---------------------------------------------------------------------------

def cmd_verify_families(args, out):
    rows, all_ok = [], True
    for fam in families.VERIFIABLE:
        ok = skip = bad = 0
        for params in families.parameter_grid(fam, args.grid):
            try:
                res = families.run_family(fam, params)
            except families.DomainError:
                skip += 1
                continue
            except families.FamilyVerificationError as e:
                bad += 1
                print(f"{fam} {params}: {e}", file=sys.stderr)
                continue
            if res is None:
                skip += 1
            else:
                ok += 1
        all_ok &= bad == 0
        rows.append((fam, ok, skip, bad))
    if args.json:
        _emit({"grid": args.grid, "families": [
            {"family": f, "pass": o, "skip": s, "fail": b} for f, o, s, b in rows]}, True, out)
    else:
        out.write(f"{'family':<16}{'pass':>6}{'skip':>6}{'fail':>6}  status\n")
        for f, o, s, b in rows:
            out.write(f"{f:<16}{o:>6}{s:>6}{b:>6}  {'PASS' if b == 0 else 'FAIL'}\n")
    return OK if all_ok else FAIL


PAIR_FAMILIES = ("RightIsosceles", "Isosceles1", "Isosceles2", "Choudhry", "F321base", "F321double",
                 "F322base", "F322double", "F431base", "F431double", "F432double")


def _pair_params(args):
    _, names = families.FAMILIES[args.family]
    params = {}
    for name in names:
        v = getattr(args, name)
        if v is not None:
            params[name] = v
        elif name != "k":
            raise families.DomainError(f"--{name} is required for {args.family}")
    if args.family in ("RightIsosceles", "Isosceles1", "Isosceles2") and args.k is not None:
        params["k"] = args.k
    if args.alt_c:
        if not args.family.startswith("F321"):
            raise families.DomainError("--alt-c applies to F321base/F321double only")
        params["alt_c"] = True
    return params


def cmd_pair(args, out):
    params = _pair_params(args)
    res = families.run_family(args.family, params)
    if res is None:
        print(f"{args.family}: no rational solution at {params}", file=sys.stderr)
        return FAIL
    if args.json:
        _emit(res.to_json(), True, out)
        return OK
    tup = res.tuple
    out.write(f"family   {res.family}\n")
    for k, v in res.params.items():
        out.write(f"  {k:<6} {approx(v)}\n")
    out.write(f"system   {tup.system.value}\n")
    for name in ("a", "b", "r", "s", "t"):
        out.write(f"  {name:<6} {approx(getattr(tup, name))}\n")
    for i, w in enumerate(tup.w, 1):
        out.write(f"  w{i:<5} {approx(w)}\n")
    s1, s2 = res.pair
    out.write(f"sides1   ({', '.join(format_rat(x) for x in s1)})\n")
    if res.is_parallelogram:
        u, v = s2.side_lengths()
        out.write(f"parallelogram sides ({format_rat(u)}, {format_rat(v)}), height {format_rat(s2.height())}\n")
    else:
        out.write(f"sides2   ({', '.join(format_rat(x) for x in s2)})\n")
    out.write(f"perimeter {approx(sum(s1))}\n")
    out.write(f"area      {approx(tup.r * tup.t / 2)}\n")
    if res.notes:
        out.write(f"note     {res.notes}\n")
    return OK


def cmd_search(args, out):
    cfg = oracle.SearchConfig(args.max_perimeter, kind=args.kind, dedup=not args.no_dedup,
                              out=args.out, threads=args.threads)
    recs = oracle.find_pairs(cfg)
    if args.out is None:
        for r in recs:
            out.write(r.dumps() + "\n")
    elif args.json:
        _emit({"pairs": len(recs), "out": args.out}, True, out)
    else:
        out.write(f"{len(recs)} pairs written to {args.out}\n")
    return OK


def _case_params(args):
    params = {}
    if args.p is not None:
        params["p"] = args.p
    if args.m is not None:
        params["m"] = args.m
    return params


def cmd_curve(args, out):
    params = _case_params(args)
    c = elliptic.curve(args.case, params)
    Qp, Pp = elliptic.marked_points(args.case, params)
    found = elliptic.naive_point_search(c, args.height) if args.check_points else []
    marked_ok = elliptic.on_curve(c, Qp) and elliptic.on_curve(c, Pp)
    if args.json:
        obj = {"case": args.case, "curve": c.to_json(), "discriminant": format_rat(c.discriminant),
               "Q": Qp.to_json(), "P": Pp.to_json(), "marked_on_curve": marked_ok}
        if args.check_points:
            obj["points"] = [pt.to_json() for pt in found]
        _emit(obj, True, out)
        return OK if marked_ok else FAIL
    out.write(f"curve {args.case}: Y^2 = X^3 + A X + B\n")
    out.write(f"  A = {approx(c.A)}\n  B = {approx(c.B)}\n")
    out.write(f"  discriminant -(4A^3+27B^2) = {format_rat(c.discriminant)}\n")
    out.write(f"  Q = {Qp}  on curve: {elliptic.on_curve(c, Qp)}\n")
    out.write(f"  P = {Pp}  on curve: {elliptic.on_curve(c, Pp)}\n")
    if args.check_points:
        out.write(f"naive search, height {args.height}: {len(found)} points\n")
        for pt in found:
            try:
                x = elliptic.phi_inv(args.case, params, pt)
                tag = f"parameter {format_rat(x)}"
            except elliptic.ExcludedPointError:
                tag = "excluded"
            out.write(f"  {pt}  {tag}\n")
    return OK if marked_ok else FAIL


def cmd_residual(args, out):
    with open(args.file, encoding="utf-8") as fh:
        obj = json.load(fh)
    try:
        tup = SolutionTuple.from_json(obj)
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed tuple file: {e}") from None
    res = residuals(tup)
    ok = verify_solution(tup)
    if args.json:
        _emit({"residuals": [format_rat(x) for x in res], "verified": ok}, True, out)
    else:
        for i, x in enumerate(res, 1):
            out.write(f"R{i} = {format_rat(x)}\n")
        out.write("verified\n" if ok else "NOT a solution\n")
    return OK if ok else FAIL


def cmd_fermat(args, out):
    params = _case_params(args)
    model = elliptic.quartic_model(args.case, params)
    xs = elliptic.fermat_square_point(model.quartic, enumerate=True)
    if args.json:
        _emit({"case": args.case, "variable": model.variable,
               "quartic": [format_rat(c) for c in model.quartic.coeffs],
               "first": format_rat(xs[0]) if xs else None,
               "solutions": [format_rat(x) for x in xs]}, True, out)
        return OK if xs else FAIL
    out.write(f"quartic in {model.variable} (ascending): "
              f"[{', '.join(format_rat(c) for c in model.quartic.coeffs)}]\n")
    if not xs:
        out.write("no branch applies\n")
        return FAIL
    first = elliptic.fermat_square_point(model.quartic)
    out.write(f"first: {model.variable} = {approx(first)}\n")
    for x in xs:
        w = rat_sqrt(model.quartic(x))
        out.write(f"  {model.variable} = {format_rat(x)}, w = {format_rat(w)}\n")
    return OK


# --- parser --------------------------------------------------------------------------------

def _default_threads():
    env = os.environ.get("EQUIMETRIC_THREADS")
    if env is None:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def build_parser():
    ap = _Parser(prog="equimetric", description="Equal area and perimeter pairs via affine maps.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="exact JSON output only")

    p = sub.add_parser("verify-families", help="run every family over a parameter grid")
    p.add_argument("--grid", type=_positive_int, default=5)
    common(p)

    p = sub.add_parser("pair", help="print one family member")
    p.add_argument("--family", required=True, choices=PAIR_FAMILIES)
    for name in ("m", "p", "k", "R", "S"):
        p.add_argument(f"--{name}", type=_rat)
    p.add_argument("--alt-c", action="store_true", help="use the alternate c-root (F321 only)")
    common(p)

    p = sub.add_parser("search", help="brute-force pair search over integer Heron triangles")
    p.add_argument("--max-perimeter", type=_positive_int, required=True)
    p.add_argument("--out")
    p.add_argument("--threads", type=_positive_int, default=_default_threads())
    p.add_argument("--kind", choices=[k.value for k in oracle.Kind], default="TriangleTriangle")
    p.add_argument("--no-dedup", action="store_true")
    common(p)

    cases = [c.value for c in elliptic.Case]
    p = sub.add_parser("curve", help="curve data, marked points, naive point search")
    p.add_argument("--case", required=True, choices=cases)
    p.add_argument("--p", type=_rat)
    p.add_argument("--m", type=_rat)
    p.add_argument("--check-points", action="store_true")
    p.add_argument("--height", type=_positive_int, default=20)
    common(p)

    p = sub.add_parser("residual", help="exact residuals of a tuple JSON file")
    p.add_argument("--file", required=True)
    common(p)

    p = sub.add_parser("fermat", help="Fermat's method on a case quartic")
    p.add_argument("--case", required=True, choices=cases)
    p.add_argument("--p", type=_rat)
    p.add_argument("--m", type=_rat)
    common(p)
    return ap


COMMANDS = {"verify-families": cmd_verify_families, "pair": cmd_pair, "search": cmd_search,
            "curve": cmd_curve, "residual": cmd_residual, "fermat": cmd_fermat}


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args, out)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return IO_ERROR
    except families.FamilyVerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return FAIL
    except (ValueError, ZeroDivisionError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_FLAGS


def main():
    sys.exit(run())
