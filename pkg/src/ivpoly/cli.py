"""``ivpoly`` command-line interface.

Exit codes: 0 success / member, 1 negative verdict, 2 usage or data error,
3 enumeration budget exceeded.  Errors are printed to stderr as JSON with a
machine-readable ``code``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import BudgetExceeded, IvpolyError, NotIntegerValuedAtMatrix, ParseError
from .exact_rings import RationalPolyRep, canonicalize, parse_poly_arg
from .images import PadicMatrix, image_at, padic_image, reduced_representative
from .matrices import IntMatrix, parse_matrix
from .matrix_poly import MatCoeffPoly, entry_scalarize, member_matrix_poly, phi
from .membership import (
    ORACLE_FUNCS,
    EnumerationBudget,
    generate_family,
    irreducible_lift,
    is_member,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2, 3

ORACLE_FLAGS = {"div": "divisibility", "comp": "companion", "irr": "irreducible-companion"}

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        sys.exit(EXIT_ERROR)


def _emit_error(code, message, **extra):
    payload = {"code": code, "message": message}
    payload.update(extra)
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def _dump(obj, fmt, text):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _rational(args) -> RationalPolyRep:
    return canonicalize(parse_poly_arg(args.poly), args.den)


def _budget(args) -> EnumerationBudget:
    return EnumerationBudget(args.budget) if args.budget else EnumerationBudget.from_env()


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _cmd_member(args):
    f = _rational(args)
    names = list(ORACLE_FLAGS.values()) if args.oracle == "all" else [ORACLE_FLAGS[args.oracle]]
    verdicts = [
        ORACLE_FUNCS[name](f, args.n, _budget(args), args.all_witnesses, args.jobs)
        for name in names
    ]
    if len({v.member for v in verdicts}) != 1:
        _emit_error("oracle_disagreement", "membership oracles disagree",
                    verdicts=[v.to_json() for v in verdicts])
        return EXIT_ERROR
    v = verdicts[0]
    report = v.to_json()
    if args.oracle == "all":
        report["oracle"] = "all"
        report["oracles"] = {x.oracle: x.to_json() for x in verdicts}
    text = f"{f} is {'a member' if v.member else 'not a member'} of Int(M_{args.n}(Z))"
    if v.witness is not None:
        text += f"\nwitness: {v.witness}"
    if v.witnesses:
        text += "\nall witnesses: " + ", ".join(str(w) for w in v.witnesses)
    text += f"\noracle: {report['oracle']}  cases: {v.cases}"
    _dump(report, args.format, text)
    return EXIT_OK if v.member else EXIT_NEGATIVE


def _cmd_lift(args):
    h = parse_poly_arg(args.poly)
    if h.degree != args.n:
        raise ParseError(f"{h} has degree {h.degree}, expected {args.n}")
    lift = irreducible_lift(h, args.d)
    report = {"k": lift.poly.to_json(), "p": lift.prime, "d": args.d}
    _dump(report, args.format, f"{lift.poly}  (irreducible mod {lift.prime})")
    return EXIT_OK


def _matrix_arg(args) -> IntMatrix:
    C = parse_matrix(args.matrix)
    if args.n is not None and C.n != args.n:
        raise ParseError(f"matrix is {C.n}x{C.n} but --n {args.n}")
    return C


def _check_member(f, n, args):
    if args.verify and not is_member(f, n, _budget(args)):
        _emit_error("not_member", f"{f} is not in Int(M_{n}(Z))")
        return False
    return True


def _cmd_image(args):
    f = _rational(args)
    C = _matrix_arg(args)
    if not _check_member(f, C.n, args):
        return EXIT_NEGATIVE
    r = reduced_representative(f, C)
    img = image_at(f, C)
    report = {"r": r.to_json(), "image": img.to_json()}
    _dump(report, args.format, f"r = {r}\nf(C) = {img}")
    return EXIT_OK


def _cmd_padic(args):
    f = _rational(args)
    C = _matrix_arg(args)
    P = PadicMatrix.from_int(C, args.p, args.prec_in)
    if not _check_member(f, C.n, args):
        return EXIT_NEGATIVE
    s = padic_image(f, P, args.prec_out)
    report = {"s": s.to_json()}
    _dump(report, args.format, f"s = {s.coeffs} mod {args.p}^{args.prec_out}")
    return EXIT_OK


def _cmd_generate(args):
    f = generate_family(args.p, args.n, _budget(args))
    _dump({"f": f.to_json(), "n": args.n, "p": args.p}, args.format, str(f))
    return EXIT_OK


def _cmd_member_matrix(args):
    F = MatCoeffPoly.from_json(_load_json(args.file))
    rep = member_matrix_poly(F, _budget(args), args.jobs)
    text = "member" if rep.member else f"not a member: entry {rep.entry} fails"
    if rep.verdict is not None:
        text += f", witness {rep.verdict.witness}"
    _dump(rep.to_json(), args.format, text)
    return EXIT_OK if rep.member else EXIT_NEGATIVE


def _cmd_phi(args):
    F = MatCoeffPoly.from_json(_load_json(args.file))
    M = phi(F)
    text = "\n".join("  ".join(str(e) for e in row) for row in M.entries)
    _dump(M.to_json(), args.format, text)
    return EXIT_OK


def _cmd_scalarize(args):
    F = MatCoeffPoly.from_json(_load_json(args.file))
    c = entry_scalarize(F, args.j, args.k)
    _dump({"entry": [args.j, args.k], "poly": c.to_json()}, args.format, str(c))
    return EXIT_OK


def _cmd_selftest(args):
    from .acceptance import run_all

    results = run_all(quick=not args.full)
    if args.format == "json":
        print(json.dumps(
            [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            sort_keys=True,
        ))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ivpoly",
        description="Integer-valued polynomials on n x n integer matrices.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, budget=True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help="max residue classes to enumerate (env IVPOLY_BUDGET)")
            p.add_argument("--jobs", type=int, default=1)

    def poly(p):
        p.add_argument("--poly", required=True, help='expression like "x^2-x" or {"coeffs":[...]}')
        p.add_argument("--den", type=int, default=1)

    p = sub.add_parser("member", help="decide f in Int(M_n(Z))")
    p.add_argument("--n", type=int, required=True)
    poly(p)
    p.add_argument("--oracle", choices=("div", "comp", "irr", "all"), default="div")
    p.add_argument("--all-witnesses", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("lift-irreducible", help="irreducible monic lift of h mod d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--poly", required=True)
    common(p, budget=False)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("image", help="f(C) and its reduced representative")
    p.add_argument("--n", type=int, default=None)
    poly(p)
    p.add_argument("--matrix", required=True, help='"0 -1 ; 1 0" or matrix JSON')
    p.add_argument("--verify", action="store_true", help="re-check membership first")
    common(p)
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("padic-image", help="f(C) over Z_p at finite precision")
    p.add_argument("--n", type=int, default=None)
    poly(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prec-in", type=int, required=True)
    p.add_argument("--prec-out", type=int, required=True)
    p.add_argument("--matrix-mod", dest="matrix", required=True)
    p.add_argument("--verify", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_padic)

    p = sub.add_parser("generate", help="prod (x^(p^i) - x) / p, a member for dimension n")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    common(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("member-matrix", help="membership of a matrix-coefficient polynomial")
    p.add_argument("--file", required=True)
    common(p)
    p.set_defaults(func=_cmd_member_matrix)

    p = sub.add_parser("phi", help="matrix-coefficient polynomial to matrix of polynomials")
    p.add_argument("--file", required=True)
    common(p, budget=False)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("scalarize", help="entry c_jk of phi(F), sandwich-checked")
    p.add_argument("--file", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p, budget=False)
    p.set_defaults(func=_cmd_scalarize)

    p = sub.add_parser("selftest", help="fast acceptance subset")
    p.add_argument("--full", action="store_true", help="run at full acceptance size")
    common(p, budget=False)
    p.set_defaults(func=_cmd_selftest)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    for name in ("n", "budget", "jobs"):
        val = getattr(args, name, None)
        if val is not None and val < 1:
            _emit_error("usage", f"--{name} must be >= 1")
            return EXIT_ERROR
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        _emit_error(exc.code, str(exc), cases=exc.cases, max_cases=exc.max_cases)
        return EXIT_BUDGET
    except NotIntegerValuedAtMatrix as exc:
        _emit_error(exc.code, str(exc), matrix=exc.matrix.to_json(),
                    char_poly=exc.char_poly.to_json())
        return EXIT_NEGATIVE
    except IvpolyError as exc:
        _emit_error(exc.code, str(exc))
        return EXIT_ERROR
    except (ValueError, ArithmeticError) as exc:
        _emit_error("invalid_input", str(exc))
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
