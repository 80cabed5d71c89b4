"""Command-line interface.

Every library operation is a subcommand; ideals come from a file
argument ('-' for stdin) in the text grammar or JSON.  Output is text by
default, canonical JSON with --format json.  Exit codes: 0 success,
1 computation error (domain/budget), 2 usage or parse error, 3
verify-paper failure.
"""

import argparse
import sys

from . import betti as betti_mod
from . import closure as closure_mod
from . import decompose as decompose_mod
from . import family as family_mod
from .core import MonomialIdeal, colon_ideal, colon_mon, radical
from .errors import (AmbientMismatchError, BudgetError, DimensionError,
                     DomainError, ParseError)
from .ioformats import (format_ideal_json, format_ideal_text,
                        format_monomial, format_prime, parse_ideal,
                        parse_monomial, primes_to_obj, to_json)
from .verify import run_verify

EXIT_COMPUTE = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3

DEFAULT_SPLIT_BUDGET = 100000
DEFAULT_BOX_BUDGET = 10 ** 7
DEFAULT_GEN_BUDGET = 20


def _read_ideal(path):
    if path == "-":
        return parse_ideal(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def _emit_ideal(I, args):
    if args.format == "json":
        sys.stdout.write(format_ideal_json(I))
    else:
        sys.stdout.write(format_ideal_text(I))


def _emit(obj, args, text):
    if args.format == "json":
        sys.stdout.write(to_json(obj))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_primes(primes, I, args):
    if args.format == "json":
        sys.stdout.write(to_json({"vars": list(I.vars),
                                  "primes": primes_to_obj(primes, I.vars)}))
    else:
        lines = [format_prime(p, I.vars) for p in
                 sorted(primes, key=lambda p: (len(p), sorted(p)))]
        sys.stdout.write("\n".join(lines) + "\n" if lines else "")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="monideal",
        description="Exact monomial-ideal computations: integral closures, "
                    "primary decompositions, Betti numbers.")
    ap.add_argument("--format", choices=("text", "json"), default="text",
                    help="output format (default text)")
    ap.add_argument("--budget", type=int, default=None,
                    help="override enumeration/splitting budgets")
    sub = ap.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("ideal", help="ideal file, or '-' for stdin")
        return sp

    ideal_cmd("closure", "integral closure via Newton-polyhedron lattice points")
    sp = ideal_cmd("decompose", "irreducible or primary decomposition")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--irreducible", action="store_true")
    mode.add_argument("--primary", action="store_true")
    ideal_cmd("ass", "associated primes")
    ideal_cmd("min-primes", "minimal primes")
    ideal_cmd("embedded", "embedded primes")
    sp = ideal_cmd("colon", "ideal colon (quotient)")
    by = sp.add_mutually_exclusive_group(required=True)
    by.add_argument("--by", metavar="MONOMIAL", help="colon by one monomial")
    by.add_argument("--by-ideal", metavar="FILE", help="colon by an ideal")
    ideal_cmd("radical", "radical of the ideal")
    ideal_cmd("codim", "codimension (height)")
    ideal_cmd("betti", "multigraded Betti numbers of the quotient")
    ideal_cmd("pd", "projective dimension of the quotient")
    ideal_cmd("cm", "Cohen-Macaulay test (pd = codim)")
    ideal_cmd("generic", "strong genericity test")
    ideal_cmd("closed", "is the ideal integrally closed")

    sp = sub.add_parser("family", help="the built-in two-parameter family")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    what = sp.add_mutually_exclusive_group()
    what.add_argument("--closure", action="store_true",
                      help="integral closure instead of the ideal")
    what.add_argument("--delta", action="store_true",
                      help="closed-form closure generator set")

    sp = sub.add_parser("reduce", help="divisor in the closed-form set "
                                       "for a polyhedron lattice point")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--point", required=True, metavar="a,b,c",
                    help="comma-separated exponents")

    sp = sub.add_parser("verify-paper", help="run the whole desk-scale "
                                             "verification suite")
    sp.add_argument("--nmax", type=int, default=5)
    sp.add_argument("--tmax", type=int, default=3)

    sp = sub.add_parser("figure", help="triangle figure of closure "
                                       "generators for n = 3")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--out", help="image output path (.svg or .png)")
    sp.add_argument("--csv", help="CSV output path")
    return ap


def _budgets(args):
    split = args.budget if args.budget else DEFAULT_SPLIT_BUDGET
    box = args.budget if args.budget else DEFAULT_BOX_BUDGET
    gens = args.budget if args.budget else DEFAULT_GEN_BUDGET
    return split, box, gens


def _run(args):
    split_budget, box_budget, gen_budget = _budgets(args)

    if args.command == "family":
        if args.n < 3 or args.t < 1:
            raise UsageError("family requires --n >= 3 and --t >= 1")
        p = family_mod.FamilyParams(args.n, args.t)
        if args.closure:
            I = closure_mod.closure_generators(family_mod.family_ideal(p),
                                               box_budget)
        elif args.delta:
            I = MonomialIdeal.make(family_mod.family_ideal(p).vars,
                                   family_mod.delta_set(p))
        else:
            I = family_mod.family_ideal(p)
        _emit_ideal(I, args)
        return 0

    if args.command == "reduce":
        if args.n < 3 or args.t < 1:
            raise UsageError("reduce requires --n >= 3 and --t >= 1")
        p = family_mod.FamilyParams(args.n, args.t)
        try:
            point = tuple(int(x) for x in args.point.split(","))
        except ValueError:
            raise UsageError("--point must be comma-separated integers")
        d = family_mod.reduce_to_delta(point, p)
        _emit({"point": list(d)}, args,
              format_monomial(d, family_mod.family_ideal(p).vars))
        return 0

    if args.command == "verify-paper":
        if args.nmax < 3 or args.tmax < 1:
            raise UsageError("verify-paper requires --nmax >= 3 and --tmax >= 1")
        report = run_verify(args.nmax, args.tmax)
        sys.stdout.write(to_json(report.to_obj()))
        return 0 if report.overall_pass else EXIT_VERIFY

    if args.command == "figure":
        if args.n != 3:
            raise UsageError("the figure is only defined for --n 3")
        if args.t < 1:
            raise UsageError("figure requires --t >= 1")
        if not args.out and not args.csv:
            raise UsageError("figure needs --out and/or --csv")
        from . import figures
        points = None
        if args.csv:
            points = figures.write_csv(args.t, args.csv)
        if args.out:
            points = figures.render_figure(args.t, args.out)
        summary = {"points": len(points),
                   "vertex": sum(1 for _, k in points if k == "vertex"),
                   "interior": sum(1 for _, k in points if k == "interior")}
        _emit(summary, args,
              "%(points)d points (%(vertex)d vertex, %(interior)d interior)"
              % summary)
        return 0

    I = _read_ideal(args.ideal)

    if args.command == "closure":
        _emit_ideal(closure_mod.closure_generators(I, box_budget), args)
    elif args.command == "closed":
        ok = closure_mod.is_integrally_closed(I, box_budget)
        _emit({"integrally_closed": ok}, args, str(ok).lower())
    elif args.command == "decompose":
        if args.irreducible:
            comps = decompose_mod.irreducible_decomposition(I, split_budget)
            if args.format == "json":
                obj = {"vars": list(I.vars),
                       "components": [{I.vars[i]: e for i, e in c.entries}
                                      for c in comps]}
                sys.stdout.write(to_json(obj))
            else:
                lines = ["<" + ", ".join(
                    format_monomial(tuple(e if j == i else 0
                                          for j in range(I.nvars)), I.vars)
                    for i, e in c.entries) + ">" for c in comps]
                sys.stdout.write("\n".join(lines) + "\n")
        else:
            comps = decompose_mod.primary_decomposition(I, split_budget)
            if args.format == "json":
                obj = {"vars": list(I.vars),
                       "components": [[list(g) for g in c.gens] for c in comps]}
                sys.stdout.write(to_json(obj))
            else:
                lines = ["<" + ", ".join(format_monomial(g, I.vars)
                                         for g in c.gens) + ">" for c in comps]
                sys.stdout.write("\n".join(lines) + "\n")
    elif args.command == "ass":
        _emit_primes(decompose_mod.associated_primes(I, split_budget), I, args)
    elif args.command == "min-primes":
        _emit_primes(decompose_mod.minimal_primes(I, split_budget), I, args)
    elif args.command == "embedded":
        _emit_primes(decompose_mod.embedded_primes(I, split_budget), I, args)
    elif args.command == "colon":
        if args.by is not None:
            m = parse_monomial(args.by, I.vars)
            _emit_ideal(colon_mon(I, m), args)
        else:
            J = _read_ideal(args.by_ideal)
            _emit_ideal(colon_ideal(I, J), args)
    elif args.command == "radical":
        _emit_ideal(radical(I), args)
    elif args.command == "codim":
        c = decompose_mod.codim(I, split_budget)
        _emit({"codim": c}, args, str(c))
    elif args.command == "betti":
        table = betti_mod.betti_table(I, gen_budget)
        entries = sorted(((i, list(a), r) for (i, a), r in table.entries.items()),
                         key=lambda e: (e[0], e[1]))
        if args.format == "json":
            sys.stdout.write(to_json({
                "totals": list(table.totals()),
                "entries": [{"i": i, "degree": a, "rank": r}
                            for i, a, r in entries]}))
        else:
            lines = ["totals: " + " ".join(map(str, table.totals()))]
            lines += ["beta_%d,%s = %d" % (i, tuple(a), r)
                      for i, a, r in entries]
            sys.stdout.write("\n".join(lines) + "\n")
    elif args.command == "pd":
        pd = betti_mod.projective_dimension(I, gen_budget)
        _emit({"pd": pd}, args, str(pd))
    elif args.command == "cm":
        pd = betti_mod.projective_dimension(I, gen_budget)
        c = decompose_mod.codim(I, split_budget)
        _emit({"cohen_macaulay": pd == c, "pd": pd, "codim": c}, args,
              "%s\npd %d, codim %d" % (str(pd == c).lower(), pd, c))
    elif args.command == "generic":
        ok = family_mod.is_strongly_generic(I)
        _emit({"strongly_generic": ok}, args, str(ok).lower())
    else:  # pragma: no cover
        raise UsageError("unknown command %r" % args.command)
    return 0


class UsageError(Exception):
    pass


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, BudgetError, DimensionError, AmbientMismatchError,
            ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
