"""Command-line front end.

Thin shell over the library: every subcommand prints the result of the
corresponding library call, as plain text by default or as one JSON object
with --json.  plot-data emits CSV (exact rationals as num/den columns) and
can additionally render a matplotlib figure to a file.
"""

import argparse
import csv
import json
import sys

from . import mcnugget
from .errors import MonoidError
from .factorizations import (
    delta_set,
    elasticity,
    elasticity_profile,
    factorizations,
    length_set,
    monoid_delta_set,
    monoid_elasticity,
    unique_factorization_elements,
)
from .monoid import NumericalMonoid
from .omega import bullets, omega, omega_profile, prime_witness
from .verify import run_checks

DEFAULT_GENS = (6, 9, 20)


def _gens_arg(text):
    try:
        gens = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}")
    if not gens:
        raise argparse.ArgumentTypeError("no generators given")
    return gens


def _vec(coords):
    return "(" + ",".join(str(c) for c in coords) + ")"


def _emit(args, result, text, element=None):
    if getattr(args, "json", False):
        payload = {"command": args.command, "gens": list(args.gens),
                   "input": element, "result": result}
        print(json.dumps(payload))
    else:
        print(text)
    return 0


def _cmd_member(args):
    m = NumericalMonoid(*args.gens)
    ok = m.contains(args.element)
    return _emit(args, ok, "true" if ok else "false", args.element)


def _cmd_gaps(args):
    gaps = NumericalMonoid(*args.gens).gaps()
    return _emit(args, gaps, " ".join(map(str, gaps)))


def _cmd_frobenius(args):
    f = NumericalMonoid(*args.gens).frobenius
    return _emit(args, f, str(f))


def _cmd_factor(args):
    zs = factorizations(NumericalMonoid(*args.gens), args.element)
    text = " ".join(_vec(c) for c in zs) if zs else "NONE"
    return _emit(args, [list(c) for c in zs], text, args.element)


def _cmd_lengths(args):
    ls = length_set(NumericalMonoid(*args.gens), args.element)
    return _emit(args, list(ls.lengths), " ".join(map(str, ls.lengths)),
                 args.element)


def _cmd_elasticity(args):
    m = NumericalMonoid(*args.gens)
    if args.element is None:
        rho = monoid_elasticity(m)
    else:
        rho = elasticity(m, args.element)
    return _emit(args, {"num": rho.numerator, "den": rho.denominator},
                 str(rho), args.element)


def _cmd_delta(args):
    d = delta_set(NumericalMonoid(*args.gens), args.element)
    return _emit(args, list(d.gaps), " ".join(map(str, d.gaps)), args.element)


def _cmd_delta_monoid(args):
    d = monoid_delta_set(NumericalMonoid(*args.gens))
    return _emit(args, list(d.gaps), " ".join(map(str, d.gaps)))


def _cmd_omega(args):
    w = omega(NumericalMonoid(*args.gens), args.element)
    return _emit(args, w, str(w), args.element)


def _cmd_bullets(args):
    bl = bullets(NumericalMonoid(*args.gens), args.element)
    return _emit(args,
                 [{"coords": list(b.coords), "length": b.length} for b in bl],
                 " ".join(_vec(b.coords) for b in bl), args.element)


def _cmd_unique(args):
    vals = unique_factorization_elements(NumericalMonoid(*args.gens),
                                         args.limit)
    return _emit(args, vals, " ".join(map(str, vals)), args.limit)


def _cmd_witness(args):
    y, z = prime_witness(NumericalMonoid(*args.gens), args.element)
    return _emit(args, [y, z], f"{y} {z}", args.element)


def _cmd_table(args):
    if tuple(args.gens) != DEFAULT_GENS:
        raise MonoidError("reference tables only exist for generators 6,9,20")
    if args.number == 1:
        rows = mcnugget.table_expansions()
        lines = []
        payload = {}
        for x in sorted(rows):
            zs = rows[x]
            lines.append(f"{x:>2}  " +
                         (" ".join(_vec(c) for c in zs) if zs else "NONE"))
            payload[str(x)] = [list(c) for c in zs]
    else:
        rows = mcnugget.table_length_sets()
        lines = []
        payload = {}
        for x in sorted(rows):
            ls = rows[x]
            body = "{" + ",".join(map(str, ls.lengths)) + "}"
            lines.append(f"{x:>2}  {body}  {ls.min}  {ls.max}")
            payload[str(x)] = {"lengths": list(ls.lengths),
                               "min": ls.min, "max": ls.max}
    return _emit(args, payload, "\n".join(lines), args.number)


def _cmd_plot_data(args):
    m = NumericalMonoid(*args.gens)
    if args.kind == "elasticity":
        rows = elasticity_profile(m, args.max)
        header = ["n", "rho_num", "rho_den"]
        records = [(n, r.numerator, r.denominator) for n, r in rows]
    else:
        rows = omega_profile(m, args.max)
        header = ["n", "omega"]
        records = list(rows)

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(records)
    finally:
        if args.out:
            out.close()

    if args.fig:
        from . import plotting

        if args.kind == "elasticity":
            plotting.save_elasticity_figure(rows, args.fig,
                                            ceiling=monoid_elasticity(m))
        else:
            plotting.save_omega_figure(rows, args.fig)
    return 0


def _cmd_verify(args):
    results = run_checks()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gens", type=_gens_arg, default=DEFAULT_GENS,
                        metavar="A,B,C", help="generators (default 6,9,20)")
    jsonable = argparse.ArgumentParser(add_help=False)
    jsonable.add_argument("--json", action="store_true",
                          help="emit one JSON object instead of text")

    parser = argparse.ArgumentParser(
        prog="numonoid",
        description="Exact arithmetic for numerical monoids "
                    "(default: the Chicken McNugget monoid <6,9,20>).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, element=None, parents=(common, jsonable)):
        p = sub.add_parser(name, parents=list(parents), help=help_)
        if element == "required":
            p.add_argument("element", type=int)
        elif element == "optional":
            p.add_argument("element", type=int, nargs="?", default=None)
        p.set_defaults(func=func)
        return p

    add("member", _cmd_member, "is the element in the monoid", "required")
    add("gaps", _cmd_gaps, "every nonnegative integer outside the monoid")
    add("frobenius", _cmd_frobenius, "largest integer outside the monoid")
    add("factor", _cmd_factor, "all factorizations of the element", "required")
    add("lengths", _cmd_lengths, "set of factorization lengths", "required")
    add("elasticity", _cmd_elasticity,
        "elasticity of the element (or of the monoid if omitted)", "optional")
    add("delta", _cmd_delta, "delta set of the element", "required")
    add("delta-monoid", _cmd_delta_monoid, "delta set of the whole monoid")
    add("omega", _cmd_omega, "omega-primality of the element", "required")
    add("bullets", _cmd_bullets, "all bullets of the element", "required")
    p = add("unique", _cmd_unique, "members with a single factorization")
    p.add_argument("limit", type=int)
    add("witness", _cmd_witness,
        "a sum the element divides without dividing either part", "required")
    p = add("table", _cmd_table, "print a bundled reference table")
    p.add_argument("number", type=int, choices=(1, 2))

    p = sub.add_parser("plot-data", parents=[common],
                       help="emit CSV scatter data (and optionally a figure)")
    p.add_argument("kind", choices=("elasticity", "omega"))
    p.add_argument("--max", type=int, required=True, metavar="N",
                   help="largest element to include")
    p.add_argument("--out", metavar="FILE", help="write the CSV here instead of stdout")
    p.add_argument("--fig", metavar="FILE", help="also render a figure to this file")
    p.set_defaults(func=_cmd_plot_data)

    p = sub.add_parser("verify", help="run the per-theorem property checks")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MonoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
