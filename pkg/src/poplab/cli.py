"""Command-line front end.

Exit codes: 0 success (or all checks pass), 1 a verification check failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as cat
from .bijections import (
    BijectionError, HypercubeFace, avoider_to_cycles, cycles_to_avoider, face_to_good_perm,
    format_cycles, format_perm, good_perm_to_face, parse_cycles, parse_perm, standard_cycles,
)
from .dsl import load_pattern, load_poset
from .pattern import PatternError
from .perms import (
    DistributionTable, EnumerationLimitError, avoider_sequence, distribution, from_cycles,
    nonoverlap_distribution, to_bfile,
)
from .poly import Poly
from .poset import PosetError
from .series import SeriesError, egf_counts, gf_counts
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _poset(args):
    return load_poset(args.poset) if args.poset else None


def _restrictions(args, poset):
    out = []
    for text in args.restrict or []:
        # classical patterns first; fall back to the --poset letters
        try:
            out.append(load_pattern(text))
        except (PatternError, PosetError):
            out.append(load_pattern(text, poset))
    return out


def _emit_sequence(values, fmt, offset=1):
    if fmt == "json":
        return json.dumps({"offset": offset, "values": values}) + "\n"
    if fmt == "csv":
        return "n,a(n)\n" + "".join(f"{offset + i},{v}\n" for i, v in enumerate(values))
    return to_bfile(values, offset)


def cmd_count(args) -> int:
    poset = _poset(args)
    p = load_pattern(args.pattern, poset)
    pats = [p, *_restrictions(args, poset)]
    values = avoider_sequence(pats, args.n, jobs=args.jobs)
    sys.stdout.write(_emit_sequence(values, args.format))
    return 0


def cmd_distribution(args) -> int:
    poset = _poset(args)
    p = load_pattern(args.pattern, poset)
    restrict = _restrictions(args, poset)
    fn = nonoverlap_distribution if args.stat == "nonoverlap" else distribution
    tables: list[DistributionTable] = [fn(p, n, restrict, jobs=args.jobs) for n in range(args.n + 1)]
    if args.format == "json":
        print(json.dumps([json.loads(t.to_json()) for t in tables]))
    else:
        lines = [f"n,{args.stat},count"]
        for t in tables:
            lines += [f"{t.n},{k[0]},{c}" for k, c in t.counts.items()]
        print("\n".join(lines))
    return 0


def _parse_params(items) -> dict:
    params = {}
    for item in items or []:
        for part in item.split(","):
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep or not key:
                raise UsageError(f"bad --params entry {part!r}; use key=value")
            params[key.strip()] = value.strip()
    return params


def _coeff_text(c) -> str:
    if isinstance(c, Poly):
        return str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def cmd_series(args) -> int:
    params = _parse_params(args.params)
    y = Fraction(args.y) if args.y is not None else None
    try:
        f = cat.catalog(args.form, args.order, y=y, **params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.form}: {exc}") from None
    if args.as_counts:
        coeffs = gf_counts(f) if cat.is_ordinary(args.form, **params) else egf_counts(f)
    else:
        coeffs = f.coeffs
    if args.format == "json":
        print(json.dumps([_coeff_text(c) for c in coeffs]))
    else:
        print("\n".join(f"{n}: {_coeff_text(c)}" for n, c in enumerate(coeffs)))
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, cap=args.cap, slow=args.slow)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.lines())
    return 0 if report.passed else 1


def cmd_bijection(args) -> int:
    if args.map == "faces":
        if args.inverse:
            pi = parse_perm(args.input)
            if len(pi) > 11:
                raise UsageError("the inverse faces map searches every face; use at most 11 letters")
            print(good_perm_to_face(pi))
        else:
            print(format_perm(face_to_good_perm(HypercubeFace.parse(args.input))))
        return 0
    if args.k is None:
        raise UsageError("bijection cycles needs --k")
    if args.inverse:
        pi = avoider_to_cycles(parse_perm(args.input), args.k)
        print(format_cycles(standard_cycles(pi)))
    else:
        pi = from_cycles(parse_cycles(args.input))
        print(format_perm(cycles_to_avoider(pi, args.k)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poplab", description="Partially ordered patterns in permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def pattern_args(sp):
        sp.add_argument("--pattern", required=True, help="pattern text, or @file.json")
        sp.add_argument("--poset", help="poset JSON (@name looks in the bundled data too)")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--restrict", nargs="+", metavar="PATTERN",
                        help="also avoid these patterns (classical text, or letters of --poset)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")

    sp = sub.add_parser("count", help="avoider counts for n = 1..N")
    pattern_args(sp)
    sp.add_argument("--format", choices=("bfile", "csv", "json"), default="bfile")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("distribution", help="permutations by number of occurrences, n = 0..N")
    pattern_args(sp)
    sp.add_argument("--stat", choices=("occurrences", "nonoverlap"), default="occurrences")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_distribution)

    sp = sub.add_parser("series", help="expand a catalog generating function")
    sp.add_argument("--form", required=True, help="C1..C20")
    sp.add_argument("--params", nargs="*", help="key=value pairs, e.g. k=2 l=1")
    sp.add_argument("--order", type=int, default=cat.DEFAULT_ORDER)
    sp.add_argument("--y", help="substitute a rational value for y")
    sp.add_argument("--as-counts", action="store_true", help="scale by n! for EGFs and check integrality")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=(*SUITES, "all"))
    sp.add_argument("--slow", action="store_true", help="include n = 9 for the open-problem sequences")
    sp.add_argument("--cap", type=int, help="cap every enumeration range at this n")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bijection", help="apply a bijection")
    sp.add_argument("map", choices=("cycles", "faces"))
    sp.add_argument("--input", required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--inverse", action="store_true", help="avoider to cycle form, or good permutation to face (by search)")
    sp.set_defaults(func=cmd_bijection)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PatternError, PosetError, BijectionError, SeriesError, EnumerationLimitError,
            cat.UnknownFormError, FileNotFoundError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"poplab: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
