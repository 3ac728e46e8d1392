"""Command-line front end.

Exit codes: ``classify`` returns 0 for a nut graph, 1 for not-nut, 2 for bad
input; ``crosscheck`` returns 0 iff every method agreed; everything else
returns 0 on success and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import cyclo, enumerator
from .classify import classify
from .graphs import SpecError, build_graph, parse_spec
from .kernel import adjacency_matrix, kernel_basis
from .numtheory import divisors

EXIT_NUT, EXIT_NOT_NUT, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_classify(args, out) -> int:
    verdict = classify(parse_spec(args.spec))
    if args.format == "json":
        out.write(json.dumps(verdict.to_record()) + "\n")
    else:
        status = "nut" if verdict.is_nut else "not nut"
        extra = f", witness f={verdict.witness_f}" if verdict.witness_f is not None else ""
        out.write(f"{verdict.spec}: {status} ({verdict.reason_code}{extra})\n")
    return EXIT_NUT if verdict.is_nut else EXIT_NOT_NUT


def _check_table_range(n_max: int) -> None:
    if not enumerator.TABLE_MIN <= n_max <= enumerator.TABLE_MAX:
        raise UsageError(
            f"--max-order must lie in [{enumerator.TABLE_MIN}, {enumerator.TABLE_MAX}], got {n_max}"
        )


def cmd_enumerate(args, out) -> int:
    _check_table_range(args.max_order)
    rows = enumerator.table_rows(args.max_order, workers=args.workers)
    if args.format == "json":
        payload = [
            {
                "n": r.n,
                **dict(zip("CBNVZ", r.as_tuple())),
                "per_class": {t: dict(zip("CBNVZ", c.as_tuple())) for t, c in sorted(r.per_class.items())},
            }
            for r in rows
        ]
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "C", "B", "N", "V", "Z"])
    for r in rows:
        writer.writerow([r.n, *r.as_tuple()])
    out.write("\n")
    writer.writerow(["n", "class", "C", "B", "N", "V", "Z"])
    for r in rows:
        for tag in sorted(r.per_class):
            writer.writerow([r.n, tag, *r.per_class[tag].as_tuple()])
    return 0


def cmd_crosscheck(args, out) -> int:
    if not 6 <= args.max_order <= enumerator.TABLE_MAX:
        raise UsageError(f"--max-order must lie in [6, {enumerator.TABLE_MAX}], got {args.max_order}")
    report = enumerator.crosscheck(args.max_order, workers=args.workers)
    if args.format == "json":
        out.write(
            json.dumps(
                {
                    "max_order": report.n_max,
                    "specs_checked": report.specs_checked,
                    "per_order": {str(n): k for n, k in sorted(report.per_order.items())},
                    "pairs": dict(sorted(report.pair_counts.items())),
                    "disagreements": [{"spec": str(d.spec), "detail": d.detail} for d in report.disagreements],
                },
                indent=2,
            )
            + "\n"
        )
    else:
        out.write(f"connected specs checked: {report.specs_checked} (orders 6..{report.n_max})\n")
        for n, k in sorted(report.per_order.items()):
            out.write(f"  n={n}: {k}\n")
        for pair, k in sorted(report.pair_counts.items()):
            out.write(f"{pair}: {k} compared\n")
        out.write(f"disagreements: {len(report.disagreements)}\n")
        for d in report.disagreements:
            out.write(f"  {d.spec}: {d.detail}\n")
    return 0 if report.ok else 1


def cmd_residue_search(args, out) -> int:
    if args.f not in cyclo.B2_DIVISOR_SET:
        raise UsageError(f"f must be one of {cyclo.B2_DIVISOR_SET}, got {args.f}")
    triples = cyclo.residue_search(args.f, raw=args.raw)
    if args.format == "json":
        out.write(json.dumps([list(t) for t in triples]) + "\n")
    else:
        label = "a,b,c" if args.raw else "a+b,a-b,c"
        out.write(f"# f={args.f} ({label} mod f): {len(triples)} triples\n")
        for t in triples:
            out.write(",".join(map(str, t)) + "\n")
    return 0


def cmd_oracle(args, out) -> int:
    spec = parse_spec(args.spec)
    basis = kernel_basis(adjacency_matrix(build_graph(spec)))
    nut = basis.dim == 1 and all(basis.vectors[0])
    vectors = [[_fraction(x) for x in v] for v in basis.vectors]
    if args.format == "json":
        out.write(json.dumps({"spec": str(spec), "kernel_dim": basis.dim, "is_nut": nut, "basis": vectors}) + "\n")
    else:
        out.write(f"{spec}: kernel dimension {basis.dim}, nut={'yes' if nut else 'no'}\n")
        for v in vectors:
            out.write(" ".join(v) + "\n")
    return 0


def cmd_poly(args, out) -> int:
    spec = parse_spec(args.spec)
    if spec.class_tag == "B4":
        raise UsageError("B4 has no class polynomial")
    a, b = spec.a, spec.b
    if spec.class_tag == "B1":
        polys = {"R": cyclo.poly_R(a, b), "Q": cyclo.poly_Q(a, b)}
    elif spec.class_tag == "B2":
        polys = {"P": cyclo.poly_P(a, b, spec.c)}
    else:
        polys = {"B3": cyclo.poly_B3(a, b)}
    fs = [args.f] if args.f is not None else list(divisors(spec.m))
    if any(f < 1 for f in fs):
        raise UsageError("f must be positive")
    rows = {name: {f: cyclo.divides_cyclotomic(f, p) for f in fs} for name, p in polys.items()}
    if args.format == "json":
        out.write(
            json.dumps(
                {
                    "spec": str(spec),
                    "polynomials": {name: str(p) for name, p in polys.items()},
                    "divisible": {name: {str(f): d for f, d in r.items()} for name, r in rows.items()},
                }
            )
            + "\n"
        )
    else:
        for name, p in polys.items():
            out.write(f"{name}(x) = {p}\n")
            for f, d in rows[name].items():
                out.write(f"  Phi_{f} | {name}: {'yes' if d else 'no'}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbnut",
        description="Nut-graph classification of quartic bicirculants.",
        epilog="classify exits 0 for nut, 1 for not-nut, 2 for invalid input.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="closed-form verdict for a spec such as 'B2(24;4,6,3)'")
    p.add_argument("spec")
    p.set_defaults(func=cmd_classify)

    for name, func, help_text in (
        ("enumerate", cmd_enumerate, "counts of connected/non-bipartite/nut graphs per order"),
        ("crosscheck", cmd_crosscheck, "compare classifier, divisor test and kernel on all specs"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--max-order", type=int, required=True)
        p.add_argument(
            "--workers", type=int, default=None, help="worker processes (QBNUT_WORKERS overrides)"
        )
        p.set_defaults(func=func)

    p = sub.add_parser("residue-search", help="forbidden B2 residues for one f of the finite set")
    p.add_argument("f", type=int)
    p.add_argument("--raw", action="store_true", help="print hitting (a, b, c) instead of residues")
    p.set_defaults(func=cmd_residue_search)

    p = sub.add_parser("oracle", help="exact kernel of the adjacency matrix")
    p.add_argument("spec")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("poly", help="class polynomial and its cyclotomic divisors")
    p.add_argument("spec")
    p.add_argument("--f", type=int, default=None)
    p.set_defaults(func=cmd_poly)

    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    if args.verbose:
        import logging

        logging.basicConfig(level=logging.INFO if args.verbose == 1 else logging.DEBUG)
    try:
        return args.func(args, out)
    except (SpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
