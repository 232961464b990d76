"""Command-line front end.

Exit status: 0 yes/success, 1 verified no, 2 promise violated or structural
rejection, 3 usage or format error, 4 resource limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cutcone import (
    DEFAULT_MAX_N,
    Feasible,
    cutcone_membership,
    format_decomposition,
    format_farkas,
    parse_decomposition,
    parse_farkas,
    verify_decomposition,
    verify_farkas,
)
from .embedding import embed_from_decomposition
from .errors import FormatError, MetricError, ResourceLimitError, StructuralError
from .metric import format_metric, format_points, parse_metric, parse_points, validate
from .realizer import (
    DEFAULT_BUDGET,
    Exhausted,
    NotRealizableStructural,
    Realization,
    format_realization,
    realize_l1_sig,
)
from .realizer import DEFAULT_MAX_N as REALIZE_MAX_N
from .reduction import (
    No,
    PromiseViolated,
    Yes,
    format_instance,
    parse_instance,
    reduce_a_to_b,
    reduce_b_to_a,
    solve_problem_b,
)
from .sig import format_graph, parse_graph, sig_from_metric, sig_from_points

EXIT_YES, EXIT_NO, EXIT_REJECTED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, certificate: str | None = None) -> None:
    sys.stdout.write(text)
    if certificate:
        Path(certificate).write_text(text, encoding="utf-8")


def cmd_validate(args):
    d = parse_metric(_read(args.metric))
    report = validate(d, args.mode)
    if report.valid:
        print(f"valid {args.mode}")
        return EXIT_YES
    for v in report.violations:
        print(v)
    return EXIT_NO


def cmd_sig_points(args):
    X = parse_points(_read(args.points))
    _emit(format_graph(sig_from_points(X, args.p)))
    return EXIT_YES


def cmd_sig_metric(args):
    d = parse_metric(_read(args.metric))
    _emit(format_graph(sig_from_metric(d)))
    return EXIT_YES


def cmd_cutcone_check(args):
    d = parse_metric(_read(args.metric))
    result = cutcone_membership(d, max_n=args.max_n)
    if isinstance(result, Feasible):
        _emit(format_decomposition(result.decomposition), args.certificate)
        return EXIT_YES
    _emit(format_farkas(result.certificate), args.certificate)
    return EXIT_NO


def cmd_embed(args):
    d = parse_metric(_read(args.metric))
    result = cutcone_membership(d, max_n=args.max_n)
    if not isinstance(result, Feasible):
        _emit(format_farkas(result.certificate), args.certificate)
        return EXIT_NO
    sys.stdout.write(format_points(embed_from_decomposition(result.decomposition)))
    if args.certificate:
        Path(args.certificate).write_text(format_decomposition(result.decomposition), encoding="utf-8")
    return EXIT_YES


def cmd_reduce_ab(args):
    d = parse_metric(_read(args.metric))
    report = validate(d, "metric")
    if not report.valid:
        raise MetricError(f"not a proper metric: {report.violations[0]}")
    _emit(format_instance(reduce_a_to_b(d)))
    return EXIT_YES


def cmd_reduce_ba(args):
    _emit(format_metric(reduce_b_to_a(parse_instance(_read(args.instance)))))
    return EXIT_YES


def cmd_solve_b(args):
    out = solve_problem_b(parse_instance(_read(args.instance)), max_n=args.max_n)
    if isinstance(out, PromiseViolated):
        print(f"promise violated: {out.reason}", file=sys.stderr)
        return EXIT_REJECTED
    if isinstance(out, Yes):
        _emit(format_decomposition(out.decomposition), args.certificate)
        return EXIT_YES
    assert isinstance(out, No)
    _emit(format_farkas(out.certificate), args.certificate)
    return EXIT_NO


def cmd_realize(args):
    G = parse_graph(_read(args.graph))
    out = realize_l1_sig(G, args.budget, max_n=args.max_n)
    if isinstance(out, Realization):
        _emit(format_realization(out), args.certificate)
        return EXIT_YES
    if isinstance(out, NotRealizableStructural):
        print(f"isolated vertices: {' '.join(map(str, out.isolated))}", file=sys.stderr)
        return EXIT_REJECTED
    assert isinstance(out, Exhausted)
    status = "all maps refuted" if out.searched_all else "budget exhausted"
    print(f"exhausted: {out.maps_tried} maps tried ({status})")
    return EXIT_RESOURCE


def cmd_verify_decomposition(args):
    d = parse_metric(_read(args.metric))
    ok = verify_decomposition(d, parse_decomposition(_read(args.decomposition)))
    print("verified" if ok else "rejected")
    return EXIT_YES if ok else EXIT_NO


def cmd_verify_farkas(args):
    d = parse_metric(_read(args.metric))
    ok = verify_farkas(d, parse_farkas(_read(args.certificate_file)))
    print("verified" if ok else "rejected")
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="l1sig", description="Exact cut-cone and l1 sphere-of-influence tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *positional, help=None):
        p = sub.add_parser(name, help=help)
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(func=fn)
        return p

    p = add("validate", cmd_validate, "metric", help="check the metric axioms")
    p.add_argument("--mode", choices=["metric", "semimetric"], default="metric")
    p = add("sig-points", cmd_sig_points, "points", help="SIG of a point file")
    p.add_argument("--p", choices=["1", "inf"], default="1")
    add("sig-metric", cmd_sig_metric, "metric", help="SIG of a metric file")
    for name, fn, what in (
        ("cutcone-check", cmd_cutcone_check, "decide cut-cone membership"),
        ("embed", cmd_embed, "l1 point set for a metric"),
    ):
        p = add(name, fn, "metric", help=what)
        p.add_argument("--certificate")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    add("reduce-ab", cmd_reduce_ab, "metric", help="d -> (SIG(d), d)")
    add("reduce-ba", cmd_reduce_ba, "instance", help="(G, d) -> d")
    p = add("solve-b", cmd_solve_b, "instance", help="promise-checked cut-cone membership")
    p.add_argument("--certificate")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p = add("realize", cmd_realize, "graph", help="search for an l1 SIG realization")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-n", type=int, default=REALIZE_MAX_N)
    p.add_argument("--certificate")
    add("verify-decomposition", cmd_verify_decomposition, "metric", "decomposition")
    p = add("verify-farkas", cmd_verify_farkas, "metric")
    p.add_argument("certificate_file", metavar="certificate")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MetricError, StructuralError) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED


if __name__ == "__main__":
    sys.exit(main())
