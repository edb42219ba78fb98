"""Command-line front end.

Subcommands compose through the graph file format: `gen` writes a family
graph, `middle` maps a graph file to its middle graph, and `gamma-t` and
`gamma` solve a graph file exactly.  `verify`, `ng-scan`, and `table`
replay the supported statements against the solver.

Exit codes: 0 on success, 1 when a computation fails or a verification
finds a violation, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import sys
from io import StringIO
from pathlib import Path

from .families import Family, FamilySpec, complete_bipartite, generate
from .formulas import TheoremId, closed_form
from .io import read_graph, write_graph
from .operators import middle_graph
from .solver import domination_number, total_domination_number
from .verify import (
    nordhaus_gaddum_scan,
    render_csv,
    render_ng_csv,
    render_text,
    verify_all,
    verify_theorem,
)


class _UsageError(Exception):
    """Bad arguments discovered after parsing; reported with exit code 2."""


_TABLE_FAMILIES: dict[str, TheoremId] = {
    "path": TheoremId.PATH_FORMULA,
    "cycle": TheoremId.FAMILY_COROLLARY,
    "complete": TheoremId.COMPLETE_FORMULA,
    "star": TheoremId.STAR_FORMULA,
    "double-star": TheoremId.DOUBLE_STAR_FORMULA,
    "friendship": TheoremId.FRIENDSHIP_FORMULA,
    "wheel": TheoremId.FAMILY_COROLLARY,
    "complete-bipartite": TheoremId.COMPLETE_BIPARTITE_FORMULA,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="middom",
        description="middle graphs and their exact total domination")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    gen = sub.add_parser(
        "gen", help="write a family graph in the exchange format")
    gen.add_argument("family", choices=[f.value for f in Family])
    gen.add_argument("params", type=int, nargs="+",
                     help="size parameters (two for complete-bipartite)")
    gen.add_argument("-o", "--output", metavar="FILE",
                     help="write here instead of stdout")

    middle = sub.add_parser(
        "middle", help="map a graph file to its middle graph")
    middle.add_argument("file", nargs="?",
                        help="input path (stdin when omitted)")
    middle.add_argument("-o", "--output", metavar="FILE")

    gamma_t = sub.add_parser(
        "gamma-t", help="exact total domination number of a graph file")
    gamma_t.add_argument("file", nargs="?",
                         help="input path (stdin when omitted)")

    gamma = sub.add_parser(
        "gamma", help="exact domination number of a graph file")
    gamma.add_argument("file", nargs="?",
                       help="input path (stdin when omitted)")

    verify = sub.add_parser(
        "verify", help="replay one statement, or all of them, on its grid")
    verify.add_argument("theorem",
                        help="a statement id, or 'all'")
    verify.add_argument("--max-n", type=int, default=None,
                        help="clamp order-like grid parameters")
    verify.add_argument("--slow", action="store_true",
                        help="unlock the longest scans")
    verify.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: MIDDOM_WORKERS)")
    verify.add_argument("--csv", action="store_true",
                        help="emit machine-readable rows")
    verify.add_argument("-o", "--output", metavar="FILE")

    ng = sub.add_parser(
        "ng-scan", help="scan all complement pairs of a given order")
    ng.add_argument("--n", type=int, required=True,
                    help="order to scan (2..6)")
    ng.add_argument("--csv", action="store_true",
                    help="emit one row per graph instead of a summary")
    ng.add_argument("-o", "--output", metavar="FILE")

    table = sub.add_parser(
        "table", help="tabulate a family formula against the solver")
    table.add_argument("family", choices=sorted(_TABLE_FAMILIES))
    table.add_argument("--range", dest="span", required=True, metavar="A:B",
                       help="inclusive parameter range")
    table.add_argument("--n1", type=int, default=None,
                       help="fixed smaller side for complete-bipartite")
    table.add_argument("--csv", action="store_true")
    table.add_argument("-o", "--output", metavar="FILE")

    return parser


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_span(text: str) -> range:
    parts = text.split(":")
    if len(parts) == 2:
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise _UsageError(f"range must look like A:B, got {text!r}") \
                from None
        if a <= b:
            return range(a, b + 1)
        raise _UsageError(f"range {text!r} is empty")
    raise _UsageError(f"range must look like A:B, got {text!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = FamilySpec(Family(args.family), tuple(args.params))
        g = generate(spec)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _write_output(write_graph(g), args.output)
    return 0


def _cmd_middle(args: argparse.Namespace) -> int:
    g = read_graph(_read_input(args.file))
    _write_output(write_graph(middle_graph(g).graph), args.output)
    return 0


def _cmd_gamma_t(args: argparse.Namespace) -> int:
    result = total_domination_number(read_graph(_read_input(args.file)))
    print(f"gamma_t = {result.value}")
    print("witness:", *sorted(result.witness))
    return 0


def _cmd_gamma(args: argparse.Namespace) -> int:
    result = domination_number(read_graph(_read_input(args.file)))
    print(f"gamma = {result.value}")
    print("witness:", *sorted(result.witness))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.workers is not None and args.workers < 1:
        raise _UsageError(f"--workers must be positive, got {args.workers}")
    if args.theorem == "all":
        reports = verify_all(max_n=args.max_n, slow=args.slow,
                             workers=args.workers)
        verbose = False
    else:
        try:
            theorem = TheoremId(args.theorem)
        except ValueError:
            known = ", ".join(t.value for t in TheoremId)
            raise _UsageError(
                f"unknown statement {args.theorem!r}; choose 'all' or one "
                f"of: {known}") from None
        reports = [verify_theorem(theorem, max_n=args.max_n, slow=args.slow,
                                  workers=args.workers)]
        verbose = True
    text = render_csv(reports) if args.csv else render_text(reports, verbose)
    _write_output(text, args.output)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_ng_scan(args: argparse.Namespace) -> int:
    try:
        records = nordhaus_gaddum_scan(args.n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    kept = [r for r in records if r.hypothesis_ok]
    bad = [r for r in kept if not r.within_bounds]
    if args.csv:
        _write_output(render_ng_csv(records), args.output)
    else:
        bounds = kept[0].bounds if kept else records[0].bounds
        lines = [
            f"n={args.n}: {len(kept)} complement pairs under the "
            f"hypothesis, {len(records) - len(kept)} excluded, "
            f"{len(bad)} violations",
            f"sum in [{bounds.sum_lower}, {bounds.sum_upper}], product in "
            f"[{bounds.product_lower}, {bounds.product_upper}]",
        ]
        lines += [f"VIOLATION encoding={r.encoding} sum={r.sum} "
                  f"product={r.product}" for r in bad]
        _write_output("\n".join(lines) + "\n", args.output)
    return 1 if bad else 0


def _table_rows(args: argparse.Namespace) -> list[tuple[int, int, int]]:
    span = _parse_span(args.span)
    theorem = _TABLE_FAMILIES[args.family]
    rows = []
    try:
        if args.family == "complete-bipartite":
            if args.n1 is None:
                raise _UsageError("complete-bipartite needs --n1")
            for n in span:
                expected = closed_form(theorem, n1=args.n1, n2=n).value
                g = complete_bipartite(args.n1, n)
                rows.append((n, expected, total_domination_number(
                    middle_graph(g).graph).value))
        else:
            if args.n1 is not None:
                raise _UsageError("--n1 only applies to complete-bipartite")
            for n in span:
                expected = closed_form(theorem, n=n).value
                g = generate(FamilySpec(Family(args.family), (n,)))
                rows.append((n, expected, total_domination_number(
                    middle_graph(g).graph).value))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return rows


def _cmd_table(args: argparse.Namespace) -> int:
    rows = _table_rows(args)
    if args.csv:
        out = StringIO()
        writer = csv.writer(out)
        writer.writerow(["family", "n", "formula", "solver", "status"])
        for n, expected, got in rows:
            writer.writerow([args.family, n, expected, got,
                             "ok" if expected == got else "mismatch"])
        _write_output(out.getvalue(), args.output)
    else:
        lines = ["| n | formula | solver | status |",
                 "| --- | --- | --- | --- |"]
        lines += [f"| {n} | {expected} | {got} | "
                  f"{'ok' if expected == got else 'MISMATCH'} |"
                  for n, expected, got in rows]
        _write_output("\n".join(lines) + "\n", args.output)
    return 0 if all(e == g for _, e, g in rows) else 1


_HANDLERS = {
    "gen": _cmd_gen,
    "middle": _cmd_middle,
    "gamma-t": _cmd_gamma_t,
    "gamma": _cmd_gamma,
    "verify": _cmd_verify,
    "ng-scan": _cmd_ng_scan,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"middom {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"middom {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
