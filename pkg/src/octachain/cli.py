"""Command-line interface.

Four subcommands:

* ``graph``     -- emit a chain graph as json / edge list / DOT;
* ``spectrum``  -- eigenvalues of the normalized Laplacian (as the labelled
  union of the two fold blocks) or of a single block;
* ``table``     -- closed-form value tables (dk / trees / kemeny), optionally
  compared against the published rows with ``--compare-paper``;
* ``verify``    -- run the full cross-check suite and report pass/fail.

Exit codes: 0 on success, 1 when a verification or required comparison
fails, 2 for usage errors.  Comparisons of the dk table are informational
(the published rows beyond the first are known to diverge; the oracles side
with the closed form) and never affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms as cf
from . import graph_gen as gg
from . import laplacian as lap
from . import oracles as orc
from . import reference_data as ref
from . import verification as ver
from .exact_algebra import frac_to_decimal_str, frac_to_str

_COMPARE_LIMIT = {"dk": 30, "trees": 12}


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


def _cmd_graph(args) -> int:
    builder = (
        gg.build_moebius_octagonal
        if args.kind == gg.MOEBIUS
        else gg.build_linear_octagonal
    )
    text = gg.export(builder(args.n), args.format)
    if not text.endswith("\n"):
        text += "\n"
    sys.stdout.write(text)
    return 0


def _labelled_spectrum(n: int) -> list[tuple[float, str]]:
    blocks = lap.block_decompose(n)
    pairs = [(v, "A") for v in orc.eigenvalues_symmetric(blocks.l_a)]
    pairs += [(v, "S") for v in orc.eigenvalues_symmetric(blocks.l_s)]
    return sorted(pairs)


def _cmd_spectrum(args) -> int:
    if args.matrix == "full":
        pairs = _labelled_spectrum(args.n)
    else:
        blocks = lap.block_decompose(args.n)
        chosen = blocks.l_a if args.matrix == "A" else blocks.l_s
        pairs = [(v, args.matrix) for v in orc.eigenvalues_symmetric(chosen)]

    if args.format == "csv":
        lines = ["index,eigenvalue,block"]
        lines += [f"{i},{v:.17g},{b}" for i, (v, b) in enumerate(pairs)]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        if args.matrix == "full":
            eigenvalues = [{"value": v, "block": b} for v, b in pairs]
        else:
            eigenvalues = [v for v, _ in pairs]
        sys.stdout.write(
            json.dumps(
                {"n": args.n, "matrix": args.matrix, "eigenvalues": eigenvalues}
            )
            + "\n"
        )
    return 0


def _table_row(which: str, n: int) -> tuple[str, str]:
    """(exact string, rendered value) for one table row."""
    if which == "dk":
        exact = cf.dk_index(n)
        return frac_to_str(exact), frac_to_decimal_str(exact, 2)
    if which == "kemeny":
        exact = cf.kemeny(n)
        return frac_to_str(exact), frac_to_decimal_str(exact, 6)
    count = cf.spanning_trees(n)
    return str(count), str(count)


def _published(which: str, n: int) -> str:
    if which == "dk":
        return ref.PUBLISHED_DK[n]
    return str(ref.PUBLISHED_TREES[n])


def _cmd_table(args, parser: argparse.ArgumentParser) -> int:
    if args.end < args.start:
        parser.error("--to must not be smaller than --from")
    if args.compare_paper:
        if args.which not in _COMPARE_LIMIT:
            parser.error(f"no published rows exist for {args.which!r}")
        if args.end > _COMPARE_LIMIT[args.which]:
            parser.error(
                f"published {args.which} rows stop at n="
                f"{_COMPARE_LIMIT[args.which]}"
            )

    rows = []
    strict_mismatch = False
    for n in range(args.start, args.end + 1):
        exact, value = _table_row(args.which, n)
        row = {"n": n, "exact": exact, "value": value}
        if args.compare_paper:
            published = _published(args.which, n)
            row["published"] = published
            row["match"] = value == published
            if not row["match"] and args.which == "trees":
                strict_mismatch = True
        rows.append(row)

    if args.format == "csv":
        header = f"n,{args.which}"
        if args.compare_paper:
            header += ",published,match"
        lines = [header]
        for row in rows:
            line = f"{row['n']},{row['value']}"
            if args.compare_paper:
                line += f",{row['published']},{'yes' if row['match'] else 'no'}"
            lines.append(line)
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(json.dumps({"which": args.which, "rows": rows}) + "\n")
    return 1 if strict_mismatch else 0


def _cmd_verify(args) -> int:
    report = ver.run_verification(args.n_max)
    width = max(len(c.name) for c in report.checks)
    for c in report.checks:
        status = "PASS" if c.passed else ("INFO" if c.informational else "FAIL")
        line = f"{status}  {c.name:<{width}}  n={c.n}"
        if not c.passed:
            line += f"  (expected {c.expected}, got {c.actual})"
        if c.note:
            line += f"  [{c.note}]"
        print(line)
    s = report.summary
    print(
        f"{s['passed']}/{s['total']} checks passed, "
        f"{s['failed']} failed, {s['informational']} informational"
    )
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(ver.report_to_json(report) + "\n")
    return 0 if s["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octachain",
        description="Octagonal chain graphs and their normalized-Laplacian "
        "spectral invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_graph = sub.add_parser("graph", help="emit a chain graph")
    p_graph.add_argument("--n", type=positive_int, required=True)
    p_graph.add_argument(
        "--kind", choices=(gg.MOEBIUS, gg.LINEAR), default=gg.MOEBIUS
    )
    p_graph.add_argument(
        "--format", choices=("json", "edgelist", "dot"), default="json"
    )
    p_graph.set_defaults(handler=lambda args: _cmd_graph(args))

    p_spec = sub.add_parser(
        "spectrum", help="eigenvalues of the closed chain or one fold block"
    )
    p_spec.add_argument("--n", type=positive_int, required=True)
    p_spec.add_argument("--matrix", choices=("full", "A", "S"), default="full")
    p_spec.add_argument("--format", choices=("csv", "json"), default="csv")
    p_spec.set_defaults(handler=lambda args: _cmd_spectrum(args))

    p_table = sub.add_parser("table", help="closed-form value tables")
    p_table.add_argument("which", choices=("dk", "trees", "kemeny"))
    p_table.add_argument(
        "--from", dest="start", type=positive_int, default=1
    )
    p_table.add_argument("--to", dest="end", type=positive_int, default=10)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument(
        "--compare-paper",
        action="store_true",
        help="add published-row comparison columns (dk rows are "
        "informational; a trees mismatch sets exit code 1)",
    )
    p_table.set_defaults(handler=lambda args: _cmd_table(args, parser))

    p_verify = sub.add_parser("verify", help="run the full cross-check suite")
    p_verify.add_argument("--n-max", type=positive_int, default=6)
    p_verify.add_argument("--json-out", default=None)
    p_verify.set_defaults(handler=lambda args: _cmd_verify(args))

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args)


def entry() -> None:
    sys.exit(main())
