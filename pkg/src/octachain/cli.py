"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import graphs, invariants, sequences, verify
from .graphs import Variant
from .decomposition import decompose

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _variant(text: str) -> Variant:
    try:
        return Variant.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def cmd_gen(n: int, variant: Variant, fmt: str, dump_blocks: bool = False) -> str:
    g = graphs.build_chain(n, variant)
    if fmt == "json":
        doc = graphs.to_json_dict(g)
        if dump_blocks:
            b = decompose(g)
            doc["l_a"] = b.l_a.to_json()
            doc["l_s"] = b.l_s.to_json()
        return json.dumps(doc) + "\n"
    lines = [f"# n={n} variant={variant.value} |V|={8 * n} |E|={10 * n}"]
    lines += [f"{a.label()} {b.label()}" for a, b in graphs.canonical_edge_list(g)]
    if dump_blocks:
        b = decompose(g)
        for name, m in (("L_A", b.l_a), ("L_S", b.l_s)):
            lines.append(f"# {name}")
            lines += [" ".join(str(x) for x in row) for row in m.rows]
    return "\n".join(lines) + "\n"


def cmd_compute(n: int, variant: Variant, fmt: str, method: str = "closed_form") -> str:
    rep = invariants.report(n, variant, method)
    if fmt == "json":
        return rep.to_json() + "\n"
    if fmt == "csv":
        return _csv([invariants.InvariantReport.CSV_HEADER, rep.csv_row()])
    d = rep.to_json_dict()
    return "\n".join(
        [
            f"n          {d['n']}",
            f"variant    {d['variant']}",
            f"Kf         {rep.kf}  (~{d['kf_decimal']})",
            f"Wiener     {d['wiener']}",
            f"trees      {d['complexity']}",
            f"W/Kf       {d['ratio_decimal']}",
            f"method     {d['method']}",
        ]
    ) + "\n"


def table_rows(which: str, n_max: int) -> list[list]:
    """One row per n: ``[n, mobius value, cylinder value]``."""
    if n_max < 1:
        raise UsageError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        if which == "kirchhoff":
            vals = [invariants.format_decimal(invariants.kirchhoff_closed(n, v), 2)
                    for v in Variant]
        elif which == "complexity":
            vals = [invariants.complexity_closed(n, v) for v in Variant]
        else:
            raise UsageError(f"unknown table {which!r}")
        rows.append([n, *vals])
    return rows


def cmd_table(which: str, n_max: int, fmt: str = "text") -> str:
    rows = table_rows(which, n_max)
    header = ["n", "mobius", "cylinder"]
    if fmt == "csv":
        return _csv([header, *rows])
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(3)]
    out = []
    for r in [header, *rows]:
        out.append("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))
    return "\n".join(out) + "\n"


def cmd_sequences(max_j: int) -> str:
    rows = [["j", "q", "q_primed", "S", "T"]]
    for j in range(0, max_j + 1):
        s, t = sequences.lucas(j)
        rows.append([j, sequences.q_value(j), sequences.q_value(j, "primed"), s, t])
    return _csv(rows)


def cmd_verify(n_max: int, out=None) -> int:
    out = out or sys.stdout
    if n_max < 1:
        raise UsageError("--max-n must be >= 1")
    failed = 0
    total = 0
    for result in verify.run_all(n_max):
        total += 1
        print(result.line(), file=out)
        for f in result.failures:
            print(f"      {f}", file=out)
        for note in result.notes:
            print(f"      note: {note}", file=out)
        failed += not result.passed
    print(f"{total - failed}/{total} checks passed", file=out)
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="octachain",
        description="Mobius and cylinder octagonal-quadrilateral chains: "
        "Kirchhoff index, Wiener index, spanning trees.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit the chain graph")
    g.add_argument("-n", type=_positive, required=True)
    g.add_argument("--variant", type=_variant, required=True)
    g.add_argument("--format", choices=("json", "text"), default="text")
    g.add_argument("--dump-blocks", action="store_true", help="also emit L_A and L_S")

    c = sub.add_parser("compute", help="invariants of one chain")
    c.add_argument("-n", type=_positive, required=True)
    c.add_argument("--variant", type=_variant, required=True)
    c.add_argument("--format", choices=("json", "csv", "text"), default="text")
    c.add_argument("--method", choices=invariants.METHODS, default="closed_form")

    t = sub.add_parser("table", help="Kirchhoff or spanning-tree table for n = 1..max")
    t.add_argument("--which", choices=("kirchhoff", "complexity"), required=True)
    t.add_argument("--max-n", type=_positive, required=True)
    t.add_argument("--format", choices=("text", "csv"), default="text")

    s = sub.add_parser("sequences", help="q_j, q'_j, S_j, T_j as CSV")
    s.add_argument("--max-j", type=int, required=True)

    v = sub.add_parser("verify", help="check closed forms against brute force")
    v.add_argument("--max-n", type=int, required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "gen":
            text = cmd_gen(args.n, args.variant, args.format, args.dump_blocks)
        elif args.command == "compute":
            text = cmd_compute(args.n, args.variant, args.format, args.method)
        elif args.command == "table":
            text = cmd_table(args.which, args.max_n, args.format)
        elif args.command == "sequences":
            if args.max_j < 0:
                raise UsageError("--max-j must be >= 0")
            text = cmd_sequences(args.max_j)
        else:
            return cmd_verify(args.max_n)
    except UsageError as exc:
        print(f"octachain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
