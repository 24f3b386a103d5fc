"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 invalid input,
3 insufficient data, 4 the character is outside the classified cases.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .classify import extension_field
from .errors import CapabilityError, InsufficientData, OutOfScope
from .fields import prime_power, serialize_field
from .groups import (SERIES, TableError, builtin_records, canonical_series, find_record,
                     load_table, parse_group)
from .partitions import Partition
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INSUFFICIENT, EXIT_OUT_OF_SCOPE = 0, 1, 2, 3, 4

# smallest admissible q, used by ``tables`` when --q is omitted
_DEFAULT_Q = {"B2x": 2, "F4x": 2, "G2x": 3}

_UNKNOWN = (("ext_formal", "unknown"), ("ext_field", "unknown"), ("rule", "none"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unipext", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def group_args(p, need_q=True):
        p.add_argument("--series", required=True, help=f"one of {', '.join(SERIES)}")
        p.add_argument("--n", type=int, help="rank parameter (A_{n-1}, D_n); fixed for exceptional series")
        p.add_argument("--q", type=int, required=need_q, help="prime power")
        p.add_argument("--sigma-order", type=int, help="order of sigma (3 selects triality on D4)")
        p.add_argument("--tables", type=Path, help="record file merged over the built-in data")
        p.add_argument("--format", choices=("text", "records"), default="records")

    p = sub.add_parser("query", help="classify one character")
    group_args(p)
    p.add_argument("--label", required=True)
    p = sub.add_parser("enumerate", help="classify every sigma-invariant character of a group")
    group_args(p)
    p = sub.add_parser("tables", help="print the unipotent character records of a group")
    group_args(p, need_q=False)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-t", type=int)
    p.add_argument("--format", choices=("text", "records"), default="text")
    return ap


def _group(args, q=None):
    series = canonical_series(args.series)
    return parse_group(series, args.n, q if q is not None else args.q, args.sigma_order)


def _records(g, path):
    """Built-in records for g with the records from ``path`` (same series and n) replacing them."""
    try:
        base = builtin_records(g)
    except CapabilityError:
        base = []
    if path is None:
        return base, False
    extra = [r for r in load_table(path.read_text(encoding="ascii"))
             if r.series == g.series and r.n == g.n]
    merged = {r.label: r for r in base}
    merged.update((r.label, r) for r in extra)
    return list(merged.values()), True


def _sorted(g, records):
    if g.series in ("A", "2A"):
        return sorted(records, key=lambda r: Partition.parse(r.label).parts)
    return sorted(records, key=lambda r: r.label)


def _classified_line(rec, res, g):
    extras = (("q", str(g.q)),) + (res.serialized()[1:] if res is not None else _UNKNOWN)
    return replace(rec, extras=extras).to_line()


def _text(rec, res, g):
    head = f"{g.series} n={g.n} q={g.q} {rec.label}"
    if res is None:
        return f"{head}: unknown"
    fields = ", ".join(serialize_field(f) for f in res.resolved)
    lines = [f"{head}: {serialize_field(res.resolved_field)} "
             f"(formal {serialize_field(res.field)}, rule {res.rule})",
             f"  extensions: {fields}"]
    lines += [f"  {t}" for t in res.trail + res.notes]
    return "\n".join(lines)


def run_query(args, out) -> int:
    g = _group(args)
    records, external = _records(g, args.tables)
    rec = find_record(g, args.label, records if external or g.series not in ("A", "2A") else None)
    if rec is None:
        raise InsufficientData(f"insufficient data: no record for {args.label} in series {g.series}")
    res = extension_field(g, rec.label, records=records if external else None)
    print(_classified_line(rec, res, g) if args.format == "records" else _text(rec, res, g), file=out)
    return EXIT_OK


def run_enumerate(args, out) -> int:
    g = _group(args)
    records, external = _records(g, args.tables)
    for rec in _sorted(g, records):
        if rec.sigma_inv is False:
            continue
        try:
            res = extension_field(g, rec.label, records=records if external else None)
        except (InsufficientData, OutOfScope):
            res = None
        print(_classified_line(rec, res, g) if args.format == "records" else _text(rec, res, g),
              file=out)
    return EXIT_OK


def run_tables(args, out) -> int:
    series = canonical_series(args.series)
    g = _group(args, args.q if args.q is not None else _DEFAULT_Q.get(series, 2))
    records, _ = _records(g, args.tables)
    for rec in _sorted(g, records):
        print(rec.to_line(), file=out)
    return EXIT_OK


def run_verify(args, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = SUITES[name](args)
        for line in rep.lines:
            print(f"{name}: {line}", file=out)
        print(f"{name}: {rep.passed} passed, {rep.failed} failed", file=out)
        ok = ok and rep.ok
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {"query": run_query, "enumerate": run_enumerate, "tables": run_tables,
             "verify": run_verify}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    if getattr(args, "q", None) is not None:
        try:
            prime_power(args.q)
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return EXIT_INVALID
    try:
        return _COMMANDS[args.command](args, out)
    except OutOfScope as exc:
        print(f"out of scope: {exc}", file=err)
        return EXIT_OUT_OF_SCOPE
    except (InsufficientData, CapabilityError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INSUFFICIENT
    except (ValueError, TableError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
