"""Command-line entry point: ``maxorders {orders,witnesses,verify,oracle,consistency}``.

Exit status is 0 on success, 1 when a verification cell fails and 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from enum import Enum
from typing import Any, Iterable, Optional, Sequence

from . import oracle as orc
from .constructions import EXAMPLES, verify_example
from .errors import MaxOrdersError
from .quantities import (
    CH_FULL,
    CH_MINUS,
    EvenPair,
    OddPair,
    Quantity,
    all_quantities,
    check_genus,
    consistency_check,
    max_order,
)

MAX_GENUS = 10**6
FIELDS = ("genus", "quantity", "value", "witnesses", "source", "pass", "expected")

WITNESS_QUANTITIES = {
    "ch-minus": CH_MINUS,
    "full-cyclic-handlebody": CH_FULL,
    CH_MINUS.name.lower(): CH_MINUS,
    CH_FULL.name.lower(): CH_FULL,
}
ORACLE_QUANTITIES = ("c-surface", "a-surface", "ch-minus")


class UsageError(Exception):
    """Bad flags or out-of-range input; reported with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _witness_json(w) -> dict[str, int]:
    if isinstance(w, EvenPair):
        return {"m": w.m, "n": w.n}
    if isinstance(w, OddPair):
        return {"k": w.k, "n": w.n}
    raise TypeError(f"unknown witness {w!r}")


def _plain(v: Any) -> Any:
    if isinstance(v, Enum):
        return v.value
    return v


def record(genus, quantity, value, source, *, witnesses=(), passed=None, expected=None) -> dict:
    rec = {
        "genus": genus,
        "quantity": quantity,
        "value": _plain(value),
        "witnesses": [_witness_json(w) for w in witnesses],
        "source": source,
    }
    if passed is not None:
        rec["pass"] = bool(passed)
        rec["expected"] = _plain(expected)
    return rec


def parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _genera(args, *, required: bool = True) -> Optional[range]:
    if args.genus is not None and args.range is not None:
        raise UsageError("give --genus or --range, not both")
    if args.genus is not None:
        gs = range(args.genus, args.genus + 1)
    elif args.range is not None:
        gs = parse_range(args.range)
    elif required:
        raise UsageError("one of --genus or --range is required")
    else:
        return None
    check_genus(gs[0])
    if gs[-1] > MAX_GENUS:
        raise UsageError(f"genus must not exceed {MAX_GENUS}")
    return gs


def orders_records(genera: Iterable[int], quantities: Sequence[Quantity]) -> list[dict]:
    out = []
    for g in genera:
        for q in quantities:
            r = max_order(q, g)
            out.append(record(g, q.name, r.value, "formula", witnesses=r.witnesses))
    return out


def cmd_orders(args) -> tuple[list[dict], int]:
    gs = _genera(args)
    qs = all_quantities() if args.quantity is None else [Quantity.parse(args.quantity)]
    return orders_records(gs, qs), 0


def cmd_witnesses(args) -> tuple[list[dict], int]:
    gs = _genera(args)
    name = (args.quantity or "ch-minus").lower().replace("−", "-")
    if name not in WITNESS_QUANTITIES:
        raise UsageError(f"witnesses are available for {sorted(set(WITNESS_QUANTITIES))}")
    q = WITNESS_QUANTITIES[name]
    return orders_records(gs, [q]), 0


def cmd_verify(args) -> tuple[list[dict], int]:
    names = sorted(EXAMPLES) if args.example == "all" else [args.example]
    if args.example not in EXAMPLES and args.example != "all":
        raise UsageError(f"unknown example {args.example!r}; choose from {sorted(EXAMPLES)} or all")
    gs = _genera(args, required=False)
    rows = []
    for name in names:
        if name == "square":
            if gs is not None and len(names) == 1:
                if list(gs) != [5]:
                    raise UsageError("the square example lives in genus 5 only")
            targets: Iterable[Optional[int]] = [None]
        else:
            if gs is None:
                raise UsageError(f"example {name!r} needs --genus or --range")
            targets = gs
            if len(names) > 1:
                parity = {"wheel": 1, "fork": 0}.get(name)
                targets = [g for g in gs if parity is None or g % 2 == parity]
        for g in targets:
            for c in verify_example(name, g):
                rows.append(
                    record(
                        5 if g is None else g,
                        f"{name}: {c.name}",
                        c.got,
                        "construction",
                        passed=c.passed,
                        expected=c.expected,
                    )
                )
    return rows, 0 if all(r["pass"] for r in rows) else 1


def cmd_oracle(args) -> tuple[list[dict], int]:
    q = (args.quantity or "").lower()
    if q not in ORACLE_QUANTITIES:
        raise UsageError(f"oracle quantity must be one of {list(ORACLE_QUANTITIES)}")
    gs = _genera(args)
    bound = {
        "c-surface": orc.CYCLIC_SURFACE_MAX_GENUS if args.slow else orc.CYCLIC_SURFACE_FAST_GENUS,
        "a-surface": orc.ABELIAN_SURFACE_MAX_GENUS if args.slow else orc.ABELIAN_SURFACE_FAST_GENUS,
        "ch-minus": orc.CH_MINUS_MAX_GENUS,
    }[q]
    if gs[-1] > bound and not args.force:
        hint = "" if args.slow or q == "ch-minus" else " (try --slow)"
        raise UsageError(f"genus {gs[-1]} exceeds the {q} oracle bound {bound}{hint}; use --force to override")
    rows = []
    for g in gs:
        cap = orc.default_cap(g) if args.cap is None else args.cap
        if q == "c-surface":
            w = orc.search_cyclic_op_surface(g, cap, force=args.force)
            got, exp = w.group.order, max_order(Quantity.parse("C"), g).value
        elif q == "a-surface":
            w = orc.search_abelian_op_surface(g, cap, force=args.force)
            got, exp = w.group.order, max_order(Quantity.parse("A"), g).value
        else:
            got, exp = orc.oracle_ch_minus(g), max_order(CH_MINUS, g).value
        rows.append(record(g, q, got, "oracle", passed=got == exp, expected=exp))
    return rows, 0 if all(r["pass"] for r in rows) else 1


def cmd_consistency(args) -> tuple[list[dict], int]:
    gs = _genera(args)
    rows = [
        record(g, name, ok, "formula", passed=ok, expected=True)
        for g in gs
        for name, ok in consistency_check(g)
    ]
    return rows, 0 if all(r["pass"] for r in rows) else 1


def _columns(rows: Sequence[dict]) -> list[str]:
    present = set().union(*(r.keys() for r in rows)) if rows else {"genus", "quantity", "value", "witnesses", "source"}
    return [f for f in FIELDS if f in present]


def _fmt_witnesses(ws: list[dict]) -> str:
    return " ".join("(" + ",".join(f"{k}={v}" for k, v in w.items()) + ")" for w in ws)


def _csv_cell(v: Any) -> str:
    # strings go in verbatim; numbers, booleans, null and lists as JSON
    return v if isinstance(v, str) else json.dumps(v)


def _csv_value(cell: str) -> Any:
    try:
        return json.loads(cell)
    except json.JSONDecodeError:
        return cell


def emit(rows: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(rows), indent=1) + "\n"
    cols = _columns(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in rows:
            writer.writerow([_csv_cell(r.get(c)) for c in cols])
        return buf.getvalue()
    table = [cols]
    for r in rows:
        cells = []
        for c in cols:
            v = r.get(c)
            if c == "witnesses":
                cells.append(_fmt_witnesses(v))
            elif v is None:
                cells.append("-")
            elif isinstance(v, bool):
                cells.append("pass" if v and c == "pass" else "FAIL" if c == "pass" else str(v).lower())
            else:
                cells.append(str(v))
        table.append(cells)
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    return "".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in table)


def parse_csv(text: str) -> list[dict]:
    """Inverse of the CSV emitter."""
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    return [{h: _csv_value(cell) for h, cell in zip(header, row)} for row in body]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="maxorders", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, *, quantity=False, example=False):
        sp.add_argument("--genus", type=int)
        sp.add_argument("--range", metavar="A..B")
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        if quantity:
            sp.add_argument("--quantity", metavar="NAME")
        if example:
            sp.add_argument("--example", required=True, metavar="NAME")
        return sp

    common(sub.add_parser("orders", help="table values per genus"), quantity=True)
    common(sub.add_parser("witnesses", help="optimal witness pairs"), quantity=True)
    common(sub.add_parser("verify", help="check an explicit construction"), example=True)
    o = common(sub.add_parser("oracle", help="brute-force re-derivation"), quantity=True)
    o.add_argument("--cap", type=int)
    o.add_argument("--slow", action="store_true")
    o.add_argument("--force", action="store_true")
    common(sub.add_parser("consistency", help="cross-table identities"))
    return p


COMMANDS = {
    "orders": cmd_orders,
    "witnesses": cmd_witnesses,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "consistency": cmd_consistency,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        rows, status = COMMANDS[args.command](args)
    except (UsageError, MaxOrdersError) as e:
        print(f"maxorders: error: {e}", file=err)
        return 2
    out.write(emit(rows, args.format))
    return status


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
