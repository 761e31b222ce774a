"""Command-line front end.

Exit codes: 0 success, 1 negative or absent answer to a decision query,
2 invalid arguments, 3 cell cap hit or node budget exhausted before
optimality.  Only the report goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import domination as dom
from .errors import InvalidArgumentError, ResourceCapError
from .geometry import (
    DEFAULT_MAX_CELLS,
    BoardSpec,
    attack_line_count,
    attacked_set,
    attacks,
    encode,
    format_position,
    parse_position,
)
from .independence import count_independent, exists_independent

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    a, b = _nonneg(lo), _nonneg(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _position(text: str):
    try:
        return parse_position(text)
    except InvalidArgumentError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--max-cells", type=_positive, default=DEFAULT_MAX_CELLS,
                        help="refuse boards with more than this many cells (default 2^24)")

    parser = _Parser(prog="hyperqueens", description=__doc__.splitlines()[0],
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def board_args(p):
        p.add_argument("--size", "-n", type=_positive, required=True)
        p.add_argument("--dim", "-d", type=_positive, required=True)

    def range_args(p):
        p.add_argument("--size-range", "--size", dest="sizes", type=_range, required=True,
                       help="inclusive range A..B, or a single value")
        p.add_argument("--dim-range", "--dim", dest="dims", type=_range, required=True)

    p = sub.add_parser("lines", parents=[common], help="attack vector and line counts")
    p.add_argument("--dim-range", "--dim", "-d", dest="dims", type=_range, required=True)

    p = sub.add_parser("attack", parents=[common], help="cells attacked from a position")
    board_args(p)
    p.add_argument("--pos", type=_position, required=True)
    p.add_argument("--target", type=_position,
                   help="only decide whether --pos attacks this cell")

    p = sub.add_parser("bound", parents=[common], help="table of lb, reported ub, lines")
    range_args(p)

    p = sub.add_parser("dominate", parents=[common], help="exact minimum dominating queens")
    board_args(p)
    p.add_argument("--node-budget", type=_positive)

    p = sub.add_parser("independent", parents=[common], help="non-attacking placements")
    board_args(p)
    p.add_argument("--queens", "-m", type=_nonneg, required=True)
    p.add_argument("--count", action="store_true", help="count all placements")

    p = sub.add_parser("insufficiency", parents=[common],
                       help="can n^k queens never dominate?")
    p.add_argument("--size", "-n", type=_positive)
    p.add_argument("--dim", "-d", type=_positive, required=True)
    p.add_argument("--k", type=_nonneg, required=True)

    p = sub.add_parser("audit", parents=[common], help="check bounds against exact solves")
    range_args(p)
    p.add_argument("--node-budget", type=_positive)
    return parser


def _emit(out, fmt: str, payload, rows: Optional[list[dict]] = None) -> None:
    """Write payload as JSON, or rows as CSV / key=value text."""
    if fmt == "json":
        out.write(json.dumps(payload) + "\n")
        return
    if rows is None:
        rows = [payload]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), quoting=csv.QUOTE_NONE,
                           escapechar="\\", lineterminator="\n")
        w.writeheader()
        w.writerows({k: _flat(v) for k, v in r.items()} for r in rows)
        out.write(buf.getvalue())
    else:
        for r in rows:
            out.write(" ".join(f"{k}={_text(v)}" for k, v in r.items()) + "\n")


def _text(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return ";".join(format_position(q) for q in v)
        return format_position(v)
    return "" if v is None else str(v)


def _flat(v) -> str:
    # CSV is unquoted: coordinates are space-separated, positions ';'-separated
    return _text(v).replace(",", " ")


def _cmd_lines(args, out) -> int:
    rows = [{"d": d, "vectors": 3 ** d - 1, "lines": attack_line_count(d)}
            for d in args.dims if d >= 1]
    if not rows:
        raise InvalidArgumentError("dimension range must include d >= 1")
    _emit(out, args.format, rows, rows)
    return EXIT_OK


def _cmd_attack(args, out) -> int:
    board = BoardSpec(args.dim, args.size, args.max_cells)
    pos = board.check_position(args.pos)
    if args.target is not None:
        hit = attacks(board, pos, args.target)
        row = {"n": board.size, "d": board.dimension, "pos": list(pos),
               "target": list(args.target), "attacks": hit}
        _emit(out, args.format, row)
        return EXIT_OK if hit else EXIT_NEGATIVE
    cells = sorted(attacked_set(board, pos), key=lambda p: encode(board, p))
    row = {"n": board.size, "d": board.dimension, "pos": list(pos), "count": len(cells),
           "cap": board.size * attack_line_count(board.dimension) - 1,
           "cells": [list(p) for p in cells]}
    if args.format == "csv":
        _emit(out, "csv", None, [{"cell": p} for p in cells])
    else:
        _emit(out, args.format, row)
    return EXIT_OK


def bound_table(sizes, dims) -> list[dict]:
    """Rows n,d,lb,reported_ub,lines sorted by (d, n)."""
    return [
        {"n": n, "d": d, "lb": dom.lower_bound(n, d),
         "reported_ub": dom.reported_upper_bound(n, d), "lines": attack_line_count(d)}
        for d in dims if d >= 1 for n in sizes if n >= 1
    ]


def _cmd_bound(args, out) -> int:
    rows = bound_table(args.sizes, args.dims)
    if not rows:
        raise InvalidArgumentError("ranges must include n >= 1 and d >= 1")
    _emit(out, args.format, rows, rows)
    return EXIT_OK


def _cmd_dominate(args, out) -> int:
    board = BoardSpec(args.dim, args.size, args.max_cells)
    result = dom.min_dominating(board, args.node_budget)
    payload = result.to_json()
    _emit(out, args.format, payload)
    if not result.optimal:
        print(f"node budget exhausted; gamma in [{result.lb}, {result.ub}]", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def _cmd_independent(args, out) -> int:
    board = BoardSpec(args.dim, args.size, args.max_cells)
    found = exists_independent(board, args.queens)
    witness = None if found is None else [list(q) for q in found.queens]
    if args.count:
        count = count_independent(board, args.queens)
    else:
        count = 0 if found is None else None
    payload = {"n": board.size, "d": board.dimension, "m": args.queens,
               "mode": "count" if args.count else "exists", "witness": witness,
               "count": None if count is None else str(count)}
    _emit(out, args.format, payload)
    if found is None:
        print(f"no {args.queens} pairwise non-attacking queens fit", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_insufficiency(args, out) -> int:
    d, k = args.dim, args.k
    if k > d - 1:
        raise InvalidArgumentError(f"k must be at most d-1, got k={k}, d={d}")
    threshold = dom.min_insufficient_n(d, k) if k <= d - 2 else None
    payload = {"d": d, "k": k, "min_n": threshold}
    verdict = None
    if args.size is not None:
        verdict = dom.insufficiency_check(args.size, d, k)
        payload = {"n": args.size, **payload, "insufficient": verdict,
                   "lb": dom.lower_bound(args.size, d)}
    _emit(out, args.format, payload)
    return EXIT_NEGATIVE if verdict is False else EXIT_OK


def audit(sizes, dims, node_budget: Optional[int] = None,
          max_cells: int = DEFAULT_MAX_CELLS) -> list[dict]:
    """Exact gamma against the lower bound and the reported upper bound."""
    rows = []
    for d in dims:
        for n in sizes:
            if n < 1 or d < 1:
                continue
            board = BoardSpec(d, n, max_cells)
            r = dom.min_dominating(board, node_budget)
            rub = dom.reported_upper_bound(n, d)
            lb = dom.lower_bound(n, d)
            solved = r.optimal
            rows.append({
                "n": n, "d": d, "lb": lb,
                "gamma": r.gamma if solved else None,
                "reported_ub": rub, "status": r.status,
                "lb_le_gamma": (lb <= r.gamma) if solved else None,
                "gamma_le_reported_ub": (r.gamma <= rub) if solved else None,
            })
    return rows


def _cmd_audit(args, out) -> int:
    rows = audit(args.sizes, args.dims, args.node_budget, args.max_cells)
    if not rows:
        raise InvalidArgumentError("ranges must include n >= 1 and d >= 1")
    _emit(out, args.format, rows, rows)
    for r in rows:
        if r["gamma_le_reported_ub"] is False:
            print(f"n={r['n']} d={r['d']}: gamma={r['gamma']} exceeds reported "
                  f"upper bound {r['reported_ub']}", file=sys.stderr)
    if any(r["status"] != "optimal" for r in rows):
        return EXIT_RESOURCE
    return EXIT_OK


_COMMANDS = {
    "lines": _cmd_lines, "attack": _cmd_attack, "bound": _cmd_bound,
    "dominate": _cmd_dominate, "independent": _cmd_independent,
    "insufficiency": _cmd_insufficiency, "audit": _cmd_audit,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as e:
        print(f"hyperqueens: error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidArgumentError as e:
        print(f"hyperqueens: invalid argument: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceCapError as e:
        print(f"hyperqueens: {e}", file=sys.stderr)
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
