"""
Command-line front end.

Exit status: 0 on success (or all checks passing), 1 when a verification
check finds a counterexample, 2 on usage errors and guard violations.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import bruhat, classes, counting, diagrams, verify
from .cache import ResultCache, stable_dumps
from .perms import PermutationParseError, format_perm, parse

# matrix orientation: row 1 is printed first, at the top
ASCII_LEGEND = ". point   - arm   | leg   + arm and leg   o diagram cell   * odd diagram cell"


def render_ascii(w, odd: bool) -> str:
    n = w.degree
    word = w.entries
    pos = {value: i for i, value in enumerate(word, 1)}
    full = diagrams.diagram(w)
    starred = set(diagrams.odd_diagram(w).cells) if odd else set()
    lines = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            arm = j > word[i - 1]
            leg = i > pos[j]
            if word[i - 1] == j:
                ch = "."
            elif (i, j) in starred:
                ch = "*"
            elif (i, j) in full:
                ch = "o"
            elif arm and leg:
                ch = "+"
            elif arm:
                ch = "-"
            else:
                ch = "|"
            row.append(ch)
        lines.append(" ".join(row))
    return "\n".join(lines)


class UsageError(Exception):
    pass


def _perm(text):
    try:
        return parse(text)
    except PermutationParseError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None


def cmd_diagram(args, out):
    w = _perm(args.perm)
    if args.format == "json":
        if args.odd:
            d = diagrams.odd_diagram(w)
        else:
            d = diagrams.OddDiagram.of(w.degree, diagrams.diagram(w))
        out.write(stable_dumps(diagrams.diagram_to_json(d)) + "\n")
    else:
        out.write(render_ascii(w, args.odd) + "\n")
        out.write(ASCII_LEGEND + "\n")
    return 0


def cmd_class(args, out):
    c = classes.class_of(_perm(args.perm))
    out.write(stable_dumps(c.record(members=args.members)) + "\n")
    return 0


def cmd_chain(args, out):
    chain = classes.class_chain(_perm(args.perm))
    payload = {
        "elements": [format_perm(x) for x in chain.elements],
        "labels": [[t.a, t.b] for t in chain.labels],
    }
    out.write(stable_dumps(payload) + "\n")
    return 0


def _guard(n, high, what):
    if not 1 <= n <= high:
        raise UsageError(f"{what} needs 1 <= n <= {high} (guard), got n={n}")


def cmd_partition(args, out, cache):
    n = args.n
    _guard(n, classes.PARTITION_GUARD, "partition")

    def compute():
        parts = classes.partition(n)
        if args.sizes_only:
            sizes = Counter(c.size for c in parts.values())
            return {"n": n, "count": len(parts),
                    "sizes": {str(k): sizes[k] for k in sorted(sizes)}}
        return {"n": n, "count": len(parts),
                "classes": [c.record(members=args.members) for c in parts.values()]}

    params = {"sizes_only": args.sizes_only, "members": args.members}
    payload = compute() if cache is None else cache.get_or_compute("partition", n, params, compute)
    out.write(stable_dumps(payload) + "\n")
    return 0


def cmd_count(args, out, cache):
    _guard(args.max_n, counting.COUNT_GUARD, "count")
    rows = []
    for n in range(1, args.max_n + 1):
        def compute(n=n):
            return {"n": n, "o": counting.count_odd_diagrams(n, workers=args.workers)}
        payload = compute() if cache is None else cache.get_or_compute("o_value", n, {}, compute)
        o, bell = payload["o"], counting.bell_number(n)
        rows.append({"n": n, "o": o, "bell": bell, "ratio": round(o / bell, 6)})
    if args.format == "json":
        out.write(stable_dumps(rows) + "\n")
    else:
        out.write(f"{'n':>3} {'o_n':>10} {'B_n':>10} {'o_n/B_n':>10}\n")
        for r in rows:
            out.write(f"{r['n']:>3} {r['o']:>10} {r['bell']:>10} {r['ratio']:>10.4f}\n")
    return 0


def cmd_verify(args, out, cache):
    if args.check == "all":
        names = [name for name in sorted(verify.CHECKS)
                 if verify.GUARDS[name][0] <= args.n <= verify.GUARDS[name][1]]
        skipped = sorted(set(verify.CHECKS) - set(names))
        if skipped:
            sys.stderr.write(f"skipping checks whose guard excludes n={args.n}: {', '.join(skipped)}\n")
    else:
        if args.check not in verify.CHECKS:
            raise UsageError(f"unknown check {args.check!r}; known: {', '.join(sorted(verify.CHECKS))}")
        low, high = verify.GUARDS[args.check]
        if not low <= args.n <= high:
            raise UsageError(f"check {args.check!r} guard is {low} <= n <= {high}, got n={args.n}")
        names = [args.check]
    lines = []
    failed = False
    for name in names:
        if cache is not None and args.cache:
            payload = cache.get_or_compute("report", args.n, {"check": name},
                                           lambda: verify.run_check(name, args.n).to_dict())
            report = verify.VerificationReport.from_dict(payload)
        else:
            report = verify.run_check(name, args.n)
        failed |= not report.passed
        line = report.to_json()
        lines.append(line)
        out.write(line + "\n")
        out.flush()
    if args.jsonl:
        Path(args.jsonl).write_text("".join(line + "\n" for line in lines))
    return 1 if failed else 0


def cmd_interval(args, out):
    u, v = _perm(args.u), _perm(args.v)
    if u.degree != v.degree:
        raise UsageError(f"degrees {u.degree} and {v.degree} differ")
    if not bruhat.bruhat_leq(u, v):
        raise UsageError(f"{format_perm(u)} is not below {format_perm(v)} in Bruhat order")
    iv = bruhat.interval(u, v)
    report = bruhat.interval_report(iv)
    if len(iv.members) <= bruhat.SELF_DUAL_GUARD:
        report["self_dual"] = bruhat.is_self_dual(iv)
    else:
        report["self_dual"] = None
        sys.stderr.write(f"self-duality skipped: {len(iv.members)} members exceeds guard "
                         f"{bruhat.SELF_DUAL_GUARD}\n")
    out.write(stable_dumps(report) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddclass", description="Odd diagrams of permutations and their classes.")
    parser.add_argument("--no-cache", action="store_true", help="bypass the result cache")
    # also accepted after the subcommand; SUPPRESS keeps the global value when absent
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS,
                        help="bypass the result cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagram", parents=[common], help="print D(w) or the odd diagram of w")
    p.add_argument("perm")
    p.add_argument("--odd", action="store_true")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")

    p = sub.add_parser("class", parents=[common], help="class record of a permutation")
    p.add_argument("perm")
    p.add_argument("--members", action="store_true")

    p = sub.add_parser("chain", parents=[common], help="maximal chain inside the class, min to max")
    p.add_argument("perm")

    p = sub.add_parser("partition", parents=[common], help="all odd diagram classes of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--sizes-only", action="store_true")
    p.add_argument("--members", action="store_true")

    p = sub.add_parser("count", parents=[common], help="table of o_n against Bell numbers")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("check", help="a check id or 'all'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jsonl", help="also write the reports to this file")
    p.add_argument("--cache", action="store_true", help="reuse cached reports")

    p = sub.add_parser("interval", parents=[common], help="Bruhat interval [u, v] summary")
    p.add_argument("u")
    p.add_argument("v")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cache = None if args.no_cache else ResultCache()
    try:
        if args.command == "diagram":
            return cmd_diagram(args, out)
        if args.command == "class":
            return cmd_class(args, out)
        if args.command == "chain":
            return cmd_chain(args, out)
        if args.command == "partition":
            return cmd_partition(args, out, cache)
        if args.command == "count":
            return cmd_count(args, out, cache)
        if args.command == "verify":
            return cmd_verify(args, out, cache)
        if args.command == "interval":
            return cmd_interval(args, out)
    except UsageError as exc:
        sys.stderr.write(f"oddclass: error: {exc}\n")
        return 2
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
