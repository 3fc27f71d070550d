"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Iterable, Optional, TextIO

from . import oracle
from .descent import (
    DEFAULT_GENUS_CEILING,
    count_by_genus,
    enumerate_almost_symmetric_high_type,
    enumerate_genus,
    run_descent,
)
from .errors import GapsetError
from .formats import format_gaps, to_dict
from .semigroup import NumericalSemigroup
from .verify import run_all


class UsageError(Exception):
    pass


def _emit_semigroups(items: Iterable[NumericalSemigroup], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["frobenius", "genus", "multiplicity", "type", "depth", "gaps", "pf", "min_gens"])
        for S in items:
            d = to_dict(S)
            writer.writerow(
                [d["frobenius"], d["genus"], d["multiplicity"], d["type"], d["depth"]]
                + [",".join(map(str, d[k])) for k in ("gaps", "pf", "min_gens")]
            )
        return
    for S in items:
        if fmt == "json":
            out.write(json.dumps(to_dict(S), separators=(",", ":")) + "\n")
        else:
            out.write(format_gaps(S) + "\n")


def cmd_count(args, out: TextIO) -> int:
    g = args.genus
    if args.method == "tree":
        ceiling = oracle.genus_ceiling()
        if not 1 <= g <= ceiling:
            raise UsageError(f"--genus must be in [1, {ceiling}] for the tree method")
        counts = oracle.tree_counts(g)[1:]
    else:
        if not 1 <= g <= DEFAULT_GENUS_CEILING:
            raise UsageError(f"--genus must be in [1, {DEFAULT_GENUS_CEILING}]")
        report = count_by_genus(
            g, workers=args.workers, full_check=args.full_check, mode=args.mode, checkpoint=args.checkpoint
        )
        counts = report.counts
    F = 4 * g - 1
    if args.format == "json":
        out.write(json.dumps({"F": F, "counts": counts}, separators=(",", ":")) + "\n")
    elif args.format == "csv":
        out.write("genus,count\n")
        for j, n in enumerate(counts, 1):
            out.write(f"{j},{n}\n")
    else:
        for j, n in enumerate(counts, 1):
            out.write(f"n{j} = {n}\n")
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    g = args.genus
    if g < 0:
        raise UsageError("--genus must be nonnegative")
    if g == 0:
        items = [NumericalSemigroup.naturals()]
    elif args.method == "tree":
        if g > oracle.genus_ceiling():
            raise UsageError(f"--genus must be at most {oracle.genus_ceiling()} for the tree method")
        items = oracle.tree_enumerate_by_genus(g)
    else:
        if g > DEFAULT_GENUS_CEILING:
            raise UsageError(f"--genus must be at most {DEFAULT_GENUS_CEILING}")
        items = enumerate_genus(g, workers=args.workers, full_check=args.full_check)
    _emit_semigroups(items, args.format, out)
    return 0


def _high_type(F: int, t: Optional[int]) -> bool:
    return t is not None and 2 * t >= F - 1 and (F - t) % 2 == 0


def cmd_almost_symmetric(args, out: TextIO) -> int:
    F, t = args.frobenius, args.type
    if F < 1:
        raise UsageError("--frobenius must be positive")
    if t is not None:
        if not 1 <= t <= F:
            raise UsageError("--type must be in [1, F]")
        if (F - t) % 2:
            raise UsageError(f"no almost symmetric semigroup has F={F}, t={t}: F - t must be even")
    method = args.method
    if method == "auto":
        method = "descent" if _high_type(F, t) else "oracle"
    if method == "descent":
        if not _high_type(F, t):
            raise UsageError("the descent method needs --type t with t >= (F-1)/2 and F - t even")
        items = enumerate_almost_symmetric_high_type(F, t, workers=args.workers)
    else:
        ceiling = oracle.frobenius_ceiling()
        if F > ceiling:
            raise UsageError(f"--frobenius must be at most {ceiling} for the oracle method")
        items = oracle.enumerate_as_by_frobenius(F, t)
    _emit_semigroups(items, args.format, out)
    distinct = len({S.pseudo_frobenius() for S in items})
    if args.format == "json":
        out.write(json.dumps({"count": len(items), "distinct_pf": distinct}) + "\n")
    else:
        out.write(f"count={len(items)} distinct_pf={distinct}\n")
    return 0


def cmd_verify(args, out: TextIO) -> int:
    max_genus, max_frobenius = args.max_genus, args.max_frobenius
    if max_genus is None and max_frobenius is None:
        max_genus, max_frobenius = 6, 20
    max_genus = max_genus or 0
    max_frobenius = max_frobenius or 0
    if max_genus < 0 or max_frobenius < 0:
        raise UsageError("bounds must be nonnegative")
    if max_genus > oracle.genus_ceiling():
        raise UsageError(f"--max-genus must be at most {oracle.genus_ceiling()}")
    if max_frobenius > oracle.frobenius_ceiling():
        raise UsageError(f"--max-frobenius must be at most {oracle.frobenius_ceiling()}")
    results = run_all(max_genus, max_frobenius)
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_bench(args, out: TextIO) -> int:
    g, w = args.genus, args.workers
    if not 1 <= g <= DEFAULT_GENUS_CEILING:
        raise UsageError(f"--genus must be in [1, {DEFAULT_GENUS_CEILING}]")
    reports = []
    for k in range(1, w + 1):
        t0 = time.perf_counter()
        report, _ = run_descent(4 * g - 1, g, workers=k, keep_last=False)
        reports.append((report, time.perf_counter() - t0))
    base = reports[0][0]
    if any(r.counts != base.counts for r, _ in reports):
        out.write("counts differ between worker counts\n")
        return 1
    writer = csv.writer(out, lineterminator="\n")
    header = ["level", "count"]
    for k in range(1, w + 1):
        header += [f"seconds_w{k}", f"speedup_w{k}"]
    writer.writerow(header)
    for j in range(g):
        row = [j + 1, base.counts[j]]
        for r, _ in reports:
            sec = r.elapsed[j]
            row += [f"{sec:.6f}", f"{base.elapsed[j] / sec:.3f}" if sec > 0 else ""]
        writer.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gapset", description="Numerical semigroups by genus and almost symmetric semigroups of high type.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, methods, default):
        p.add_argument("--method", choices=methods, default=default)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--full-check", action="store_true", help="test every PF element instead of the t//2 prefix")

    p = sub.add_parser("count", help="print n_1 .. n_g")
    p.add_argument("--genus", type=int, required=True)
    common(p, ["descent", "tree"], "descent")
    p.add_argument("--mode", choices=["bfs", "dfs"], default="bfs")
    p.add_argument("--checkpoint", default=None, help="resumable frontier file")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list every semigroup of a genus")
    p.add_argument("--genus", type=int, required=True)
    common(p, ["descent", "tree"], "descent")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("almost-symmetric", help="almost symmetric semigroups with a Frobenius number")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--type", type=int, default=None)
    common(p, ["auto", "descent", "oracle"], "auto")
    p.set_defaults(func=cmd_almost_symmetric)

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--max-genus", type=int, default=None)
    p.add_argument("--max-frobenius", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the counting descent, CSV output")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (UsageError, GapsetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
