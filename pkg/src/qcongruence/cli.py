"""Command-line front end.

    qcongruence verify --case thm1.5 --n 1..9
    qcongruence sweep --workers 4 --format json --out reports.json
    qcongruence identity --name andrews-q-watson --n 1..8
    qcongruence list

Exit codes: 0 when every check is verified or skipped for a stated
hypothesis, 1 on any failure or unexpected skip, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from typing import Sequence

from .harness import (PARAM_NAMES, Report, SweepResult, UnknownCase, expected_skip,
                      lookup, registry, reports_to_csv, reports_to_json, run_sweep)
from .qkit import ConstraintError
from .sums import CLASSICAL, classical_identity_check

log = logging.getLogger("qcongruence")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"lo..hi"`` (inclusive) or a comma list such as ``"1,5,7"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}; use lo..hi or a comma list") from None
    return out


def _range_type(text: str) -> list[int]:
    try:
        return parse_range(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcongruence",
                                     description="Exact verification of q-congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_case=True):
        if with_case:
            p.add_argument("--case", action="append", default=None,
                           help="case id (repeatable; default: every case)")
        for name in PARAM_NAMES:
            p.add_argument(f"--{name}", type=_range_type, default=None,
                           help=f"values of {name}: lo..hi or a comma list")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", default=None, help="write output here (atomically)")
        p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
        p.add_argument("--verbose", action="store_true")

    verify = sub.add_parser("verify", help="verify selected cases")
    common(verify)
    verify.add_argument("--perturb-rhs", action="store_true",
                        help="add q to every right-hand side (self-test of failure reporting)")
    sweep = sub.add_parser("sweep", help="verify every case on its default grid")
    common(sweep)
    sweep.add_argument("--perturb-rhs", action="store_true", help=argparse.SUPPRESS)
    ident = sub.add_parser("identity", help="check classical summation formulas")
    ident.add_argument("--name", action="append", choices=CLASSICAL, default=None)
    ident.add_argument("--n", type=_range_type, default=list(range(0, 9)))
    ident.add_argument("--format", choices=("table", "json", "csv"), default="table")
    ident.add_argument("--out", default=None)
    ident.add_argument("--verbose", action="store_true")
    lst = sub.add_parser("list", help="list registered cases")
    lst.add_argument("--verbose", action="store_true")
    return parser


def write_atomic(path: str, text: str) -> None:
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".qcongruence-", dir=folder)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def render_table(result: SweepResult, verbose: bool = False) -> str:
    lines = []
    for r in result.reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        line = f"{r.status.value.upper():9s} {r.case:16s} {params:22s} mod {r.modulus}"
        detail = r.outcome.witness or r.outcome.reason
        if detail and (verbose or r.status.value != "verified"):
            line += f"\n          {detail}"
        if verbose:
            line += "".join(f"\n          - {s}" for s in r.strategy)
        lines.append(line)
    lines.append("")
    for case, counts in result.by_case().items():
        lines.append(f"{case:16s} verified={counts['verified']} failed={counts['failed']} "
                     f"skipped={counts['skipped']}")
    s = result.summary
    lines.append(f"total: verified={s['verified']} failed={s['failed']} skipped={s['skipped']}")
    return "\n".join(lines) + "\n"


def render(result: SweepResult, fmt: str, verbose: bool = False) -> str:
    if fmt == "json":
        return reports_to_json(result.reports)
    if fmt == "csv":
        return reports_to_csv(result.reports)
    return render_table(result, verbose)


def exit_code(reports: Sequence[Report]) -> int:
    for r in reports:
        if r.status.value == "failed":
            return 1
        if r.status.value == "skipped" and not expected_skip(r):
            return 1
    return 0


def _cmd_verify(args) -> int:
    ids = args.case or [c.id for c in registry()]
    for cid in ids:
        lookup(cid)
    overrides = {k: getattr(args, k) for k in PARAM_NAMES if getattr(args, k) is not None}
    log.info("running %s with overrides %s", ", ".join(ids), overrides)
    result = run_sweep(ids, overrides, workers=max(1, args.workers),
                       perturb=getattr(args, "perturb_rhs", False))
    _emit(render(result, args.format, args.verbose), args.out)
    return exit_code(result.reports)


def _cmd_identity(args) -> int:
    import csv
    import io
    import json
    rows = []
    for name in args.name or CLASSICAL:
        for n in args.n:
            try:
                ok = classical_identity_check(name, n)
                status = "verified" if ok else "failed"
            except (ConstraintError, ValueError) as exc:
                status = "skipped"
                log.info("%s n=%d skipped: %s", name, n, exc)
            rows.append({"identity": name, "n": n, "status": status})
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, ["identity", "n", "status"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = "".join(f"{r['status'].upper():9s} {r['identity']:22s} n={r['n']}\n" for r in rows)
    _emit(text, args.out)
    return 1 if any(r["status"] != "verified" for r in rows) else 0


def _cmd_list(args) -> int:
    for c in registry():
        label = "" if c.label == "theorem" else f"  [{c.label}]"
        print(f"{c.id:16s} params=({', '.join(c.order)}){label}")
        print(f"    {c.provenance}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        if args.command in ("verify", "sweep"):
            return _cmd_verify(args)
        if args.command == "identity":
            return _cmd_identity(args)
        return _cmd_list(args)
    except UnknownCase as exc:
        print(f"qcongruence: unknown case {exc.args[0]!r}", file=sys.stderr)
        return 2
    except (UsageError, OSError) as exc:
        print(f"qcongruence: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
