"""Command-line front end.

Examples::

    trigpos verify thm23 --M 1 --N 1 --k 1 --format json
    trigpos verify thm24 --M 0..8 --N 0..8 --k 1..4 --max-sum 12 --workers 4
    trigpos scan conjecture --r 1..3 --max-mn 4 --k 1..3 --workers 4

Exit status: 0 when every report passes (or is skipped for budget), 1 when
any report fails, 2 on usage, precondition or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import verify as V
from .biwords import CountBudget
from .errors import PreconditionError
from .sums import MultiParams

WORKERS_ENV = "TRIGPOS_WORKERS"

DEFAULT_ALPHAS = "-1/2,0,1/2,1,3/2"
DEFAULT_BETAS = "-1/2,0,1/2,1"


class UsageError(Exception):
    pass


def parse_int_range(text: str) -> list[int]:
    """``"3"``, ``"1..4"`` (inclusive) or ``"1,3,5"``; pieces may be combined with commas."""
    out: list[int] = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = piece.split("..", 1)
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise UsageError(f"empty range {piece!r}")
                out.extend(range(lo, hi + 1))
            elif piece:
                out.append(int(piece))
    except ValueError as exc:
        raise UsageError(f"bad integer range {text!r}") from exc
    if not out:
        raise UsageError(f"empty range {text!r}")
    return sorted(set(out))


def parse_rationals(text: str) -> list[Fraction]:
    try:
        vals = [Fraction(piece.strip()) for piece in text.split(",") if piece.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}") from exc
    if not vals:
        raise UsageError(f"empty rational list {text!r}")
    return vals


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """``"1:1,2:1"`` -> ``[(1, 1), (2, 1)]``."""
    pairs = []
    for piece in text.split(","):
        try:
            m, n = piece.split(":")
            pairs.append((int(m), int(n)))
        except ValueError as exc:
            raise UsageError(f"bad pair {piece!r}, expected M:N") from exc
    return pairs


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--workers", type=int, default=None,
                        help=f"worker processes (default: ${WORKERS_ENV} or 1)")
    common.add_argument("--max-length", type=int, default=16, help="budget: max word length")
    common.add_argument("--max-pairs", type=int, default=20_000_000, help="budget: max enumerated pairs")
    common.add_argument("--timing", action="store_true",
                        help="record runtime_ms (output is then no longer byte-reproducible)")

    grid = _Parser(add_help=False)
    grid.add_argument("--M", default="0..4")
    grid.add_argument("--N", default="0..4")
    grid.add_argument("--k", default="1..2")
    grid.add_argument("--max-sum", type=int, default=None, help="keep only points with M + N <= this")

    parser = _Parser(prog="trigpos", description="Exact checks of positive binomial trigonometric sums.")
    top = parser.add_subparsers(dest="command", required=True)

    vp = top.add_parser("verify", help="run a checker over a parameter grid")
    checks = vp.add_subparsers(dest="check", required=True)
    for name, helptext in (
        ("iks", "single binomial series is nonnegative in 1+cos x"),
        ("thm23", "squared series expansion equals |B_p| counts"),
        ("thm24", "mixed series expansion equals c_p counts"),
        ("sine", "sine and derivative expansions are nonnegative"),
        ("alternating", "alternating sums equal bi-word and lattice path counts"),
        ("involution", "prefix-swap involution properties"),
        ("paths", "involution suite plus alternating sums"),
        ("surjection", "exchange map has 2^(p-1) preimages"),
    ):
        checks.add_parser(name, parents=[common, grid], help=helptext)

    cf = checks.add_parser("closed-forms", parents=[common], help="explicit k=1 expansions")
    cf.add_argument("--M-max", type=int, default=10)

    wt = checks.add_parser("weights", parents=[common], help="Chebyshev weight-sum identities")
    wt.add_argument("--l-max", type=int, default=10)

    jc = checks.add_parser("jacobi", parents=[common, grid], help="Jacobi weight closed forms and positivity")
    jc.add_argument("--alpha", default=DEFAULT_ALPHAS)
    jc.add_argument("--beta", default=DEFAULT_BETAS)
    jc.add_argument("--l-max", type=int, default=8)

    cv = checks.add_parser("convolution", parents=[common], help="product series equals Hadamard product")
    cv.add_argument("--pairs", required=True, help="comma-separated M:N pairs")
    cv.add_argument("--k", default="1")

    ch = checks.add_parser("chu-vandermonde", parents=[common], help="terminating 2F1 summation")
    ch.add_argument("--n-max", type=int, default=12)
    ch.add_argument("--a", default="-3/2,-1/3,1/2,2,7/3")
    ch.add_argument("--c", default="-5/2,-1/2,1/3,1,5/2,4")

    sp = top.add_parser("scan", help="scan a conjecture over a grid")
    scans = sp.add_subparsers(dest="scan", required=True)
    cj = scans.add_parser("conjecture", parents=[common], help="product-of-binomials conjecture")
    cj.add_argument("--r", default="1..2", help="numbers of factors")
    cj.add_argument("--max-mn", type=int, default=3)
    cj.add_argument("--k", default="1..2")
    cj.add_argument("--modes", default="cos,sine")
    return parser


def _budget(args) -> CountBudget:
    if args.max_length < 1 or args.max_pairs < 1:
        raise UsageError("budget limits must be positive")
    return CountBudget(args.max_length, args.max_pairs)


def _grid(args, gap: bool) -> list:
    points = V.params_grid(parse_int_range(args.M), parse_int_range(args.N), parse_int_range(args.k),
                           max_sum=args.max_sum, gap=gap)
    if not points:
        what = " satisfying |M-N| <= k" if gap else ""
        raise PreconditionError(f"no grid point{what}")
    return points


GRID_CHECKS = {
    # name: (function, needs gap, takes budget)
    "iks": (V.verify_iks, True, False),
    "thm23": (V.verify_thm23, True, True),
    "thm24": (V.verify_thm24, False, True),
    "sine": (V.verify_sine, False, False),
    "alternating": (V.verify_alternating, False, True),
    "involution": (V.verify_involution, False, True),
    "paths": (V.verify_involution_and_paths, False, True),
    "surjection": (V.verify_surjection, True, True),
}


def run(args) -> list[V.Report]:
    workers = args.workers if args.workers is not None else default_workers()
    if workers < 1:
        raise UsageError("--workers must be >= 1")
    if args.command == "scan":
        modes = [m.strip() for m in args.modes.split(",") if m.strip()]
        if not modes or any(m not in V.MODES for m in modes):
            raise UsageError(f"--modes must be drawn from {','.join(V.MODES)}")
        if args.max_mn < 0:
            raise UsageError("--max-mn must be >= 0")
        grid = V.conjecture_grid(parse_int_range(args.r), args.max_mn, parse_int_range(args.k))
        if any(r < 1 for r in parse_int_range(args.r)) or any(k < 1 for k in parse_int_range(args.k)):
            raise UsageError("--r and --k must be >= 1")
        return V.scan_conjecture(grid, modes, workers)

    check = args.check
    if check in GRID_CHECKS:
        fn, gap, takes_budget = GRID_CHECKS[check]
        points = _grid(args, gap)
        if takes_budget:
            budget = _budget(args)
            return V.run_parallel(fn, [(P, budget) for P in points], workers)
        return V.run_parallel(fn, [(P,) for P in points], workers)
    if check == "closed-forms":
        return [V.verify_closed_forms(args.M_max)]
    if check == "weights":
        return [V.verify_weight_identities(args.l_max)]
    if check == "jacobi":
        series = _grid(args, gap=False)
        jobs = [(a, b, args.l_max, series) for a in parse_rationals(args.alpha) for b in parse_rationals(args.beta)]
        return V.run_parallel(V.verify_jacobi, jobs, workers)
    if check == "convolution":
        pairs = parse_pairs(args.pairs)
        return V.run_parallel(V.verify_convolution,
                              [(MultiParams(pairs, k),) for k in parse_int_range(args.k)], workers)
    if check == "chu-vandermonde":
        grid = [(a, c) for a in parse_rationals(args.a) for c in parse_rationals(args.c)]
        return [V.verify_chu_vandermonde(args.n_max, grid)]
    raise UsageError(f"unknown check {check!r}")


CSV_HEADER = ["check_id", "params", "status", "quantity", "index", "value", "witnesses"]


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _coefficient_rows(computed: dict) -> list[tuple[str, str, str]]:
    """Flatten list-of-string entries of ``computed`` into ``(name, index, value)`` rows."""
    rows = []
    for name, value in computed.items():
        if isinstance(value, list) and all(isinstance(v, str) for v in value):
            rows.extend((name, str(i), v) for i, v in enumerate(value))
    return rows


def emit_report(reports: Sequence[V.Report], fmt: str = "json") -> bytes:
    """Serialize reports as compact JSON (one array) or CSV, UTF-8 with LF endings."""
    if fmt == "json":
        body = "[" + ",".join(_compact(r.to_dict()) for r in reports) + "]\n"
        return body.encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            params = _compact(r.params)
            wit = str(len(r.witnesses))
            rows = _coefficient_rows(r.computed) or [("", "", "")]
            for name, idx, value in rows:
                writer.writerow([r.check_id, params, r.status, name, idx, value, wit])
        return buf.getvalue().encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def exit_status(reports: Sequence[V.Report]) -> int:
    return 1 if any(r.status == V.FAIL for r in reports) else 0


def execute(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Parse ``argv``, run the selected checks and write the serialized reports."""
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        reports = run(args)
    except (UsageError, PreconditionError, ValueError) as exc:
        print(f"trigpos: error: {exc}", file=stderr)
        return 2
    if not args.timing:
        reports = [r.without_timing() for r in reports]
    data = emit_report(reports, args.format)
    try:
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(data)
        else:
            stdout.write(data)
            stdout.flush()
    except OSError as exc:
        print(f"trigpos: error: cannot write output: {exc}", file=stderr)
        return 2
    return exit_status(reports)


def main() -> None:
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()
