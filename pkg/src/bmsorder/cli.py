"""
Command-line front end: ``bmsorder <subcommand> [flags]``.

Exit status is 0 on success, 1 on usage errors and 2 on validation
errors. Failures print one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .channel import (bhattacharyya, capacity, channel_to_json, entropy, error_probability,
                      load_channel)
from .errors import BMSError, InvalidParameter
from .extremal import ExtremalProfile, gap_row, lambda_bar, lambda_star, lambda_under
from .lambda_order import Ordering, compare, lambda_profile
from .numerics import SolverConfig
from .sampler import SamplerConfig, sample_batch

ORDER_NAMES = {
    Ordering.DEGRADED: "A_degraded_wrt_B",
    Ordering.UPGRADED: "A_upgraded_wrt_B",
    Ordering.EQUIVALENT: "equivalent",
    Ordering.INCOMPARABLE: "incomparable",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def solver_config() -> SolverConfig:
    raw = os.environ.get("BMSORD_QUAD_TOL")
    if raw is None:
        return SolverConfig()
    try:
        return SolverConfig(quad_tol=float(raw))
    except ValueError as exc:
        raise InvalidParameter(f"bad BMSORD_QUAD_TOL={raw!r}") from exc


def capacity_grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0 or stop < start:
        raise InvalidParameter("need step > 0 and to >= from")
    n = int(np.floor((stop - start) / step + 1e-9)) + 1
    cs = [round(start + k * step, 12) for k in range(n)]
    for c in cs:
        if not 0.0 < c < 1.0:
            raise InvalidParameter(f"capacity {c} outside (0, 1)")
    return cs


def _writer(stream):
    return csv.writer(stream, lineterminator="\n")


def _fmt(digits: int):
    return lambda v: f"{v:.{digits}f}"


def _gap_rows(cs, jobs: int, cfg: SolverConfig):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(gap_row, cs, [cfg] * len(cs), chunksize=16))
    return [gap_row(c, cfg) for c in cs]


def _write_gap_rows(out, rows, fmt):
    w = _writer(out)
    w.writerow(["c", "c_star", "c_under", "d_gap", "u_gap"])
    for r in rows:
        w.writerow([fmt(r.c), fmt(r.c_star), fmt(r.c_under), fmt(r.d_gap), fmt(r.u_gap)])


def cmd_eps_bsc(args, out):
    p = ExtremalProfile.for_capacity(args.capacity, solver_config())
    fmt = _fmt(args.digits)
    w = _writer(out)
    w.writerow(["c", "eps_bsc", "z_bsc", "x_bsc"])
    w.writerow([fmt(p.c), fmt(p.eps_bsc), fmt(p.z_bsc), fmt(p.x_bsc)])


def cmd_gap_table(args, out):
    rows = _gap_rows(capacity_grid(args.start, args.stop, args.step), args.jobs, solver_config())
    _write_gap_rows(out, rows, _fmt(args.digits))


def cmd_sweep(args, out):
    rows = _gap_rows(capacity_grid(args.start, args.stop, args.step), args.jobs, solver_config())
    fmt = _fmt(args.digits)
    _write_gap_rows(out, rows, fmt)
    d = max(rows, key=lambda r: r.d_gap)
    u = max(rows, key=lambda r: r.u_gap)
    out.write(f"# max_d_gap={fmt(d.d_gap)} argmax_d_gap={fmt(d.c)} "
              f"max_u_gap={fmt(u.u_gap)} argmax_u_gap={fmt(u.c)}\n")


def cmd_extremal(args, out):
    if args.grid < 2:
        raise InvalidParameter("--grid must be at least 2")
    cfg = solver_config()
    p = ExtremalProfile.for_capacity(args.capacity, cfg)
    z = np.union1d(np.linspace(0.0, 1.0, args.grid), [p.z_bsc, p.x_bsc])
    bar, star, under = lambda_bar(p, z), lambda_star(p, z), lambda_under(p, z, cfg)
    fmt = _fmt(args.digits)
    w = _writer(out)
    w.writerow(["z", "lambda_bar", "lambda_star", "lambda_under"])
    for row in zip(z, bar, star, under):
        w.writerow([fmt(v) for v in row])


def _profile_rows(ch, refine: int = 0):
    pl = lambda_profile(ch)
    z = pl.breaks
    if refine:
        z = np.union1d(z, np.linspace(0.0, 1.0, refine))
    return z, pl(z)


def cmd_sample(args, out):
    cfg = SamplerConfig(args.capacity, args.masses, args.seed)
    if args.count < 0:
        raise InvalidParameter("--count must be non-negative")
    batch = sample_batch(cfg, args.count)
    fmt = _fmt(args.digits)
    if args.array:
        text = "[" + ",\n ".join(channel_to_json(ch) for ch in batch) + "]\n"
        if args.out is None:
            if args.emit_lambda:
                raise UsageError("--emit-lambda with --array needs --out")
            out.write(text)
            return
        path = Path(args.out)
        path.write_text(text)
        if args.emit_lambda:
            with open(str(path) + ".lambda.csv", "w", newline="") as fh:
                w = _writer(fh)
                w.writerow(["index", "z", "value"])
                for i, ch in enumerate(batch):
                    for z, v in zip(*_profile_rows(ch)):
                        w.writerow([i, fmt(z), fmt(v)])
        return
    if args.out is None:
        raise UsageError("sample needs --out DIR (or --array for a single JSON array)")
    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    for i, ch in enumerate(batch):
        (root / f"ch_{i:05d}.json").write_text(channel_to_json(ch) + "\n")
        if args.emit_lambda:
            with open(root / f"ch_{i:05d}_lambda.csv", "w", newline="") as fh:
                w = _writer(fh)
                w.writerow(["z", "value"])
                for z, v in zip(*_profile_rows(ch)):
                    w.writerow([fmt(z), fmt(v)])


def cmd_eval(args, out):
    ch = load_channel(args.channel)
    fmt = _fmt(args.digits)
    w = _writer(out)
    w.writerow(["capacity", "entropy", "bhattacharyya", "error_probability"])
    w.writerow([fmt(capacity(ch)), fmt(entropy(ch)), fmt(bhattacharyya(ch)),
                fmt(error_probability(ch))])
    out.write("\n")
    w.writerow(["z", "value"])
    for z, v in zip(*_profile_rows(ch, args.refine)):
        w.writerow([fmt(z), fmt(v)])


def cmd_check_order(args, out):
    a = lambda_profile(load_channel(args.a))
    b = lambda_profile(load_channel(args.b))
    out.write(ORDER_NAMES[compare(a, b)] + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bmsorder",
                     description="Degradation order and extremal channels of BMS(c).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--digits", type=int, default=6, help="decimal places in CSV output")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.set_defaults(func=func)
        return p

    p = add("eps-bsc", cmd_eps_bsc, "crossover probability and thresholds for capacity c")
    p.add_argument("--capacity", type=float, required=True)

    for name, func, start, stop, step in (("gap-table", cmd_gap_table, 0.1, 0.9, 0.1),
                                          ("sweep", cmd_sweep, 0.001, 0.999, 0.001)):
        p = add(name, func, f"{name} of d_gap and u_gap over a capacity grid")
        p.add_argument("--from", dest="start", type=float, default=start)
        p.add_argument("--to", dest="stop", type=float, default=stop)
        p.add_argument("--step", type=float, default=step)
        p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = add("extremal", cmd_extremal, "lambda_bar, lambda_star and lambda_under on a grid")
    p.add_argument("--capacity", type=float, required=True)
    p.add_argument("--grid", type=int, default=1001)

    p = add("sample", cmd_sample, "random channels of capacity c")
    p.add_argument("--capacity", type=float, required=True)
    p.add_argument("--masses", type=int, choices=(2, 3), default=2)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--array", action="store_true", help="write one JSON array instead of a directory")
    p.add_argument("--emit-lambda", action="store_true", help="also write Lambda breakpoints")

    p = add("eval", cmd_eval, "functionals and Lambda breakpoints of a channel file")
    p.add_argument("--channel", required=True)
    p.add_argument("--refine", type=int, default=0, help="add an N-point uniform grid")

    p = add("check-order", cmd_check_order, "degradation order between two channel files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    return parser


def _fail(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def run(argv=None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", str(exc), 1)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        buf = io.StringIO()
        args.func(args, buf)
        if args.out is not None and args.func is not cmd_sample:
            Path(args.out).write_text(buf.getvalue())
        else:
            stdout.write(buf.getvalue())
    except UsageError as exc:
        return _fail("usage", str(exc), 1)
    except BMSError as exc:
        return _fail(exc.kind, str(exc), 2)
    except OSError as exc:
        return _fail("io", str(exc), 2)
    return 0


def main() -> None:
    sys.exit(run())
