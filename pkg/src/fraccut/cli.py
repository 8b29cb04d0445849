"""Command-line interface: ``fraccut {info,fracdist,improve,decode,simulate} FILE ...``

Exit codes: 0 success, 1 runtime/parse/file error, 2 usage error.
A FILE that does not exist on disk is also looked up among the bundled
matrices (``hamming.txt``, ``hamming_star.txt``, ``golay.alist``), first by
exact name and then by stem, so ``fracdist hamming.alist`` works out of the box.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

from . import data_path
from .bscsim import sweep
from .codecio import ParseError, format_rational, load_matrix, save_matrix, write_cut_log, write_sim_csv
from .cutplane import GreedyConfig, greedy_improve
from .fracdist import CONE, FULL, OK, fractional_distance
from .gf2 import BitMatrix, BitVector, rank
from .lpdecode import LpDecoder

BUNDLED = ("hamming.txt", "hamming_star.txt", "golay.alist")


class CliError(Exception):
    pass


def resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    for name in BUNDLED:
        if name == p.name or Path(name).stem == p.stem:
            return data_path(name)
    raise CliError(f"{path}: no such file")


def _load(args) -> BitMatrix:
    path = resolve(args.file)
    try:
        return load_matrix(path, args.format)
    except ParseError as e:
        raise CliError(f"{path}: {e}") from None
    except OSError as e:
        raise CliError(f"{path}: {e.strerror}") from None


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def _crossovers(s: str) -> list[float]:
    try:
        return [float(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {s!r}") from None


def _point(p) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in p) + ")"


def cmd_info(args, out) -> None:
    H = _load(args)
    prof = Counter(H.row_weights())
    cols = Counter(H.column(j).weight for j in range(H.n))
    print(f"n = {H.n}", file=out)
    print(f"m = {H.m}", file=out)
    print(f"rank = {rank(H)}", file=out)
    print("row weights: " + ", ".join(f"{w}x{c}" for w, c in sorted(prof.items())), file=out)
    print("column weights: " + ", ".join(f"{w}x{c}" for w, c in sorted(cols.items())), file=out)


def cmd_fracdist(args, out) -> None:
    H = _load(args)
    rep = fractional_distance(H, args.method, args.engine, args.prune, args.jobs)
    if rep.status != OK:
        print("no fractional vertex: every nonzero vertex is a codeword", file=out)
        return
    print(f"d_frac = {format_rational(rep.d_frac)}", file=out)
    if args.gamma:
        print(f"gamma ({len(rep.gamma)} vertices):", file=out)
        for p in rep.gamma:
            print("  " + _point(p), file=out)


def cmd_improve(args, out) -> None:
    H = _load(args)
    cfg = GreedyConfig(max_rows=args.max_rows, target_dfrac=args.target_dfrac,
                       only_improving=args.only_improving, method=args.method,
                       engine=args.engine, jobs=args.jobs)
    res = greedy_improve(H, cfg)
    save_matrix(res.final, args.output)
    if args.log:
        Path(args.log).write_text(write_cut_log(res.log))
    before = res.log[0].d_frac_before if res.log else None
    print(f"rows appended: {len(res.log)} ({res.stop_reason})", file=out)
    if before is not None:
        print(f"d_frac before = {format_rational(before)}", file=out)
    if res.report is not None and res.report.status == OK:
        print(f"d_frac after = {format_rational(res.report.d_frac)}", file=out)
    print(f"wrote {args.output}", file=out)


def cmd_decode(args, out) -> None:
    H = _load(args)
    bits = args.received.strip()
    if len(bits) != H.n or set(bits) - {"0", "1"}:
        raise CliError(f"--received must be {H.n} characters of 0/1")
    res = LpDecoder(H, args.engine).decode(BitVector.from_string(bits))
    print(f"status = {res.status}", file=out)
    print(f"output = {_point(res.output)}", file=out)
    print(f"objective = {res.objective}", file=out)
    if res.is_codeword:
        print(f"codeword = {res.word()}", file=out)
        print(f"unique = {res.unique}", file=out)


def cmd_simulate(args, out) -> None:
    H = _load(args)
    for p in args.crossover:
        if not 0 <= p <= 0.5:
            raise CliError(f"crossover {p} outside [0, 0.5]")
    if args.trials < 1:
        raise CliError("--trials must be >= 1")
    points = sweep(H, args.crossover, args.trials, args.seed, args.engine, args.jobs)
    text = write_sim_csv(points)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fraccut", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, engine_default):
        p.add_argument("file")
        p.add_argument("--format", choices=("alist", "dense"), default=None,
                       help="input format (default: by extension)")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--engine", choices=("exact", "float"), default=engine_default,
                       help="LP engine; float values are always confirmed exactly")

    p = sub.add_parser("info", help="dimensions, rank and weight profile")
    common(p, "exact")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("fracdist", help="fractional distance")
    common(p, "float")
    p.add_argument("--method", choices=(CONE, FULL), default=CONE)
    p.add_argument("--gamma", action="store_true", help="also list the minimum-weight vertices")
    p.add_argument("--prune", action="store_true", help="skip facets whose weight bound exceeds the best value")
    p.set_defaults(func=cmd_fracdist)

    p = sub.add_parser("improve", help="append redundant cutting rows")
    common(p, "float")
    p.add_argument("--max-rows", type=int, required=True)
    p.add_argument("--target-dfrac", type=_rational, default=None)
    p.add_argument("--only-improving", action="store_true")
    p.add_argument("--method", choices=(CONE, FULL), default=CONE)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--log", default=None, help="cut log (JSON lines)")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("decode", help="LP-decode one received word on the BSC")
    common(p, "exact")
    p.add_argument("--received", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="block error rate sweep")
    common(p, "float")
    p.add_argument("--crossover", type=_crossovers, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_simulate)
    return ap


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("fraccut: error: --jobs must be >= 1", file=sys.stderr)
        return 2
    if getattr(args, "max_rows", 0) < 0:
        print("fraccut: error: --max-rows must be >= 0", file=sys.stderr)
        return 2
    try:
        args.func(args, out)
    except (CliError, ValueError, RuntimeError) as e:
        print(f"fraccut: error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"fraccut: error: {e.filename}: {e.strerror}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
