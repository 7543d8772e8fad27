"""Command line front end: ``youngrmt {count,dist,compare,dhw,lemma,sample}``.

Exit codes: 0 success, 1 internal disagreement between independent
computations, 2 bad arguments, 3 I/O failure.
"""

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from . import experiments
from .combinatorics import (
    PATH_COUNT_MAX_N,
    det_count,
    format_diagram,
    hook_count,
    parse_diagram,
    path_count_oracle,
)
from .exceptions import ResourceLimitError
from .limitlemma import lemma_report
from .plancherel import distribution_csv, exact_distribution

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3


class Mismatch(Exception):
    pass


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", newline="") as fh:
        fh.write(text)


def _json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def cmd_count(args) -> str:
    shape = parse_diagram(args.shape)
    d = max(1, len(shape))
    hooks = hook_count(shape)
    det = det_count(shape, d)
    lines = [f"shape {format_diagram(shape)}", f"hook_count {hooks}", f"det_count {det}"]
    counts = [hooks, det]
    if sum(shape) <= PATH_COUNT_MAX_N:
        paths = path_count_oracle(shape, d)
        lines.append(f"path_count {paths}")
        counts.append(paths)
    if len(set(counts)) != 1:
        raise Mismatch(f"tableau counters disagree for {format_diagram(shape)}: {counts}")
    return "\n".join(lines) + "\n"


def cmd_dist(args) -> str:
    return distribution_csv(exact_distribution(args.n, args.d))


def cmd_compare(args) -> str:
    start = time.perf_counter()
    report = experiments.compare(args.n, args.d, args.samples, args.seed, args.workers)
    # wall time breaks byte-identical reruns, so it is opt-in
    report["runtime_seconds"] = round(time.perf_counter() - start, 3) if args.timing else None
    return _json(report)


def cmd_dhw(args) -> str:
    start = time.perf_counter()
    report = experiments.dhw(args.n)
    report["runtime_seconds"] = round(time.perf_counter() - start, 3) if args.timing else None
    return _json(report)


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0 or hi < lo:
        raise ValueError("grid needs grid-step > 0 and grid-max >= grid-min")
    m = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return np.round(lo + step * np.arange(m), 12)


def cmd_lemma(args) -> str:
    rows = lemma_report(args.c, args.alpha, _grid(args.grid_min, args.grid_max, args.grid_step))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["c", "alpha", "sup_error", "dominance_ok"])
    for r in rows:
        writer.writerow([_fmt(r.c), r.alpha, _fmt(r.sup_error), str(r.dominance_ok).lower()])
    return buf.getvalue()


def cmd_sample(args) -> str:
    if args.kind != "gue0" and args.n is None:
        raise ValueError(f"sample {args.kind} needs --n")
    rows = experiments.sample_rows(args.kind, args.n, args.d, args.samples, args.seed)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if args.kind == "perm":
        writer.writerow(["draw_index", "permutation"])
        for k, p in enumerate(rows):
            writer.writerow([k, " ".join(map(str, p))])
    elif args.kind == "diagram":
        writer.writerow(["draw_index", "shape"])
        for k, s in enumerate(rows):
            writer.writerow([k, format_diagram(s)])
    else:
        writer.writerow(["draw_index"] + [f"x{i + 1}" for i in range(args.d)])
        for k, x in enumerate(rows):
            writer.writerow([k] + [_fmt(v) for v in x])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngrmt",
        description="Restricted Plancherel diagrams versus traceless GUE spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=True, d=True, sampling=False):
        if n:
            p.add_argument("--n", type=_positive, required=True, help="number of boxes")
        if d:
            p.add_argument("--d", type=_positive, required=True, help="maximal number of rows")
        if sampling:
            p.add_argument("--samples", type=_positive, default=10_000)
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("count", help="count standard tableaux of a shape three ways")
    p.add_argument("shape", help='row lengths, e.g. "3,1"')
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("dist", help="exact restricted Plancherel table as CSV")
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("compare", help="rescaled diagram rows vs GUE0 eigenvalues (JSON)")
    common(p, sampling=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--timing", action="store_true", help="record wall time in the report")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("dhw", help="exact two-row law against chi_3 (JSON)")
    # --samples/--seed are accepted for a uniform interface; the law is exact
    common(p, d=False, sampling=True)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_dhw)

    p = sub.add_parser("lemma", help="Poisson local limit convergence table (CSV)")
    p.add_argument("--c", type=_float_list, default=[1e2, 1e3, 1e4])
    p.add_argument("--alpha", type=_int_list, default=[0, 1, 2])
    p.add_argument("--grid-min", type=float, default=-3.0)
    p.add_argument("--grid-max", type=float, default=3.0)
    p.add_argument("--grid-step", type=float, default=0.01)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("sample", help="emit random draws as CSV")
    p.add_argument("kind", choices=["perm", "diagram", "gue0"])
    p.add_argument("--n", type=_positive, default=None, help="number of boxes (perm, diagram)")
    common(p, n=False, sampling=True)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except Mismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
