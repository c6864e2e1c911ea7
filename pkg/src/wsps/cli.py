"""Command line interface: ``wsps solve|validate|gen|ratio|bench``.

Exit codes: 0 success, 1 validation failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import gc
import json
import sys

from .antithetical import is_antithetical, solve_antithetical
from .core import EMPTY_SCHEDULE
from .errors import BoundViolation, WspsError
from .io import emit_instance, emit_schedule, parse_instance, validate_document, write_schedule
from .keyseq import solve_keyseq
from .oracle import brute_force_opt

EXIT_OK, EXIT_INVALID, EXIT_BAD_INPUT = 0, 1, 2


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def solve(instance, algo: str):
    """Run one algorithm; returns (schedule, algorithm name, certificate or None)."""
    if algo == "auto":
        algo = "spt" if is_antithetical(instance) else "keyseq"
    if algo == "spt":
        return solve_antithetical(instance), "spt", None
    if algo == "keyseq":
        if len(instance) == 0:
            return EMPTY_SCHEDULE, "keyseq", 0.0
        schedule, ustar = solve_keyseq(instance)
        return schedule, "keyseq", ustar
    if algo == "brute":
        return brute_force_opt(instance).best_schedule, "brute", None
    raise ValueError(f"unknown algorithm {algo!r}")


def cmd_solve(args) -> int:
    instance = parse_instance(_read(args.input))
    schedule, name, certificate = solve(instance, args.algo)
    if args.output is None or args.output == "-":
        _write(None, emit_schedule(schedule, name, certificate, instance))
    else:
        write_schedule(args.output, schedule, name, certificate, instance)
    return EXIT_OK


def cmd_validate(args) -> int:
    instance = parse_instance(_read(args.instance))
    violations = validate_document(instance, _read(args.schedule))
    for v in violations:
        print(v)
    if violations:
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def cmd_gen(args) -> int:
    from .generators import generate

    instance = generate(args.kind, args.n, args.seed, tuple(args.p_range), tuple(args.w_range))
    _write(args.out, emit_instance(instance))
    return EXIT_OK


def cmd_ratio(args) -> int:
    from .experiments import run_ratio_experiment, tightness_table

    if args.tight:
        rows = tightness_table(range(2, args.n + 1))
        print(json.dumps(rows, indent=1))
        return EXIT_OK
    try:
        report = run_ratio_experiment(args.count, args.n, args.seed)
    except BoundViolation as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(report.summary(), indent=1))
    return EXIT_OK


def cmd_bench(args) -> int:
    from .experiments import bench

    for row in bench(tuple(args.n), args.repeats, args.seed):
        exponent = "" if row["exponent"] is None else f"  slope {row['exponent']:.2f}"
        print(f"{row['algo']:<7} n={row['n']:<8} {row['seconds']:.4f}s{exponent}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsps", description="Weighted shared-processor scheduling solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance document")
    p.add_argument("--algo", choices=("auto", "spt", "keyseq", "brute"), default="auto")
    p.add_argument("--input", default="-", help="instance file, '-' for stdin")
    p.add_argument("--output", default=None, help="schedule file (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="check a schedule document against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--schedule", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=("uniform", "antithetical", "tight", "equal"), default="uniform")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-range", type=float, nargs=2, default=(1, 100), metavar=("LO", "HI"))
    p.add_argument("--w-range", type=float, nargs=2, default=(1, 100), metavar=("LO", "HI"))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ratio", help="key-sequence vs. optimum on random instances")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tight", action="store_true", help="print the identical-jobs family for sizes 2..n")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("bench", help="time normalize+solve at growing sizes")
    p.add_argument("--n", type=int, nargs="+", default=[10**4, 10**5, 10**6])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if argv is None:
        # one-shot process over acyclic data; cyclic GC only costs time here
        gc.disable()
    try:
        return args.func(args)
    except (WspsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
