"""Command line front end.

Subcommands:
    add     add two operands and print the sum
    verify  cross-check the adders against the digit oracle on random pairs
    gen     emit reproducible random or worst-case operands
    bench   run the benchmark grid and emit CSV

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
Operands are read from files or from standard input ('-'); when both
operands come from stdin, the first line is --a and the second is --b.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
from time import perf_counter

import numpy as np

from tokadd.bench import (
    ALGORITHMS,
    CSV_HEADER,
    BenchConfig,
    BenchRow,
    digit_carry_count,
    format_row,
    gen_random_operand,
    gen_worst_case,
    report_to_csv,
    run_benchmark,
)
from tokadd.errors import EmptyInputError, InvalidDigitError
from tokadd.limbs import parse_decimal, render_decimal, scan_digits
from tokadd.oracle import add_digitwise
from tokadd.parallel import add_parallel, default_worker_count
from tokadd.sequential import add_sequential

_ALGO_NAMES = {"seq": "sequential", "par": "parallel", "oracle": "oracle"}


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list")
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("values must be >= 1")
    return values


def _algo_list(text: str) -> tuple[str, ...]:
    names = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name = _ALGO_NAMES.get(part, part)
        if name not in ALGORITHMS:
            raise argparse.ArgumentTypeError(f"unknown algorithm {part!r}")
        names.append(name)
    if not names:
        raise argparse.ArgumentTypeError("algorithm list must not be empty")
    return tuple(names)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokadd",
        description="big-integer decimal addition on 18-digit limbs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("add", help="add two operands")
    p.add_argument("--a", required=True, metavar="PATH|-", help="first operand")
    p.add_argument("--b", required=True, metavar="PATH|-", help="second operand")
    p.add_argument("--algo", choices=tuple(_ALGO_NAMES), default="seq")
    p.add_argument("--workers", type=_positive_int, default=None,
                   help="worker count (par only; default: hardware)")
    p.add_argument("--out", default="-", metavar="PATH|-")
    p.add_argument("--metrics", default=None, metavar="CSV",
                   help="append a metrics row to this CSV file")
    p.add_argument("--backend", choices=("auto", "numba", "numpy"), default="auto")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("verify", help="cross-check adders on random pairs")
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--max-digits", type=_positive_int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_int_list, default=(1, 2, 4),
                   help="comma-separated parallel worker counts")
    p.add_argument("--backend", choices=("auto", "numba", "numpy"), default="auto")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a reproducible operand")
    p.add_argument("--digits", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--worst-case", action="store_true",
                   help="emit the all-nines / 1 pair instead")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="run the benchmark grid, emit CSV")
    p.add_argument("--sizes", type=_int_list, default=(20000, 100000, 500000, 1000000))
    p.add_argument("--algos", type=_algo_list, default=ALGORITHMS)
    p.add_argument("--workers", type=_int_list,
                   default=None, help="parallel worker counts (default: hardware)")
    p.add_argument("--reps", type=_positive_int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", metavar="PATH|-")
    p.add_argument("--backend", choices=("auto", "numba", "numpy"), default="auto")
    p.set_defaults(func=_cmd_bench)
    return parser


class _OperandSource:
    """Reads operands from paths or stdin lines, in request order."""

    def __init__(self):
        self._lines = None
        self._next = 0

    def read(self, where: str) -> str:
        if where == "-":
            if self._lines is None:
                self._lines = sys.stdin.read().splitlines()
            if self._next >= len(self._lines):
                raise OSError("not enough lines on standard input")
            line = self._lines[self._next]
            self._next += 1
            return line
        with open(where, "rb") as fh:
            return fh.read().decode("latin-1").rstrip("\r\n")


def _backend_arg(args) -> str | None:
    return None if args.backend == "auto" else args.backend


def _write_text(where: str, text: str):
    if where == "-":
        sys.stdout.write(text)
    else:
        with open(where, "w", encoding="ascii") as fh:
            fh.write(text)


def _append_metrics(path: str, row: BenchRow):
    need_header = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", encoding="ascii") as fh:
        if need_header:
            fh.write(CSV_HEADER + "\n")
        fh.write(format_row(row) + "\n")


def _canonical_len(text: str) -> int:
    return len(text.lstrip("0")) or 1


def _cmd_add(args) -> int:
    if args.workers is not None and args.algo != "par":
        print("error: --workers applies only to --algo par", file=sys.stderr)
        return 2
    source = _OperandSource()
    texts = {}
    for label, where in (("--a", args.a), ("--b", args.b)):
        try:
            text = source.read(where)
        except OSError as exc:
            print(f"error: operand {label}: {exc}", file=sys.stderr)
            return 2
        try:
            scan_digits(text)
        except (EmptyInputError, InvalidDigitError) as exc:
            print(f"error: operand {label}: {exc}", file=sys.stderr)
            return 2
        texts[label] = text
    a_text, b_text = texts["--a"], texts["--b"]
    backend = _backend_arg(args)
    workers = 1
    if args.algo == "oracle":
        name = "oracle"
        digits = max(_canonical_len(a_text), _canonical_len(b_text))
        t0 = perf_counter()
        total = add_digitwise(a_text, b_text)
        elapsed = perf_counter() - t0
        ops = max(len(a_text), len(b_text))
        counts = (ops, ops, digit_carry_count(a_text, b_text))
    else:
        na = parse_decimal(a_text)
        nb = parse_decimal(b_text)
        digits = max(na.digit_len, nb.digit_len)
        if args.algo == "seq":
            name = "sequential"
            t0 = perf_counter()
            num, metrics = add_sequential(na, nb, backend=backend)
            elapsed = perf_counter() - t0
            counts = (metrics.basic_ops, metrics.basic_ops, metrics.carries_generated)
        else:
            name = "parallel"
            workers = args.workers if args.workers is not None else default_worker_count()
            t0 = perf_counter()
            num, trace = add_parallel(na, nb, workers, backend=backend)
            elapsed = perf_counter() - t0
            counts = (trace.total_basic_ops, trace.iterations, trace.total_carries)
        total = render_decimal(num)
    _write_text(args.out, total + "\n")
    if args.metrics:
        _append_metrics(args.metrics, BenchRow(name, digits, workers, 1, elapsed, *counts))
    return 0


def _corrupt(text: str) -> str:
    return text[:-1] + ("1" if text[-1] != "1" else "2")


def _report_mismatch(seed, trial, a, b, outputs):
    err = sys.stderr
    print(f"mismatch at trial {trial} (seed {seed})", file=err)
    inline = max(len(a), len(b), *(len(v) for v in outputs.values())) <= 120
    if inline:
        print(f"  a = {a}", file=err)
        print(f"  b = {b}", file=err)
        for name in sorted(outputs):
            print(f"  {name} = {outputs[name]}", file=err)
    else:
        folder = tempfile.mkdtemp(prefix="tokadd-verify-")
        for fname, text in [("a", a), ("b", b)] + sorted(outputs.items()):
            path = os.path.join(folder, f"{fname}.txt")
            with open(path, "w", encoding="ascii") as fh:
                fh.write(text + "\n")
            print(f"  {fname}: {path}", file=err)
    return 1


def _cmd_verify(args) -> int:
    backend = _backend_arg(args)
    rng = np.random.default_rng(args.seed)
    fault = os.environ.get("TOKADD_VERIFY_FAULT") == "1"
    for trial in range(args.trials):
        la = int(rng.integers(1, args.max_digits + 1))
        lb = int(rng.integers(1, args.max_digits + 1))
        sa = int(rng.integers(0, 2**63))
        sb = int(rng.integers(0, 2**63))
        a = gen_random_operand(la, sa)
        b = gen_random_operand(lb, sb)
        na = parse_decimal(a)
        nb = parse_decimal(b)
        outputs = {
            "oracle": add_digitwise(a, b),
            "sequential": render_decimal(add_sequential(na, nb, backend=backend)[0]),
        }
        for m in args.workers:
            outputs[f"parallel[{m}]"] = render_decimal(
                add_parallel(na, nb, m, backend=backend)[0]
            )
        if fault and trial == 0:
            outputs["sequential"] = _corrupt(outputs["sequential"])
        if len(set(outputs.values())) != 1:
            _report_mismatch(args.seed, trial, a, b, outputs)
            return 1
    print(
        f"verified {args.trials} random pairs up to {args.max_digits} digits: "
        "all adders agree"
    )
    return 0


def _cmd_gen(args) -> int:
    if args.worst_case:
        a, b = gen_worst_case(args.digits)
        _write_text("-", a + "\n" + b + "\n")
    else:
        _write_text("-", gen_random_operand(args.digits, args.seed) + "\n")
    return 0


def _cmd_bench(args) -> int:
    workers = args.workers if args.workers is not None else (default_worker_count(),)
    config = BenchConfig(
        sizes=args.sizes,
        algorithms=args.algos,
        worker_counts=workers,
        repetitions=args.reps,
        seed=args.seed,
    )
    report = run_benchmark(config, backend=_backend_arg(args))
    _write_text(args.out, report_to_csv(report))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
