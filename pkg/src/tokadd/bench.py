"""Operand generation, timed benchmark runs, CSV reporting.

Methodology: every (algorithm, size, workers) cell is timed over
`repetitions` runs after one untimed warm-up, and reports the mean.
Operands are generated once per size from the seed, so every algorithm
in a run sees identical inputs.  The timed region covers the addition
only; operand generation, parsing and rendering are excluded, because
rendering alone costs two orders of magnitude more than the fastest
adder at large sizes and would drown the comparison the numbers exist
to make.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from time import perf_counter

import numpy as np

from tokadd.limbs import parse_decimal
from tokadd.oracle import add_digitwise
from tokadd.parallel import add_parallel, default_worker_count
from tokadd.sequential import add_sequential

ALGORITHMS = ("sequential", "parallel", "oracle")

CSV_HEADER = "algorithm,digits,workers,repetitions,mean_seconds,basic_ops,iterations,carries"


@dataclass
class BenchConfig:
    sizes: tuple[int, ...]
    algorithms: tuple[str, ...] = ALGORITHMS
    worker_counts: tuple[int, ...] = field(
        default_factory=lambda: (default_worker_count(),)
    )
    repetitions: int = 5
    seed: int = 0

    def __post_init__(self):
        self.sizes = tuple(int(s) for s in self.sizes)
        self.algorithms = tuple(self.algorithms)
        self.worker_counts = tuple(int(w) for w in self.worker_counts)
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        if any(s < 1 for s in self.sizes):
            raise ValueError("sizes must be >= 1")
        if not self.algorithms:
            raise ValueError("algorithms must be non-empty")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")
        if "parallel" in self.algorithms:
            if not self.worker_counts:
                raise ValueError("worker_counts must be non-empty")
            if any(w < 1 for w in self.worker_counts):
                raise ValueError("worker counts must be >= 1")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    digits: int
    workers: int
    repetitions: int
    mean_seconds: float
    basic_ops: int
    iterations: int
    carries: int


@dataclass
class BenchReport:
    rows: list[BenchRow]


def gen_random_operand(digits: int, seed: int) -> str:
    """Uniform random decimal string of exactly `digits` digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    rng = np.random.default_rng(seed)
    vals = np.empty(digits, dtype=np.uint8)
    vals[0] = rng.integers(1, 10)
    if digits > 1:
        vals[1:] = rng.integers(0, 10, size=digits - 1, dtype=np.uint8)
    return (vals + ord("0")).tobytes().decode("ascii")


def gen_worst_case(digits: int) -> tuple[str, str]:
    """Operand pair whose carry ripples through every position."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return "9" * digits, "1"


def _operand_seed(seed: int, size: int, which: int) -> int:
    return int(np.random.SeedSequence((seed, size, which)).generate_state(1)[0])


def digit_carry_count(a: str, b: str) -> int:
    carry = 0
    ncar = 0
    for i in range(1, max(len(a), len(b)) + 1):
        da = ord(a[-i]) - ord("0") if i <= len(a) else 0
        db = ord(b[-i]) - ord("0") if i <= len(b) else 0
        if da + db + carry >= 10:
            carry = 1
            ncar += 1
        else:
            carry = 0
    return ncar


def _run_cell(algorithm, a_text, b_text, na, nb, size, workers, repetitions, backend):
    if algorithm == "sequential":
        call = lambda: add_sequential(na, nb, backend=backend)
    elif algorithm == "parallel":
        call = lambda: add_parallel(na, nb, workers, backend=backend)
    else:
        call = lambda: add_digitwise(a_text, b_text)
    try:
        call()  # warm-up, untimed
        times = []
        last = None
        for _ in range(repetitions):
            t0 = perf_counter()
            last = call()
            times.append(perf_counter() - t0)
        mean = sum(times) / len(times)
        if algorithm == "sequential":
            metrics = last[1]
            counts = (metrics.basic_ops, metrics.basic_ops, metrics.carries_generated)
        elif algorithm == "parallel":
            trace = last[1]
            counts = (trace.total_basic_ops, trace.iterations, trace.total_carries)
        else:
            ops = max(len(a_text), len(b_text))
            counts = (ops, ops, digit_carry_count(a_text, b_text))
        return BenchRow(algorithm, size, workers, repetitions, mean, *counts)
    except MemoryError:
        return BenchRow(algorithm, size, workers, repetitions, float("nan"), 0, 0, 0)


def run_benchmark(config: BenchConfig, *, backend: str | None = None) -> BenchReport:
    """Run every configured cell and collect one row per cell."""
    rows = []
    for size in config.sizes:
        a_text = gen_random_operand(size, _operand_seed(config.seed, size, 0))
        b_text = gen_random_operand(size, _operand_seed(config.seed, size, 1))
        na = parse_decimal(a_text)
        nb = parse_decimal(b_text)
        for algorithm in config.algorithms:
            if algorithm == "parallel":
                for workers in config.worker_counts:
                    rows.append(
                        _run_cell(
                            algorithm, a_text, b_text, na, nb, size, workers,
                            config.repetitions, backend,
                        )
                    )
            else:
                rows.append(
                    _run_cell(
                        algorithm, a_text, b_text, na, nb, size, 1,
                        config.repetitions, backend,
                    )
                )
    return BenchReport(rows)


def format_row(row: BenchRow) -> str:
    return (
        f"{row.algorithm},{row.digits},{row.workers},{row.repetitions},"
        f"{row.mean_seconds:.6e},{row.basic_ops},{row.iterations},{row.carries}"
    )


def report_to_csv(report: BenchReport) -> str:
    """Render a report as CSV text (header plus one line per row)."""
    if not report.rows:
        raise ValueError("refusing to render an empty report")
    lines = [CSV_HEADER]
    lines.extend(format_row(r) for r in report.rows)
    return "\n".join(lines) + "\n"
