"""Big-integer decimal addition on 18-digit limbs.

Numbers are arrays of 18-digit decimal limbs (int64, least significant
first).  The package provides a sequential ripple adder, a
block-parallel adder with a barrier-synchronised carry protocol, a
digit-at-a-time oracle used as ground truth, a benchmark harness and a
command line front end.
"""
from tokadd.bench import (
    BenchConfig,
    BenchReport,
    BenchRow,
    gen_random_operand,
    gen_worst_case,
    report_to_csv,
    run_benchmark,
)
from tokadd.errors import (
    EmptyInputError,
    InvalidDigitError,
    WorkerPoolFailure,
    ZeroInputError,
)
from tokadd.limbs import (
    LIMB_BASE,
    LIMB_DIGITS,
    BigNumber,
    parse_decimal,
    render_decimal,
    token_count,
)
from tokadd.oracle import add_digitwise, bit_length
from tokadd.parallel import (
    CarryState,
    ParallelTrace,
    WorkerAssignment,
    add_parallel,
    carries_pending,
    plan_assignment,
)
from tokadd.sequential import OpMetrics, add_sequential

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "BigNumber",
    "CarryState",
    "EmptyInputError",
    "InvalidDigitError",
    "LIMB_BASE",
    "LIMB_DIGITS",
    "OpMetrics",
    "ParallelTrace",
    "WorkerAssignment",
    "WorkerPoolFailure",
    "ZeroInputError",
    "add_digitwise",
    "add_parallel",
    "add_sequential",
    "bit_length",
    "carries_pending",
    "gen_random_operand",
    "gen_worst_case",
    "parse_decimal",
    "plan_assignment",
    "render_decimal",
    "report_to_csv",
    "run_benchmark",
    "token_count",
]
