"""Parallel limb addition over contiguous worker blocks.

Limb positions are split into contiguous, balanced blocks, one per
worker.  Workers run in lockstep iterations separated by barriers:

    iteration 1   every worker adds the corresponding limbs of its
                  block and records the outgoing carry of each position
    iteration 2+  every worker applies the carries that were pending at
                  the start of the iteration to its own positions; a
                  position that overflows on +1 sets the next carry slot
    final         if only the carry out of the most significant
                  position remains, a single worker appends the leading
                  limb 1 (one basic op, one extra iteration)

The shared carry array has one slot per limb position (slot i feeds
position i) plus a top slot for the carry out of the last position.
Slot i+1 is written only by the owner of position i and consumed only
by the owner of position i+1, so at a block boundary one worker may
read a slot while its left neighbour sets it.  To make that read safe
without extra locking, a slot stores the number of the iteration that
set it instead of a bare flag: a worker treats a slot as pending only
if its tag is older than the current iteration.  A freshly set slot
(tag == current iteration) is deferred, which is also required for
correctness: carries produced in an iteration must not be consumed in
the same iteration.  No position can overflow twice (after its first
overflow its value is at most base-2, and a later +1 cannot reach the
base again), so a slot is set at most once after iteration 1 and the
deferral never loses a carry.

The trace exposes two accountings: `iterations` counts every lockstep
round including the initial add and the final extension, while
`carry_iterations` counts only the propagation rounds in between (the
worst case for n limbs is n-1 propagation rounds, n+1 rounds in total).
"""
from __future__ import annotations

import os
import threading
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from tokadd.backend import get_kernels
from tokadd.errors import WorkerPoolFailure
from tokadd.limbs import BigNumber, from_limbs, pad_limbs

_INITIAL = 0
_CARRY = 1
_STOP = 2


def default_worker_count() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class WorkerAssignment:
    """Contiguous (lo, hi) limb ranges, one per worker."""

    worker_count: int
    blocks: tuple[tuple[int, int], ...]

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(hi - lo for lo, hi in self.blocks)

    def owner_of(self, position: int) -> int:
        """Index of the worker that owns a limb position."""
        limbs = self.blocks[-1][1]
        if not 0 <= position < limbs:
            raise IndexError(f"position {position} out of range")
        starts = [lo for lo, _ in self.blocks]
        return bisect_right(starts, position) - 1


def plan_assignment(limb_count: int, workers: int) -> WorkerAssignment:
    """Split limb positions into balanced contiguous blocks.

    The first limb_count % workers workers receive one extra position;
    with more workers than positions the surplus blocks are empty.
    """
    if limb_count < 1:
        raise ValueError("limb_count must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    base, extra = divmod(limb_count, workers)
    blocks = []
    lo = 0
    for w in range(workers):
        size = base + (1 if w < extra else 0)
        blocks.append((lo, lo + size))
        lo += size
    return WorkerAssignment(workers, tuple(blocks))


@dataclass(frozen=True)
class CarryState:
    """Snapshot of the carry flags after an iteration.

    carries has one slot per limb position plus the top slot; values
    are 0 or 1.  iteration is the round that produced the snapshot.
    """

    carries: np.ndarray
    iteration: int


def carries_pending(state: CarryState) -> bool:
    """True if any carry slot (including the top slot) is set."""
    return bool(np.any(state.carries))


@dataclass(frozen=True)
class IterationRecord:
    """What one lockstep round did.

    slot_sets / slot_consumes are filled only on instrumented runs and
    list the carry slots that became set, respectively were cleared,
    during the round.
    """

    index: int
    kind: str  # "initial" | "carry" | "finalize"
    ops_per_worker: tuple[int, ...]
    carries_set: int
    slot_sets: tuple[int, ...] | None = None
    slot_consumes: tuple[int, ...] | None = None

    @property
    def basic_ops(self) -> int:
        return sum(self.ops_per_worker)


@dataclass
class ParallelTrace:
    worker_count: int
    limb_count: int
    assignment: WorkerAssignment
    per_iteration: list[IterationRecord] = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.per_iteration)

    @property
    def carry_iterations(self) -> int:
        """Propagation rounds only (excludes the initial add and the
        final result extension)."""
        return sum(1 for r in self.per_iteration if r.kind == "carry")

    @property
    def finalized(self) -> bool:
        return bool(self.per_iteration) and self.per_iteration[-1].kind == "finalize"

    @property
    def total_basic_ops(self) -> int:
        return sum(r.basic_ops for r in self.per_iteration)

    @property
    def total_carries(self) -> int:
        return sum(r.carries_set for r in self.per_iteration)


class _InlineRun:
    """Single-threaded engine: the caller executes every block."""

    def __init__(self, kern, blocks, pa, pb, result, carries):
        self._kern = kern
        self._blocks = blocks
        self._args = (pa, pb, result, carries)

    def step(self, cmd, tag):
        pa, pb, result, carries = self._args
        out = []
        for w, (lo, hi) in enumerate(self._blocks):
            try:
                if cmd == _INITIAL:
                    out.append(
                        self._kern.block_initial(pa, pb, result, carries, lo, hi, tag)
                    )
                else:
                    out.append(self._kern.block_carry(result, carries, lo, hi, tag))
            except Exception as exc:
                raise WorkerPoolFailure(f"worker {w} failed: {exc!r}") from exc
        return out

    def shutdown(self):
        pass


class _ThreadedRun:
    """One thread per worker, reused across iterations.

    The driver and the workers share a pair of rendezvous points built
    from one reusable barrier: the driver publishes the command and tag,
    everybody meets to start the round, everybody meets again when the
    round's kernels are done.  A failing worker aborts the barrier so
    the driver (and the other workers) cannot deadlock.
    """

    def __init__(self, kern, blocks, pa, pb, result, carries):
        self._kern = kern
        self._blocks = blocks
        self._args = (pa, pb, result, carries)
        self._barrier = threading.Barrier(len(blocks) + 1)
        self._cmd = _STOP
        self._tag = 0
        self._results: list = [None] * len(blocks)
        self._errors: list = []
        self._threads = [
            threading.Thread(target=self._worker, args=(w,), daemon=True)
            for w in range(len(blocks))
        ]
        for t in self._threads:
            t.start()

    def _worker(self, w):
        pa, pb, result, carries = self._args
        lo, hi = self._blocks[w]
        while True:
            try:
                self._barrier.wait()
            except threading.BrokenBarrierError:
                return
            cmd = self._cmd
            if cmd == _STOP:
                return
            try:
                if cmd == _INITIAL:
                    self._results[w] = self._kern.block_initial(
                        pa, pb, result, carries, lo, hi, self._tag
                    )
                else:
                    self._results[w] = self._kern.block_carry(
                        result, carries, lo, hi, self._tag
                    )
            except BaseException as exc:
                self._errors.append((w, exc))
                self._barrier.abort()
                return
            try:
                self._barrier.wait()
            except threading.BrokenBarrierError:
                return

    def step(self, cmd, tag):
        self._cmd = cmd
        self._tag = tag
        try:
            self._barrier.wait()  # release the round
            self._barrier.wait()  # wait for completion
        except threading.BrokenBarrierError:
            pass
        if self._errors:
            self._join()
            w, exc = self._errors[0]
            raise WorkerPoolFailure(f"worker {w} failed: {exc!r}") from exc
        return list(self._results)

    def _join(self):
        for t in self._threads:
            t.join()

    def shutdown(self):
        self._cmd = _STOP
        try:
            self._barrier.wait()
        except threading.BrokenBarrierError:
            pass
        self._join()


def _snapshot_events(before, carries):
    after_set = carries != 0
    before_set = before != 0
    sets = tuple(int(i) for i in np.nonzero(~before_set & after_set)[0])
    consumes = tuple(int(i) for i in np.nonzero(before_set & ~after_set)[0])
    return sets, consumes


def _record(trace, index, kind, ops, carries_set, before, carries):
    sets = consumes = None
    if before is not None:
        sets, consumes = _snapshot_events(before, carries)
    trace.per_iteration.append(
        IterationRecord(index, kind, ops, carries_set, sets, consumes)
    )


def _drive(run, trace, result, carries, n, termination_scan, instrument):
    m = trace.worker_count
    before = carries.copy() if instrument else None
    results = run.step(_INITIAL, 1)
    ops = tuple(int(r[0]) for r in results)
    pending = sum(int(r[1]) for r in results)
    novf = sum(int(r[2]) for r in results)
    overflow = bool(novf)
    _record(trace, 1, "initial", ops, pending + novf, before, carries)
    t = 1
    while True:
        if termination_scan:
            # conformance path: decide from a full scan of the flags
            state = CarryState((carries != 0).astype(np.uint8), t)
            if not carries_pending(state):
                break
            pending = int(np.count_nonzero(carries[:n]))
            overflow = bool(carries[n])
        elif not (pending or overflow):
            break
        t += 1
        before = carries.copy() if instrument else None
        if pending:
            results = run.step(_CARRY, t)
            ops = tuple(int(r[0]) for r in results)
            pending = sum(int(r[1]) for r in results)
            novf = sum(int(r[2]) for r in results)
            overflow = overflow or bool(novf)
            _record(trace, t, "carry", ops, pending + novf, before, carries)
        else:
            # only the top slot is set: append the leading limb 1
            result[n] = 1
            carries[n] = 0
            ops = [0] * m
            ops[trace.assignment.owner_of(n - 1)] = 1
            _record(trace, t, "finalize", tuple(ops), 0, before, carries)
            pending = 0
            overflow = False


def add_parallel(
    a: BigNumber,
    b: BigNumber,
    workers: int | None = None,
    *,
    backend: str | None = None,
    termination_scan: bool = False,
    instrument: bool = False,
) -> tuple[BigNumber, ParallelTrace]:
    """Add two numbers with a block-parallel carry protocol.

    workers defaults to the detected hardware parallelism; workers=1
    runs the same protocol inline without threads.  By default the
    driver decides termination from per-worker "set a carry" counts
    aggregated at the barrier; termination_scan=True decides from an
    O(n) scan of the carry flags instead (same observable behaviour,
    useful for conformance checks).  instrument=True additionally
    records which carry slots each round set and consumed.
    """
    kern = get_kernels(backend)
    m = default_worker_count() if workers is None else int(workers)
    if m < 1:
        raise ValueError("workers must be >= 1")
    n = max(a.limb_count, b.limb_count)
    assignment = plan_assignment(n, m)
    pa = pad_limbs(a.limbs, n)
    pb = pad_limbs(b.limbs, n)
    result = np.zeros(n + 1, dtype=np.int64)
    carries = np.zeros(n + 1, dtype=np.int64)
    trace = ParallelTrace(worker_count=m, limb_count=n, assignment=assignment)
    engine = _InlineRun if m == 1 else _ThreadedRun
    run = engine(kern, assignment.blocks, pa, pb, result, carries)
    try:
        _drive(run, trace, result, carries, n, termination_scan, instrument)
    finally:
        run.shutdown()
    k = n + 1 if trace.finalized else n
    return from_limbs(result[:k].copy()), trace
