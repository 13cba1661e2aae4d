"""Sequential limb-at-a-time addition with operation accounting.

One basic operation per limb position of the longer operand; the
shorter operand is zero-extended so a carry ripples through every
remaining position.  Carry detection compares the limb sum against the
base and subtracts, which keeps everything in native int64 arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tokadd.backend import get_kernels
from tokadd.limbs import BigNumber, from_limbs, pad_limbs


@dataclass(frozen=True)
class OpMetrics:
    basic_ops: int
    carries_generated: int
    result_limbs: int


def add_sequential(
    a: BigNumber, b: BigNumber, *, backend: str | None = None
) -> tuple[BigNumber, OpMetrics]:
    """Add two numbers limb by limb, least significant first."""
    kern = get_kernels(backend)
    n = max(a.limb_count, b.limb_count)
    pa = pad_limbs(a.limbs, n)
    pb = pad_limbs(b.limbs, n)
    out = np.empty(n, dtype=np.int64)
    carry, ncar = kern.seq_add(pa, pb, out)
    if carry:
        out = np.concatenate([out, np.ones(1, dtype=np.int64)])
    return from_limbs(out), OpMetrics(n, int(ncar), out.size)
