"""Pure numpy/Python limb kernels (fallback backend).

Same surface and semantics as the numba module.  The sequential ripple
is an interpreted loop; the block kernels are vectorised over the
worker's slice.
"""
import numpy as np

from tokadd.limbs import LIMB_BASE


def seq_add(a, b, out):
    av = a.tolist()
    bv = b.tolist()
    res = [0] * len(av)
    carry = 0
    ncar = 0
    for i in range(len(av)):
        s = av[i] + bv[i] + carry
        if s >= LIMB_BASE:
            s -= LIMB_BASE
            carry = 1
            ncar += 1
        else:
            carry = 0
        res[i] = s
    out[:] = res
    return carry, ncar


def block_initial(a, b, result, carries, lo, hi, tag):
    if lo == hi:
        return 0, 0, 0
    s = a[lo:hi] + b[lo:hi]
    ovf = s >= LIMB_BASE
    np.subtract(s, LIMB_BASE, out=s, where=ovf)
    result[lo:hi] = s
    carries[lo + 1 : hi + 1] = np.where(ovf, np.int64(tag), np.int64(0))
    nset = int(np.count_nonzero(ovf))
    novf = 1 if (hi == carries.shape[0] - 1 and ovf[-1]) else 0
    return hi - lo, nset - novf, novf


def block_carry(result, carries, lo, hi, tag):
    if lo == hi:
        return 0, 0, 0
    seg = carries[lo:hi]
    # slots tagged with the current iteration are not pending yet
    pend = np.nonzero((seg != 0) & (seg < tag))[0]
    if pend.size == 0:
        return 0, 0, 0
    idx = pend + lo
    carries[idx] = 0
    bumped = result[idx] + 1
    ovf = bumped >= LIMB_BASE
    np.subtract(bumped, LIMB_BASE, out=bumped, where=ovf)
    result[idx] = bumped
    targets = idx[ovf] + 1
    carries[targets] = np.int64(tag)
    novf = 1 if (targets.size and int(targets[-1]) == carries.shape[0] - 1) else 0
    return int(idx.size), int(targets.size) - novf, novf
