"""Numba-compiled limb kernels (default backend).

All kernels release the GIL so parallel workers can overlap.  The
carries array stores, per slot, the number of the iteration that set
it (0 = clear); callers treat any slot with 0 < value < current
iteration as pending.  Return values are

    seq_add       -> (carry_out, carries_generated)
    block_initial -> (ops, sets_below_top, top_slot_set)
    block_carry   -> (ops, sets_below_top, top_slot_set)

where the top slot is the last element of the carries array and holds
the carry out of the most significant position.
"""
from numba import njit

from tokadd.limbs import LIMB_BASE


@njit(cache=True, nogil=True)
def seq_add(a, b, out):
    carry = 0
    ncar = 0
    for i in range(a.shape[0]):
        s = a[i] + b[i] + carry
        if s >= LIMB_BASE:
            s -= LIMB_BASE
            carry = 1
            ncar += 1
        else:
            carry = 0
        out[i] = s
    return carry, ncar


@njit(cache=True, nogil=True)
def block_initial(a, b, result, carries, lo, hi, tag):
    ops = 0
    nset = 0
    novf = 0
    top = carries.shape[0] - 1
    for i in range(lo, hi):
        s = a[i] + b[i]
        if s >= LIMB_BASE:
            result[i] = s - LIMB_BASE
            carries[i + 1] = tag
            if i + 1 == top:
                novf = 1
            else:
                nset += 1
        else:
            result[i] = s
            carries[i + 1] = 0
        ops += 1
    return ops, nset, novf


@njit(cache=True, nogil=True)
def block_carry(result, carries, lo, hi, tag):
    ops = 0
    nset = 0
    novf = 0
    top = carries.shape[0] - 1
    for i in range(lo, hi):
        c = carries[i]
        # a slot tagged with the current iteration was set by the left
        # neighbour moments ago and must wait until the next iteration
        if c != 0 and c < tag:
            carries[i] = 0
            s = result[i] + 1
            if s >= LIMB_BASE:
                result[i] = s - LIMB_BASE
                carries[i + 1] = tag
                if i + 1 == top:
                    novf = 1
                else:
                    nset += 1
            else:
                result[i] = s
            ops += 1
    return ops, nset, novf
