"""Limb representation of non-negative decimal integers.

A number is stored as an array of 18-digit decimal limbs, least
significant limb first.  Each limb is an int64 in [0, 10**18), so the
sum of two limbs plus a carry stays below 2**63 and native integer
addition never overflows.  The limb array is kept canonical: the most
significant limb is nonzero unless the value is zero, which is stored
as the single limb 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tokadd.errors import EmptyInputError, InvalidDigitError

LIMB_DIGITS = 18
LIMB_BASE = 10**18

_ASCII_ZERO = ord("0")

# Place values of the 18 digit positions inside one limb, leftmost first.
_POWERS = (10 ** np.arange(LIMB_DIGITS - 1, -1, -1)).astype(np.int64)


@dataclass(eq=False)
class BigNumber:
    """A non-negative integer as least-significant-first 18-digit limbs.

    digit_len is the length of the canonical decimal rendering (no
    leading zeros; zero itself has digit_len 1).
    """

    limbs: np.ndarray
    digit_len: int

    def __post_init__(self):
        if not isinstance(self.limbs, np.ndarray) or self.limbs.ndim != 1:
            raise ValueError("limbs must be a one-dimensional array")
        if self.limbs.dtype != np.int64:
            raise ValueError("limbs must have dtype int64")
        if self.limbs.size == 0:
            raise ValueError("limbs must be non-empty")

    @property
    def limb_count(self) -> int:
        return self.limbs.size

    def __eq__(self, other):
        if not isinstance(other, BigNumber):
            return NotImplemented
        return self.digit_len == other.digit_len and np.array_equal(
            self.limbs, other.limbs
        )

    def __repr__(self):
        return f"BigNumber(<{self.digit_len} digits, {self.limb_count} limbs>)"


def scan_digits(text: str) -> np.ndarray:
    """Validate a decimal string and return its digit values as uint8.

    Raises EmptyInputError for "" and InvalidDigitError (with the
    0-based offset of the first offender) for anything outside '0'..'9'.
    """
    if not text:
        raise EmptyInputError("operand is empty")
    try:
        raw = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise InvalidDigitError(text[exc.start], exc.start) from None
    digits = np.frombuffer(raw, dtype=np.uint8) - _ASCII_ZERO
    # non-digit bytes wrap around and land above 9
    bad = np.nonzero(digits > 9)[0]
    if bad.size:
        offset = int(bad[0])
        raise InvalidDigitError(text[offset], offset)
    return digits


def token_count(digits: int) -> int:
    """Number of 18-digit limbs needed for a decimal length."""
    if digits < 1:
        raise ValueError("digit count must be >= 1")
    return -(-digits // LIMB_DIGITS)


def parse_decimal(text: str) -> BigNumber:
    """Parse a decimal string into limbs, discarding leading zeros."""
    digits = scan_digits(text)
    nonzero = np.nonzero(digits)[0]
    if nonzero.size == 0:
        return BigNumber(np.zeros(1, dtype=np.int64), 1)
    digits = digits[int(nonzero[0]):]
    digit_len = digits.size
    pad = -digit_len % LIMB_DIGITS
    if pad:
        digits = np.concatenate([np.zeros(pad, dtype=np.uint8), digits])
    rows = digits.reshape(-1, LIMB_DIGITS).astype(np.int64)
    limbs = rows @ _POWERS
    return BigNumber(np.ascontiguousarray(limbs[::-1]), digit_len)


def render_decimal(num: BigNumber) -> str:
    """Render limbs as a canonical decimal string.

    The most significant limb prints without padding; every interior
    limb is zero-padded to 18 digits.
    """
    limbs = num.limbs
    head = str(int(limbs[-1]))
    if limbs.size == 1:
        return head
    body = limbs[:-1][::-1].copy()
    cols = np.empty((LIMB_DIGITS, body.size), dtype=np.uint8)
    for j in range(LIMB_DIGITS - 1, -1, -1):
        cols[j] = body % 10
        body //= 10
    cols += _ASCII_ZERO
    return head + cols.T.tobytes().decode("ascii")


def pad_limbs(limbs: np.ndarray, count: int) -> np.ndarray:
    """Zero-extend a limb array to the given length."""
    if limbs.size == count:
        return limbs
    out = np.zeros(count, dtype=np.int64)
    out[: limbs.size] = limbs
    return out


def from_limbs(limbs: np.ndarray) -> BigNumber:
    """Wrap a canonical limb array, deriving its decimal length."""
    head = len(str(int(limbs[-1])))
    return BigNumber(limbs, LIMB_DIGITS * (limbs.size - 1) + head)
