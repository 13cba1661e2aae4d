"""Digit-at-a-time reference arithmetic.

Ground truth for the limb adders: plain Python, one decimal digit per
step, no shared code with the limb machinery.  Deliberately simple and
slow; everything else in the package is checked against it.
"""
from __future__ import annotations

from tokadd.errors import EmptyInputError, InvalidDigitError, ZeroInputError

_ORD0 = ord("0")


def _digit(text: str, offset: int) -> int:
    d = ord(text[offset]) - _ORD0
    if not 0 <= d <= 9:
        raise InvalidDigitError(text[offset], offset)
    return d


def add_digitwise(a: str, b: str) -> str:
    """Add two decimal strings one digit at a time, carry 0 or 1."""
    if not a or not b:
        raise EmptyInputError("operand is empty")
    la, lb = len(a), len(b)
    carry = 0
    out = []
    for i in range(1, max(la, lb) + 1):
        da = _digit(a, la - i) if i <= la else 0
        db = _digit(b, lb - i) if i <= lb else 0
        s = da + db + carry
        if s >= 10:
            s -= 10
            carry = 1
        else:
            carry = 0
        out.append(chr(s + _ORD0))
    if carry:
        out.append("1")
    text = "".join(reversed(out)).lstrip("0")
    return text or "0"


def bit_length(a: str) -> int:
    """Exact bit length of a positive decimal string.

    Counts how many halvings reach zero, dividing the decimal digit
    sequence by two in place.  Zero has no defined bit length here and
    raises ZeroInputError.
    """
    if not a:
        raise EmptyInputError("operand is empty")
    digits = [_digit(a, i) for i in range(len(a))]
    lead = 0
    while lead < len(digits) and digits[lead] == 0:
        lead += 1
    digits = digits[lead:]
    if not digits:
        raise ZeroInputError("bit length of zero is undefined")
    bits = 0
    while digits:
        quot = []
        rem = 0
        for d in digits:
            cur = rem * 10 + d
            quot.append(cur // 2)
            rem = cur - (cur // 2) * 2
        start = 0
        while start < len(quot) and quot[start] == 0:
            start += 1
        digits = quot[start:]
        bits += 1
    return bits
