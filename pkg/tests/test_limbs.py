import random

import numpy as np
import pytest

from tokadd.errors import EmptyInputError, InvalidDigitError
from tokadd.limbs import (
    LIMB_BASE,
    LIMB_DIGITS,
    BigNumber,
    parse_decimal,
    render_decimal,
    token_count,
)


def test_parse_splits_from_the_right():
    num = parse_decimal("12345678901234567890")
    assert num.limbs.tolist() == [345678901234567890, 12]
    assert num.digit_len == 20


def test_parse_single_limb():
    num = parse_decimal("42")
    assert num.limbs.tolist() == [42]
    assert num.digit_len == 2


def test_parse_strips_leading_zeros():
    num = parse_decimal("000123")
    assert num.limbs.tolist() == [123]
    assert num.digit_len == 3


def test_parse_zero():
    num = parse_decimal("0")
    assert num.limbs.tolist() == [0]
    assert num.digit_len == 1
    assert parse_decimal("0000") == num


def test_parse_empty_rejected():
    with pytest.raises(EmptyInputError):
        parse_decimal("")


def test_parse_invalid_digit_offset():
    with pytest.raises(InvalidDigitError) as exc:
        parse_decimal("12x4")
    assert exc.value.offset == 2
    assert exc.value.char == "x"


def test_parse_non_ascii_rejected():
    with pytest.raises(InvalidDigitError) as exc:
        parse_decimal("12³4")
    assert exc.value.offset == 2


def test_limbs_stay_below_base():
    num = parse_decimal("9" * 95)
    assert num.limb_count == token_count(95)
    assert int(num.limbs.max()) < LIMB_BASE


def test_render_pads_interior_limbs():
    num = BigNumber(np.array([1, 1], dtype=np.int64), 19)
    assert render_decimal(num) == "1000000000000000001"


def test_render_zero():
    assert render_decimal(parse_decimal("0")) == "0"


def test_render_head_unpadded():
    assert render_decimal(parse_decimal("123" + "0" * 18)) == "123" + "0" * 18


@pytest.mark.parametrize(
    "digits,limbs", [(1, 1), (10, 1), (18, 1), (19, 2), (32, 2), (101, 6), (1000, 56)]
)
def test_token_count(digits, limbs):
    assert token_count(digits) == limbs


def test_token_count_rejects_nonpositive():
    with pytest.raises(ValueError):
        token_count(0)
    with pytest.raises(ValueError):
        token_count(-3)


def test_round_trip_random():
    r = random.Random(99)
    for _ in range(300):
        length = r.randint(1, 400)
        text = "".join(r.choice("0123456789") for _ in range(length))
        canonical = text.lstrip("0") or "0"
        num = parse_decimal(text)
        assert render_decimal(num) == canonical
        assert num.digit_len == len(canonical)
        assert num.limb_count == token_count(max(len(canonical), 1))
        # canonical form: top limb nonzero unless the value is zero
        assert num.limbs[-1] != 0 or canonical == "0"


def test_round_trip_matches_int():
    r = random.Random(5)
    for _ in range(100):
        value = r.randint(0, 10**90)
        assert render_decimal(parse_decimal(str(value))) == str(value)


def test_bignumber_equality():
    assert parse_decimal("17") == parse_decimal("0017")
    assert parse_decimal("17") != parse_decimal("18")


def test_bignumber_validates_dtype():
    with pytest.raises(ValueError):
        BigNumber(np.array([1.0]), 1)
    with pytest.raises(ValueError):
        BigNumber(np.array([], dtype=np.int64), 0)
