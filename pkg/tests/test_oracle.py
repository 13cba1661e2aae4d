"""The digit-wise oracle is the ground truth for everything else, so it
is itself checked against Python's big integers on random inputs."""
import random

import pytest

from tokadd.errors import EmptyInputError, InvalidDigitError, ZeroInputError
from tokadd.oracle import add_digitwise, bit_length


def test_single_digits():
    assert add_digitwise("2", "3") == "5"
    assert add_digitwise("7", "8") == "15"


def test_full_ripple_extends_length():
    assert add_digitwise("9" * 18, "1") == "1" + "0" * 18


def test_zero_plus_zero():
    assert add_digitwise("0", "0") == "0"


def test_leading_zeros_canonicalised():
    assert add_digitwise("007", "0003") == "10"
    assert add_digitwise("000", "0") == "0"


def test_unequal_lengths():
    assert add_digitwise("1", "999999999999") == "1000000000000"


def test_known_doubling():
    p = "12345678909876543211234567890987654321"
    assert add_digitwise(p, p) == "24691357819753086422469135781975308642"


def test_empty_rejected():
    with pytest.raises(EmptyInputError):
        add_digitwise("", "1")
    with pytest.raises(EmptyInputError):
        add_digitwise("1", "")


def test_invalid_digit_offset():
    with pytest.raises(InvalidDigitError) as exc:
        add_digitwise("12x4", "1")
    assert exc.value.offset == 2
    assert exc.value.char == "x"


def test_random_pairs_match_python_ints():
    r = random.Random(1234)
    for _ in range(500):
        a = str(r.randint(0, 10 ** r.randint(1, 60)))
        b = str(r.randint(0, 10 ** r.randint(1, 60)))
        assert add_digitwise(a, b) == str(int(a) + int(b))


def test_bit_length_basics():
    assert bit_length("1") == 1
    assert bit_length("2") == 2
    assert bit_length("255") == 8
    assert bit_length("256") == 9


def test_bit_length_known_values():
    assert bit_length("9999999999") == 34
    assert bit_length("1" + "0" * 100) == 333


def test_bit_length_ignores_leading_zeros():
    assert bit_length("00016") == 5


def test_bit_length_zero_rejected():
    with pytest.raises(ZeroInputError):
        bit_length("0")
    with pytest.raises(ZeroInputError):
        bit_length("0000")


def test_bit_length_invalid_digit():
    with pytest.raises(InvalidDigitError) as exc:
        bit_length("5a1")
    assert exc.value.offset == 1


def test_bit_length_matches_python_ints():
    r = random.Random(77)
    for _ in range(200):
        v = r.randint(1, 10 ** r.randint(1, 50))
        assert bit_length(str(v)) == v.bit_length()
