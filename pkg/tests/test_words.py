import itertools

import pytest
from hypothesis import given, strategies as st

from parryattr.words import format_word, is_factor, is_power_of, is_prefix, is_suffix, parse_word


def brute_power(x, z):
    """Try every split x = z^k z' directly."""
    for k in range(len(x) // len(z) + 1):
        head = list(z) * k
        rest = list(x)[len(head):]
        if list(x)[:len(head)] == head and len(rest) <= len(z) and list(z)[:len(rest)] == rest:
            return True
    return False


@pytest.mark.parametrize("x, z, expected", [
    ("barbar", "bar", True),
    ("salsa", "sal", True),
    ("0010010", "001", True),
    ("00100102", "001", False),
    ("", "a", True),
    ("ba", "bar", True),
    ("br", "bar", False),
])
def test_power_examples(x, z, expected):
    assert is_power_of(x, z) is expected


def test_power_rejects_empty_base():
    with pytest.raises(ValueError):
        is_power_of("abc", "")


@given(st.lists(st.integers(0, 2), max_size=30), st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_power_matches_brute_force(x, z):
    assert is_power_of(x, z) == brute_power(x, z)


def test_power_exhaustive_binary():
    for n in range(0, 9):
        for x in itertools.product((0, 1), repeat=n):
            for k in range(1, 4):
                for z in itertools.product((0, 1), repeat=k):
                    assert is_power_of(x, z) == brute_power(x, z)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=40))
def test_text_round_trip_small_alphabet(word):
    text = format_word(word, 10)
    assert text.isdigit()
    assert parse_word(text).tolist() == word


def test_text_large_alphabet_uses_commas():
    assert format_word([0, 11, 3], 12) == "0,11,3"
    assert parse_word("0,11,3").tolist() == [0, 11, 3]


def test_prefix_suffix_factor():
    assert is_prefix("ab", "abc") and not is_prefix("bc", "abc")
    assert is_suffix("bc", "abc") and not is_suffix("ab", "abc")
    assert is_factor("b", "abc") and not is_factor("ca", "abc")
    assert is_prefix("", "x") and is_suffix("", "x") and is_factor("", "x")
