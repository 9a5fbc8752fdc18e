"""Finite words as integer sequences, the text format, and power predicates."""
from __future__ import annotations

from typing import Sequence

import numpy as np


def as_word(letters) -> np.ndarray:
    """Coerce a sequence of small non-negative integers (or a digit string) to an int array."""
    if isinstance(letters, str):
        return parse_word(letters)
    arr = np.asarray(letters, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("a word must be one-dimensional")
    return arr


def format_word(word: Sequence[int], alphabet_size: int | None = None) -> str:
    """Render a word in the text format.

    One decimal digit per letter when the alphabet fits in ``0..9``,
    comma-separated integers otherwise.
    """
    letters = [int(a) for a in word]
    if alphabet_size is None:
        alphabet_size = max(letters, default=0) + 1
    if alphabet_size <= 10:
        return "".join(str(a) for a in letters)
    return ",".join(str(a) for a in letters)


def parse_word(text: str) -> np.ndarray:
    text = text.strip()
    if not text:
        return np.zeros(0, dtype=np.int64)
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"not a comma-separated word: {text[:40]!r}")
        return np.array([int(p) for p in parts], dtype=np.int64)
    if not text.isdigit():
        raise ValueError(f"not a digit word: {text[:40]!r}")
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8).astype(np.int64) - ord("0")


def _arr(w) -> np.ndarray:
    # character strings compare letter by letter, like any other sequence
    return np.array(list(w)) if isinstance(w, str) else np.asarray(w)


def is_power_of(x: Sequence, z: Sequence) -> bool:
    """True iff ``x = z^k z'`` with ``z'`` a prefix of ``z``, i.e. x is a prefix of z^omega."""
    x = _arr(x)
    z = _arr(z)
    if len(z) == 0:
        raise ValueError("cannot take powers of the empty word")
    if len(x) == 0:
        return True
    reps = -(-len(x) // len(z))
    return bool(np.array_equal(np.tile(z, reps)[: len(x)], x))


def is_prefix(a: Sequence, b: Sequence) -> bool:
    """True iff ``a`` is a prefix of ``b``."""
    a = _arr(a)
    b = _arr(b)
    return len(a) <= len(b) and bool(np.array_equal(b[: len(a)], a))


def is_suffix(a: Sequence, b: Sequence) -> bool:
    a = _arr(a)
    b = _arr(b)
    return len(a) <= len(b) and bool(np.array_equal(b[len(b) - len(a):], a))


def is_factor(a: Sequence, b: Sequence) -> bool:
    a = _arr(a).tolist()
    b = _arr(b).tolist()
    n = len(a)
    return any(b[i:i + n] == a for i in range(len(b) - n + 1))


def distinct_letters(word: Sequence) -> int:
    return len(set(int(a) for a in word))
