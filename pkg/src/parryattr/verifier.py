"""Ground truth for string attractors: verification with witnesses and exact minimum search.

Two independent checkers are provided. ``method="automaton"`` (the default)
classifies all distinct factors through a suffix automaton in linear time;
``method="naive"`` enumerates distinct factors by length and scans every
occurrence. Both report the same canonical witness: the shortest uncovered
factor, ties broken by its leftmost occurrence.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import PreconditionError
from .words import is_power_of

DEFAULT_MINIMAL_CAP = 64


@dataclass(frozen=True)
class OccurrenceInterval:
    start: int
    end: int  # exclusive

    def contains(self, position: int) -> bool:
        return self.start <= position < self.end

    def to_list(self) -> list[int]:
        return [self.start, self.end]


@dataclass(frozen=True)
class Witness:
    factor: tuple
    occurrences: tuple[OccurrenceInterval, ...]

    def to_dict(self, render=None) -> dict:
        factor = render(self.factor) if render else list(self.factor)
        return {"factor": factor, "occurrences": [o.to_list() for o in self.occurrences]}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Witness | None = None
    distinct_factors: int = 0
    covered: int = 0  # distinct factors with an occurrence meeting the set

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, render=None) -> dict:
        return {
            "holds": self.holds,
            "witness": self.witness.to_dict(render) if self.witness else None,
            "distinct_factors": self.distinct_factors,
            "covered": self.covered,
        }


def _encode(word) -> tuple[np.ndarray, list]:
    """Map arbitrary letters to codes ``0..sigma-1``; returns (codes, original letter list)."""
    if isinstance(word, np.ndarray) and word.dtype.kind in "iu":
        arr = word.astype(np.int64, copy=False)
    else:
        letters = list(word)
        if letters and all(isinstance(a, (int, np.integer)) for a in letters):
            arr = np.asarray(letters, dtype=np.int64)
        else:
            symbols = sorted(set(letters), key=repr)
            code = {a: i for i, a in enumerate(symbols)}
            return np.array([code[a] for a in letters], dtype=np.int64), letters
    if len(arr) and arr.min() < 0:
        raise PreconditionError("letters must be non-negative integers")
    return arr, arr.tolist()


def _mask(n: int, gamma: Iterable[int]) -> np.ndarray:
    mask = np.zeros(n, dtype=np.bool_)
    for g in gamma:
        g = int(g)
        if not 0 <= g < n:
            raise PreconditionError(f"position {g} outside word of length {n}")
        mask[g] = True
    return mask


def occurrences(word: Sequence, factor: Sequence) -> list[OccurrenceInterval]:
    """All occurrence intervals of ``factor`` in ``word`` by direct scan."""
    w = list(word)
    f = list(factor)
    L = len(f)
    return [OccurrenceInterval(i, i + L) for i in range(len(w) - L + 1) if w[i:i + L] == f]


def factor_crosses(word: Sequence, factor: Sequence, gamma: Iterable[int]) -> bool:
    """True iff some occurrence of ``factor`` in ``word`` contains a position of ``gamma``."""
    gamma = set(int(g) for g in gamma)
    return any(any(o.contains(g) for g in gamma) for o in occurrences(word, factor))


def _witness(letters: list, start: int, length: int) -> Witness:
    factor = tuple(letters[start:start + length])
    return Witness(factor, tuple(occurrences(letters, factor)))


class _Automaton:
    """Suffix automaton of one word, reusable across many candidate sets."""

    def __init__(self, word):
        self.codes, self.letters = _encode(word)
        self.n = len(self.codes)
        sigma = int(self.codes.max()) + 1 if self.n else 1
        self.arrays = _kernels.build_sam(self.codes, sigma)

    def check(self, gamma: Iterable[int]) -> Verdict:
        if self.n == 0:
            return Verdict(True)
        mask = _mask(self.n, gamma)
        length, start, distinct, covered = _kernels.check_sam(*self.arrays, self.n, mask)
        if length == 0:
            return Verdict(True, None, int(distinct), int(covered))
        return Verdict(False, _witness(self.letters, int(start), int(length)), int(distinct), int(covered))


def _naive(word, gamma: Iterable[int]) -> Verdict:
    _, letters = _encode(word)
    n = len(letters)
    gamma = sorted(set(int(g) for g in gamma))
    _mask(n, gamma)
    seen: set[tuple] = set()
    covered = 0
    first_failure = None
    for L in range(1, n + 1):
        for i in range(n - L + 1):
            f = tuple(letters[i:i + L])
            if f in seen:
                continue
            seen.add(f)
            hit = False
            for j in range(i, n - L + 1):
                if tuple(letters[j:j + L]) == f and any(j <= g < j + L for g in gamma):
                    hit = True
                    break
            if hit:
                covered += 1
            elif first_failure is None:
                first_failure = (i, L)
    if first_failure is None:
        return Verdict(True, None, len(seen), covered)
    i, L = first_failure
    return Verdict(False, _witness(letters, i, L), len(seen), covered)


def is_attractor(word, gamma: Iterable[int], method: str = "automaton") -> Verdict:
    """Decide whether ``gamma`` is a string attractor of ``word``."""
    if method == "automaton":
        return _Automaton(word).check(gamma)
    if method == "naive":
        return _naive(word, gamma)
    raise ValueError(f"unknown method {method!r}")


def _covering_candidates(letters: list, size: int) -> Iterable[tuple[int, ...]]:
    """Subsets of positions of the given size touching every letter, in lexicographic order."""
    by_letter: dict = {}
    for i, a in enumerate(letters):
        by_letter.setdefault(a, []).append(i)
    if size == len(by_letter):
        yield from sorted(tuple(sorted(c)) for c in product(*by_letter.values()))
        return
    need = set(by_letter)
    for combo in combinations(range(len(letters)), size):
        if {letters[i] for i in combo} == need:
            yield combo


def minimal_attractor(word, cap: int = DEFAULT_MINIMAL_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact minimum attractor size and the lexicographically first set achieving it."""
    _, letters = _encode(word)
    n = len(letters)
    if n > cap:
        raise PreconditionError(f"word of length {n} exceeds exhaustive-search cap {cap}")
    if n == 0:
        return 0, ()
    automaton = _Automaton(word)
    for size in range(len(set(letters)), n + 1):
        for candidate in _covering_candidates(letters, size):
            if automaton.check(candidate).holds:
                return size, candidate
    raise AssertionError("the full position set is always an attractor")


def power_transfer_check(x, z, gamma: Iterable[int]) -> Verdict:
    """Check that ``gamma + {|z|-1}`` is an attractor of ``x`` when x is a power of z and gamma attracts z."""
    z_codes, _ = _encode(z)
    x_codes, _ = _encode(x)
    if len(z_codes) == 0 or len(x_codes) < len(z_codes):
        raise PreconditionError("need 1 <= |z| <= |x|")
    if not is_power_of(x_codes, z_codes):
        raise PreconditionError("x is not a power of z")
    gamma = set(int(g) for g in gamma)
    if not is_attractor(z, gamma).holds:
        raise PreconditionError("gamma is not an attractor of z")
    return is_attractor(x, gamma | {len(z_codes) - 1})
