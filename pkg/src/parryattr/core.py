"""Parry parameters, their morphisms, and prefix/length bookkeeping of the fixed point."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapExceeded, ConsistencyError, InvalidParameters, PreconditionError
from .words import is_prefix

DEFAULT_MAX_WORD = 10**7


def default_max_word() -> int:
    env = os.environ.get("PARRY_MAX_WORD")
    if env:
        value = int(env)
        if value <= 0:
            raise InvalidParameters("PARRY_MAX_WORD must be positive")
        return value
    return DEFAULT_MAX_WORD


class Kind(enum.Enum):
    SIMPLE = "simple"
    NON_SIMPLE_BINARY = "nonsimple"


@dataclass(frozen=True)
class ParryParameters:
    """Numeration seed: either ``d_beta(1) = t_1..t_m`` or the binary morphism ``0 -> 0^p 1, 1 -> 0^q 1``."""

    kind: Kind
    t: tuple[int, ...] = ()
    p: int = 0
    q: int = 0

    @classmethod
    def simple(cls, t: Sequence[int]) -> "ParryParameters":
        return cls(Kind.SIMPLE, t=tuple(int(x) for x in t))

    @classmethod
    def nonsimple(cls, p: int, q: int) -> "ParryParameters":
        return cls(Kind.NON_SIMPLE_BINARY, p=int(p), q=int(q))

    @property
    def is_simple(self) -> bool:
        return self.kind is Kind.SIMPLE

    @property
    def m(self) -> int:
        return len(self.t) if self.is_simple else 1

    @property
    def alphabet_size(self) -> int:
        return len(self.t) if self.is_simple else 2

    def label(self) -> str:
        if self.is_simple:
            return "t=" + ",".join(map(str, self.t))
        return f"nsp={self.p},{self.q}"

    def to_dict(self) -> dict:
        if self.is_simple:
            return {"kind": "simple", "t": list(self.t)}
        return {"kind": "nonsimple", "p": self.p, "q": self.q}


def _digits(ds: Sequence[int]) -> str:
    return "".join(map(str, ds)) if all(d < 10 for d in ds) else ",".join(map(str, ds))


def _padded_less(a: Sequence[int], b: Sequence[int]) -> bool:
    """``a 0^omega`` strictly lexicographically below ``b 0^omega``."""
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return a < b


def validate(params: ParryParameters) -> ParryParameters:
    """Return ``params`` unchanged if they define a Parry sequence, raise ``InvalidParameters`` otherwise."""
    if params.is_simple:
        t = params.t
        m = len(t)
        if m < 2:
            raise InvalidParameters(f"need m >= 2 digits, got {m}")
        if any(x < 0 for x in t):
            raise InvalidParameters(f"digits must be non-negative: {_digits(t)}")
        if t[0] < 1:
            raise InvalidParameters("t_1 must be >= 1")
        if t[-1] < 1:
            raise InvalidParameters("t_m must be >= 1")
        for i in range(2, m + 1):
            tail = t[i - 1:]
            if not _padded_less(tail, t):
                raise InvalidParameters(
                    f"lexicographic condition fails at i={i}: "
                    f"{_digits(tail)}0^w is not below {_digits(t)}0^w"
                )
        return params
    if params.q < 1:
        raise InvalidParameters(f"need q >= 1, got q={params.q}")
    if params.p <= params.q:
        raise InvalidParameters(f"need p > q, got p={params.p}, q={params.q}")
    return params


def morphism(params: ParryParameters) -> list[tuple[int, ...]]:
    """Images of every letter, indexed by letter."""
    if params.is_simple:
        t = params.t
        m = len(t)
        images = [(0,) * t[i] + (i + 1,) for i in range(m - 1)]
        images.append((0,) * t[m - 1])
        return images
    return [(0,) * params.p + (1,), (0,) * params.q + (1,)]


def morphism_image(params: ParryParameters, letter: int) -> tuple[int, ...]:
    if not 0 <= letter < params.alphabet_size:
        raise PreconditionError(f"letter {letter} outside alphabet of size {params.alphabet_size}")
    return morphism(params)[letter]


def k_index(params: ParryParameters) -> int:
    """Smallest ``j`` in ``1..m-1`` with ``t_{m-j} != 0``."""
    if not params.is_simple:
        raise PreconditionError("k is defined for simple parameters only")
    t = params.t
    m = len(t)
    for j in range(1, m):
        if t[m - j - 1] != 0:
            return j
    raise ConsistencyError("no nonzero digit among t_1..t_{m-1}")


class PrefixEngine:
    """Memoised prefixes ``u_n = phi^n(0)`` of the fixed point and their lengths.

    Levels are built by the block recurrences, not by rewriting; every
    materialised word is bounded by ``max_len`` letters.
    """

    def __init__(self, params: ParryParameters, max_len: int | None = None):
        self.params = validate(params)
        self.max_len = default_max_word() if max_len is None else int(max_len)
        if self.max_len <= 0:
            raise InvalidParameters("max_len must be positive")
        self._U = [1]  # U_n
        self._V = [1]  # |phi^n(1)|, non-simple only
        self._u: dict[int, np.ndarray] = {}
        self._img1: dict[int, np.ndarray] = {}
        self._long = np.zeros(1, dtype=np.int64)  # longest known prefix of the fixed point
        self._long.setflags(write=False)

    @property
    def m(self) -> int:
        return self.params.m

    # lengths -------------------------------------------------------------

    def U(self, n: int) -> int:
        if n < 0:
            return 0
        while len(self._U) <= n:
            self._grow_lengths()
        return self._U[n]

    def _grow_lengths(self) -> None:
        n = len(self._U)
        if self.params.is_simple:
            t = self.params.t
            m = len(t)
            total = sum(t[i] * (self._U[n - 1 - i] if n - 1 - i >= 0 else 0) for i in range(m))
            self._U.append(total + (1 if n <= m - 1 else 0))
        else:
            p, q = self.params.p, self.params.q
            u, v = self._U[n - 1], self._V[n - 1]
            self._U.append(p * u + v)
            self._V.append(q * u + v)

    def image_length(self, letter: int, n: int) -> int:
        """``|phi^n(letter)|``."""
        if n < 0:
            raise PreconditionError("n must be >= 0")
        if self.params.is_simple:
            if letter == 0:
                return self.U(n)
            images = morphism(self.params)
            if n == 0:
                return 1
            return sum(self.image_length(b, n - 1) for b in images[letter])
        self.U(n)
        return self._U[n] if letter == 0 else self._V[n]

    def level_of(self, length: int) -> int:
        """Largest ``n`` with ``U_n <= length``."""
        if length < 1:
            raise PreconditionError("length must be >= 1")
        n = 0
        while self.U(n + 1) <= length:
            n += 1
        return n

    # words ---------------------------------------------------------------

    def _check_cap(self, size: int) -> None:
        if size > self.max_len:
            raise CapExceeded(f"word of length {size} exceeds cap {self.max_len}")

    def prefix_u(self, n: int) -> np.ndarray:
        """``u_n = phi^n(0)``; empty for ``n < 0``."""
        if n < 0:
            return np.zeros(0, dtype=np.int64)
        cached = self._u.get(n)
        if cached is not None:
            return cached
        self._check_cap(self.U(n))
        if n == 0:
            word = np.zeros(1, dtype=np.int64)
        elif self.params.is_simple:
            t = self.params.t
            m = len(t)
            blocks = []
            for i in range(1, m + 1):
                if n - i < 0:
                    break
                blocks.extend([self.prefix_u(n - i)] * t[i - 1])
            if n <= m - 1:
                blocks.append(np.array([n], dtype=np.int64))
            word = np.concatenate(blocks)
        else:
            prev = self.prefix_u(n - 1)
            word = np.concatenate([prev] * self.params.p + [self.image(1, n - 1)])
        if len(word) != self.U(n):
            raise ConsistencyError(f"|u_{n}| = {len(word)} but U_{n} = {self.U(n)}")
        word.setflags(write=False)
        self._u[n] = word
        if len(word) > len(self._long):
            self._long = word
        return word

    def image(self, letter: int, n: int) -> np.ndarray:
        """``phi^n(letter)``."""
        if not 0 <= letter < self.params.alphabet_size:
            raise PreconditionError(f"letter {letter} outside alphabet")
        if letter == 0:
            return self.prefix_u(n)
        if not self.params.is_simple:
            cached = self._img1.get(n)
            if cached is not None:
                return cached
            self._check_cap(self.image_length(1, n))
            if n == 0:
                word = np.ones(1, dtype=np.int64)
            else:
                word = np.concatenate([self.prefix_u(n - 1)] * self.params.q + [self.image(1, n - 1)])
            word.setflags(write=False)
            self._img1[n] = word
            return word
        if n == 0:
            return np.array([letter], dtype=np.int64)
        self._check_cap(self.image_length(letter, n))
        images = morphism(self.params)
        parts = [self.image(b, n - 1) for b in images[letter]]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def prefix_of_length(self, length: int) -> np.ndarray:
        """The length-``length`` prefix of the fixed point."""
        if length < 1:
            raise PreconditionError("length must be >= 1")
        self._check_cap(length)
        if length <= len(self._long):
            return self._long[:length]
        n = self.level_of(length)
        if self.U(n) == length:
            return self.prefix_u(n)
        # U_n < length < U_{n+1}: walk the block decomposition of u_{n+1}
        base = self.prefix_u(n)
        if self.params.is_simple:
            t = self.params.t
            m = len(t)
            blocks: list[np.ndarray] = []
            for i in range(1, m + 1):
                if n + 1 - i < 0:
                    break
                blocks.extend([base[: self.U(n + 1 - i)]] * t[i - 1])
            if n + 1 <= m - 1:
                blocks.append(np.array([n + 1], dtype=np.int64))
        else:
            blocks = [base] * self.params.p + [self.image(1, n)]
        out = []
        size = 0
        for block in blocks:
            take = min(len(block), length - size)
            out.append(block[:take])
            size += take
            if size == length:
                break
        word = np.concatenate(out)
        word.setflags(write=False)
        self._long = word
        return word

    # special prefixes (simple only) ----------------------------------------

    def _require_simple(self, what: str) -> None:
        if not self.params.is_simple:
            raise PreconditionError(f"{what} is defined for simple parameters only")

    def _special_exponents(self, which: str) -> list[int]:
        t = self.params.t
        head = {"z": t[0] - t[-1], "s": t[0] - t[-1] + 1, "p": t[0] - 1}
        if which not in head:
            raise PreconditionError(f"unknown special prefix {which!r}")
        return [head[which]] + list(t[1:])

    def special_prefix(self, which: str, n: int) -> np.ndarray:
        """``z_n``, ``s_n`` or ``p_n`` as the literal block concatenation, checked to be a prefix."""
        self._require_simple("special_prefix")
        m = self.m
        if n < m:
            raise PreconditionError(f"special prefixes need n >= m (n={n}, m={m})")
        exps = self._special_exponents(which)
        blocks = [self.prefix_u(n)]
        for i, e in enumerate(exps):
            blocks.extend([self.prefix_u(n - m - i)] * e)
        word = np.concatenate(blocks)
        if not np.array_equal(word, self.prefix_of_length(len(word))):
            raise ConsistencyError(f"{which}_{n} is not a prefix of the fixed point")
        return word

    def special_length(self, which: str, n: int) -> int:
        self._require_simple("special_prefix")
        m = self.m
        if n < m:
            raise PreconditionError(f"special prefixes need n >= m (n={n}, m={m})")
        exps = self._special_exponents(which)
        return self.U(n) + sum(e * self.U(n - m - i) for i, e in enumerate(exps))

    def Z(self, n: int) -> int:
        return self.special_length("z", n)

    def S(self, n: int) -> int:
        return self.special_length("s", n)

    def P(self, n: int) -> int:
        self._require_simple("P")
        if n < 0:
            raise PreconditionError("n must be >= 0")
        m = self.m
        if n <= m - 1:
            return self.U(n)
        return self.U(n) + self.U(n - m + 1) - self.U(n - m) - 1

    def Q(self, n: int) -> int:
        """Length of the longest prefix of the fixed point that is a power of ``u_n``.

        Scanned within ``u_{n+2}``; reaching its end without a mismatch is
        reported as an error rather than a value.
        """
        self._require_simple("Q")
        if n < 0:
            raise PreconditionError("n must be >= 0")
        base = self.prefix_u(n)
        window = self.prefix_u(n + 2)
        reps = -(-len(window) // len(base))
        periodic = np.tile(base, reps)[: len(window)]
        diff = np.flatnonzero(periodic != window)
        if len(diff) == 0:
            raise ConsistencyError(f"Q_{n} scan reached the end of u_{n + 2} without a mismatch")
        return int(diff[0])

    def length(self, which: str, n: int) -> int:
        if which == "U":
            return self.U(n)
        funcs = {"Z": self.Z, "S": self.S, "P": self.P, "Q": self.Q}
        if which not in funcs:
            raise PreconditionError(f"unknown length {which!r}")
        return funcs[which](n)

    def is_prefix_of_fixed_point(self, word: Sequence[int]) -> bool:
        word = np.asarray(word)
        if len(word) == 0:
            return True
        return is_prefix(word, self.prefix_of_length(len(word)))
