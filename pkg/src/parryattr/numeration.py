"""Beta-numeration: Renyi expansions of unity, Parry admissibility, the Fabre
position/expansion bijection, the base beta itself and the gap lengths Delta_k.

All combinatorial answers are exact integers; beta and Delta_k are floats used
for display and sanity checks only.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .core import ParryParameters, PrefixEngine, validate
from .errors import InvalidParameters, PreconditionError

BISECTION_TOL = 1e-12


@dataclass(frozen=True)
class Stream:
    """Eventually periodic digit stream ``pre period^omega``; an empty period means ``0^omega``."""

    pre: tuple[int, ...]
    period: tuple[int, ...] = ()

    def digit(self, i: int) -> int:
        if i < len(self.pre):
            return self.pre[i]
        if not self.period:
            return 0
        return self.period[(i - len(self.pre)) % len(self.period)]

    def shift(self, k: int) -> "Stream":
        """The stream with its first ``k`` digits removed."""
        if k <= len(self.pre):
            return Stream(self.pre[k:], self.period)
        if not self.period:
            return Stream((), ())
        r = (k - len(self.pre)) % len(self.period)
        return Stream((), self.period[r:] + self.period[:r])

    def render(self) -> str:
        def digits(ds):
            return "".join(map(str, ds)) if all(d < 10 for d in ds) else ",".join(map(str, ds))

        if not self.period:
            return digits(self.pre) + "0^w"
        return digits(self.pre) + "(" + digits(self.period) + ")^w"


def _period_len(s: Stream) -> int:
    return len(s.period) if s.period else 1


def lex_compare(a: Stream, b: Stream) -> int:
    """Three-way lexicographic comparison: -1, 0 or 1.

    Past the longer preperiod both streams are purely periodic, so agreement on
    ``lcm`` of the two periods there means equality; two periods are scanned for margin.
    """
    pa, pb = _period_len(a), _period_len(b)
    window = max(len(a.pre), len(b.pre)) + 2 * (pa * pb // gcd(pa, pb))
    for i in range(window):
        x, y = a.digit(i), b.digit(i)
        if x != y:
            return -1 if x < y else 1
    return 0


@dataclass(frozen=True)
class RenyiExpansion:
    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()

    def __post_init__(self):
        s = self.as_stream()
        if not self.preperiod and not self.period:
            raise InvalidParameters("empty expansion")
        if s.digit(0) < 1:
            raise InvalidParameters("first digit must be >= 1")
        if not self.period and self.preperiod[-1] < 1:
            raise InvalidParameters("a finite expansion must end in a nonzero digit")
        if any(d < 0 for d in self.preperiod + self.period):
            raise InvalidParameters("digits must be non-negative")
        if self.period and all(d == 0 for d in self.period):
            raise InvalidParameters("use an empty period for a finite expansion")
        horizon = len(self.preperiod) + max(len(self.period), 1)
        for j in range(1, horizon + 1):
            shifted = s.shift(j)
            if lex_compare(shifted, s) >= 0:
                raise InvalidParameters(
                    f"Parry condition fails at shift {j}: {shifted.render()} is not below {s.render()}"
                )

    @classmethod
    def from_params(cls, params: ParryParameters) -> "RenyiExpansion":
        validate(params)
        if params.is_simple:
            return cls(params.t)
        return cls((params.p,), (params.q,))

    def as_stream(self) -> Stream:
        return Stream(tuple(self.preperiod), tuple(self.period))

    @property
    def is_simple(self) -> bool:
        return not self.period


def d_star(expansion: RenyiExpansion) -> Stream:
    """Infinite Renyi expansion of unity."""
    if expansion.period:
        return expansion.as_stream()
    t = expansion.preperiod
    if len(t) < 2:
        raise PreconditionError("finite expansions need at least two digits here")
    return Stream((), t[:-1] + (t[-1] - 1,))


def general_morphism(expansion: RenyiExpansion) -> list[tuple[int, ...]]:
    """Letter images of the morphism whose fixed point codes the beta-integer gaps.

    Covers finite expansions and eventually periodic ones with any
    preperiod/period lengths.
    """
    if expansion.is_simple:
        t = expansion.preperiod
        images = [(0,) * t[i] + (i + 1,) for i in range(len(t) - 1)]
        images.append((0,) * t[-1])
        return images
    digits = expansion.preperiod + expansion.period
    m, size = len(expansion.preperiod), len(digits)
    images = [(0,) * digits[i] + (i + 1,) for i in range(size - 1)]
    images.append((0,) * digits[-1] + (m,))
    return images


def fixed_point_prefix(images: Sequence[Sequence[int]], length: int) -> list[int]:
    """Prefix of the fixed point starting with 0, by repeated letter-by-letter rewriting."""
    word = [0]
    while len(word) < length:
        new = [b for a in word for b in images[a]]
        if len(new) <= len(word):
            raise PreconditionError("morphism is not growing on 0")
        word = new
    return word[:length]


def _less_than_dstar(digits: Sequence[int], dstar: Stream) -> int | None:
    """Index of the first suffix that is not below ``dstar``, or None if all are."""
    for i in range(len(digits)):
        if lex_compare(Stream(tuple(digits[i:])), dstar) >= 0:
            return i
    return None


def parry_admissible(digits: Sequence[int], expansion: RenyiExpansion) -> bool:
    """True iff every suffix ``x_i..x_0 0^omega`` is strictly below ``d*_beta(1)``."""
    return _less_than_dstar(list(digits), d_star(expansion)) is None


def position_to_expansion(engine: PrefixEngine, n: int) -> list[int]:
    """Greedy digits ``x_{k-1}..x_0`` (most significant first) with ``n = sum x_i U_i``."""
    if n < 0:
        raise PreconditionError("position must be >= 0")
    if n == 0:
        return [0]
    k = engine.level_of(n)
    digits = []
    rest = n
    for i in range(k, -1, -1):
        u = engine.U(i)
        digits.append(rest // u)
        rest %= u
    return digits


def expansion_to_position(engine: PrefixEngine, digits: Sequence[int]) -> int:
    digits = [int(d) for d in digits]
    expansion = RenyiExpansion.from_params(engine.params)
    bad = _less_than_dstar(digits, d_star(expansion))
    if bad is not None:
        tail = Stream(tuple(digits[bad:]))
        raise PreconditionError(
            f"digits are not admissible: suffix {tail.render()} is not below {d_star(expansion).render()}"
        )
    k = len(digits)
    return sum(d * engine.U(k - 1 - i) for i, d in enumerate(digits))


def fabre_word(engine: PrefixEngine, digits: Sequence[int]) -> list[int]:
    """Concatenation ``phi^{k-1}(0^{x_{k-1}}) ... phi(0^{x_1}) 0^{x_0}``."""
    k = len(digits)
    out: list[int] = []
    for i, d in enumerate(digits):
        block = engine.prefix_u(k - 1 - i).tolist()
        out.extend(block * int(d))
    return out


@dataclass(frozen=True)
class BetaValue:
    approx: float
    polynomial: tuple[int, ...]  # leading coefficient first
    tolerance: float


def _horner(coeffs: Sequence[int], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def beta_polynomial(params: ParryParameters) -> tuple[int, ...]:
    if params.is_simple:
        return (1,) + tuple(-x for x in params.t)
    # 1 = p/b + q/(b(b-1))  <=>  b^2 - (p+1) b + (p-q) = 0
    return (1, -(params.p + 1), params.p - params.q)


def beta_root(params: ParryParameters) -> BetaValue:
    """The root above 1 of the defining polynomial, by bisection."""
    validate(params)
    poly = beta_polynomial(params)
    lo = 1.0
    hi = 1.0 + (sum(params.t) if params.is_simple else params.p)
    if _horner(poly, lo) >= 0 or _horner(poly, hi) <= 0:
        raise InvalidParameters("root is not bracketed")
    while hi - lo > BISECTION_TOL * 0.01:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _horner(poly, mid) < 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return BetaValue(root, poly, abs(_horner(poly, root)))


def stream_value(stream: Stream, beta: float) -> float:
    """``sum_{i>=1} d_i beta^{-i}`` in closed form."""
    total = 0.0
    scale = 1.0
    for d in stream.pre:
        scale /= beta
        total += d * scale
    if stream.period:
        inner = 0.0
        s = 1.0
        for d in stream.period:
            s /= beta
            inner += d * s
        total += scale * inner / (1.0 - beta ** -len(stream.period))
    return total


def delta(params: ParryParameters, k: int, beta: float | None = None) -> float:
    """Gap length ``Delta_k``, coded by letter ``k`` in the Parry sequence."""
    limit = params.m if params.is_simple else 2
    if not 0 <= k < limit:
        raise PreconditionError(f"k={k} out of range [0, {limit})")
    if beta is None:
        beta = beta_root(params).approx
    return stream_value(RenyiExpansion.from_params(params).as_stream().shift(k), beta)


def beta_integer_value(engine: PrefixEngine, n: int, beta: float | None = None) -> float:
    """The n-th non-negative beta-integer ``b_n``."""
    if beta is None:
        beta = beta_root(engine.params).approx
    digits = position_to_expansion(engine, n)
    value = 0.0
    for d in digits:
        value = value * beta + d
    return value


def format_digits(digits: Sequence[int]) -> str:
    digits = [int(d) for d in digits]
    if all(d < 10 for d in digits):
        return "".join(map(str, digits))
    return ",".join(map(str, digits))


def parse_digits(text: str) -> list[int]:
    text = text.strip()
    if "," in text:
        return [int(x) for x in text.split(",")]
    if not text.isdigit():
        raise InvalidParameters(f"not a digit string: {text!r}")
    return [int(c) for c in text]
