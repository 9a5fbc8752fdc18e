"""Closed-form attractors of prefixes of Parry sequences.

Positions are 0-based. ``Gamma_n`` is the sliding window of the last (at most
m) positions ``U_j - 1`` up to level n. Every constructor below returns a set
of size equal to the number of distinct letters in the prefix, except
``attractor_prior`` which is the size-(m+1) construction kept as a cross-check.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import PrefixEngine, ParryParameters, k_index
from .errors import ConsistencyError, PreconditionError
from .words import is_prefix


class TheoremId(enum.Enum):
    GAMMA_TABLE = "GammaTable"
    PRIOR_COROLLARY = "PriorCorollary"
    AFFINE = "Affine"
    RESTRICTED = "Restricted"
    BINARY = "Binary"
    GENERAL_CAT1 = "GeneralCat1"
    GENERAL_CAT2 = "GeneralCat2"
    GENERAL_ZS = "GeneralZS"
    NON_SIMPLE_BINARY = "NonSimpleBinary"


@dataclass(frozen=True)
class AttractorSet:
    positions: tuple[int, ...]
    word_length: int
    source: TheoremId
    note: str = ""

    def __post_init__(self):
        if list(self.positions) != sorted(set(self.positions)):
            raise ConsistencyError(f"positions not strictly increasing: {self.positions}")
        if self.positions and not 0 <= self.positions[0] <= self.positions[-1] < self.word_length:
            raise ConsistencyError(f"positions {self.positions} outside word of length {self.word_length}")

    def __len__(self) -> int:
        return len(self.positions)

    def to_dict(self) -> dict:
        return {"length": self.word_length, "positions": list(self.positions), "theorem": self.source.value}


def _make(positions, length: int, source: TheoremId, note: str = "") -> AttractorSet:
    return AttractorSet(tuple(sorted(set(int(p) for p in positions))), length, source, note)


def _require_simple(engine: PrefixEngine) -> None:
    if not engine.params.is_simple:
        raise PreconditionError("this construction needs simple Parry parameters")


def gamma(engine: PrefixEngine, n: int) -> list[int]:
    """Positions ``U_j - 1`` for the last min(n+1, m) levels ``j <= n``."""
    if n < -1:
        raise PreconditionError("n must be >= -1")
    lo = 0 if n <= engine.m - 1 else n - engine.m + 1
    return [engine.U(j) - 1 for j in range(lo, n + 1)]


@dataclass(frozen=True)
class ConditionsReport:
    affine_ok: bool
    restricted_ok: bool
    binary: bool
    t1_gt_tm: bool
    t1_eq_tm: bool
    reasons: dict = field(default_factory=dict, compare=False)


def _has_proper_border(w: Sequence[int]) -> bool:
    return any(tuple(w[:i]) == tuple(w[len(w) - i:]) for i in range(1, len(w)))


def _is_proper_power(w: Sequence[int]) -> bool:
    n = len(w)
    return any(n % d == 0 and n // d >= 2 and tuple(w) == tuple(w[:d]) * (n // d) for d in range(1, n))


def _padded_less(a: Sequence[int], b: Sequence[int]) -> bool:
    n = max(len(a), len(b))
    return list(a) + [0] * (n - len(a)) < list(b) + [0] * (n - len(b))


def conditions(params: ParryParameters) -> ConditionsReport:
    """Evaluate the hypotheses of the affine-complexity and restricted constructions."""
    if not params.is_simple:
        raise PreconditionError("conditions are defined for simple parameters only")
    t = params.t
    m = len(t)
    reasons = {}

    head = t[:-1]
    border = _has_proper_border(head)
    affine_ok = t[-1] == 1 and (not border or _is_proper_power(head))
    if t[-1] != 1:
        reasons["affine_ok"] = f"t_m = {t[-1]} != 1"
    elif border and not _is_proper_power(head):
        reasons["affine_ok"] = "t_1..t_{m-1} has a border but is not a proper power"
    else:
        reasons["affine_ok"] = "t_m = 1 and the border condition holds"

    lex_ok = True
    for i in range(2, m - 1):
        bumped = list(t[i - 1:m - 2]) + [t[m - 2] + 1]
        if not _padded_less(bumped, t):
            lex_ok = False
            reasons["restricted_ok"] = f"shifted condition fails at i={i}"
            break
    dominant = t[0] > max(t[m - 2], t[m - 1])
    if lex_ok and not dominant:
        reasons["restricted_ok"] = "t_1 <= max(t_{m-1}, t_m)"
    restricted_ok = lex_ok and dominant
    if restricted_ok:
        reasons["restricted_ok"] = "shifted lexicographic condition and t_1 > max(t_{m-1}, t_m)"

    reasons["binary"] = f"m = {m}"
    return ConditionsReport(
        affine_ok=affine_ok,
        restricted_ok=restricted_ok,
        binary=m == 2,
        t1_gt_tm=t[0] > t[-1],
        t1_eq_tm=t[0] == t[-1],
        reasons=reasons,
    )


class Category(enum.Enum):
    CAT1 = 1
    CAT2 = 2


def classify_category(engine: PrefixEngine, n: int, x: Sequence[int]) -> Category:
    """Which of the two shapes the prefix ``u_n x`` of length in ``[U_n, Z_n]`` has."""
    _require_simple(engine)
    m = engine.m
    if n < m:
        raise PreconditionError("n must be >= m")
    x = np.asarray(x, dtype=np.int64)
    if len(x) > engine.Z(n) - engine.U(n):
        raise PreconditionError("|x| exceeds Z_n - U_n")
    if not engine.is_prefix_of_fixed_point(np.concatenate([engine.prefix_u(n), x])):
        raise PreconditionError("u_n x is not a prefix of the fixed point")
    k = k_index(engine.params)
    tm = engine.params.t[-1]
    probe = np.concatenate([engine.prefix_u(n - m + k)] + [engine.prefix_u(n - m)] * tm + [x])
    target = engine.prefix_u(n - m + k + 1)
    if is_prefix(probe, target):
        return Category.CAT1
    if is_prefix(target, probe):
        return Category.CAT2
    # Below level m the target ends in a letter that has not occurred before,
    # so the probe can only run past its body; that is the second shape too.
    if n - m + k + 1 <= m - 1 and is_prefix(target[:-1], probe):
        return Category.CAT2
    raise ConsistencyError(f"u_{n}x falls in neither category (n={n}, |x|={len(x)})")


def _category_set(engine: PrefixEngine, n: int, length: int) -> AttractorSet:
    m = engine.m
    U = engine.U
    tm = engine.params.t[-1]
    k = k_index(engine.params)
    x = engine.prefix_of_length(length)[U(n):]
    base = set(gamma(engine, n - 1))
    if classify_category(engine, n, x) is Category.CAT1:
        positions = (base - {U(n - m) - 1}) | {U(n) - U(n - m + k) - (tm - 1) * U(n - m) - 1}
        return _make(positions, length, TheoremId.GENERAL_CAT1)
    positions = (base - {U(n - m + k) - 1}) | {U(n) - tm * U(n - m) - 1}
    return _make(positions, length, TheoremId.GENERAL_CAT2)


def attractor_general(engine: PrefixEngine, length: int) -> AttractorSet:
    """Minimal attractor of the prefix of the given length, for any simple parameters."""
    _require_simple(engine)
    n = engine.level_of(length)
    m = engine.m
    U = engine.U
    if n <= m - 1:
        return _make(gamma(engine, n), length, TheoremId.GAMMA_TABLE)
    if length == U(n):
        return _make(gamma(engine, n - 1), length, TheoremId.GAMMA_TABLE)
    if length <= engine.Z(n):
        return _category_set(engine, n, length)
    t = engine.params.t
    if t[0] > t[-1] or length > engine.S(n):
        return _make(gamma(engine, n), length, TheoremId.GAMMA_TABLE)
    positions = (set(gamma(engine, n - 1)) - {U(n - m) - 1}) | {U(n) - (t[-1] - 1) * U(n - m) - 1}
    return _make(positions, length, TheoremId.GENERAL_ZS)


def attractor_restricted(engine: PrefixEngine, length: int) -> AttractorSet:
    _require_simple(engine)
    if not conditions(engine.params).restricted_ok:
        raise PreconditionError("restricted construction does not apply to these parameters")
    n = engine.level_of(length)
    if n <= engine.m - 1:
        return _make(gamma(engine, n), length, TheoremId.RESTRICTED)
    if length <= engine.Z(n):
        return _make(gamma(engine, n - 1), length, TheoremId.RESTRICTED)
    return _make(gamma(engine, n), length, TheoremId.RESTRICTED)


def attractor_binary(engine: PrefixEngine, length: int) -> AttractorSet:
    _require_simple(engine)
    if engine.m != 2:
        raise PreconditionError("binary construction needs m = 2")
    n = engine.level_of(length)
    if n <= 1:
        return _make(gamma(engine, n), length, TheoremId.BINARY)
    # both windows are valid at Z_n; Gamma_n is used there unless Z_n = U_n
    if length == engine.U(n) or length < engine.Z(n):
        return _make(gamma(engine, n - 1), length, TheoremId.BINARY)
    return _make(gamma(engine, n), length, TheoremId.BINARY)


def attractor_affine(engine: PrefixEngine, length: int) -> AttractorSet:
    _require_simple(engine)
    if not conditions(engine.params).affine_ok:
        raise PreconditionError("affine construction does not apply to these parameters")
    n = engine.level_of(length)
    if n <= engine.m - 1:
        return _make(gamma(engine, n), length, TheoremId.AFFINE)
    if length <= engine.P(n):
        return _make(gamma(engine, n - 1), length, TheoremId.AFFINE)
    return _make(gamma(engine, n), length, TheoremId.AFFINE)


def attractor_prior(engine: PrefixEngine, length: int) -> AttractorSet:
    """Non-minimal size-(m+1) attractor, used only as an independent cross-check."""
    _require_simple(engine)
    n = engine.level_of(length)
    if n <= engine.m - 1:
        return _make(gamma(engine, n), length, TheoremId.PRIOR_COROLLARY)
    return _make(gamma(engine, n - 1) + [engine.U(n) - 1], length, TheoremId.PRIOR_COROLLARY)


def attractor_nonsimple(engine: PrefixEngine, n: int) -> AttractorSet:
    """Two-element attractor of ``phi^n(0)`` for the binary non-simple morphism."""
    if engine.params.is_simple:
        raise PreconditionError("this construction needs non-simple binary parameters")
    if n < 0:
        raise PreconditionError("n must be >= 0")
    if n == 0:
        return _make([0], 1, TheoremId.GAMMA_TABLE, note="phi^0(0) is a single letter")
    first = sum(engine.U(j) for j in range(n)) - 1
    second = engine.U(n) - sum(engine.image_length(1, j) for j in range(1, n)) - 1
    return _make([first, second], engine.U(n), TheoremId.NON_SIMPLE_BINARY)


CONSTRUCTIONS = {
    "general": attractor_general,
    "restricted": attractor_restricted,
    "binary": attractor_binary,
    "affine": attractor_affine,
    "prior": attractor_prior,
}
