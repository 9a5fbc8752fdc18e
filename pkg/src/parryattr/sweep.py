"""Bulk verification of the general construction over a grid of simple parameters."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .attractors import attractor_general
from .core import ParryParameters, PrefixEngine, validate
from .errors import InvalidParameters
from .verifier import is_attractor, minimal_attractor

TSV_HEADER = ("params", "length", "theorem", "size", "verified", "minimal_size", "status")


def simple_parameter_grid(m_max: int, t_max: int) -> list[ParryParameters]:
    """Every valid simple parameter set with ``2 <= m <= m_max`` and digits ``<= t_max``, in a fixed order."""
    out = []
    for m in range(2, m_max + 1):
        for t in itertools.product(range(t_max + 1), repeat=m):
            params = ParryParameters.simple(t)
            try:
                validate(params)
            except InvalidParameters:
                continue
            out.append(params)
    return out


@dataclass(frozen=True)
class SweepRow:
    params: str
    length: int
    theorem: str
    size: int
    verified: bool
    letters: int
    minimal_size: int | None = None

    @property
    def passed(self) -> bool:
        ok = self.verified and self.size == self.letters
        if self.minimal_size is not None:
            ok = ok and self.minimal_size == self.letters
        return ok

    def tsv(self) -> str:
        minimal = "" if self.minimal_size is None else str(self.minimal_size)
        return "\t".join([
            self.params, str(self.length), self.theorem, str(self.size),
            "true" if self.verified else "false", minimal, "PASS" if self.passed else "FAIL",
        ])


def sweep_parameters(params: ParryParameters, levels: int, max_len: int | None = None,
                     minimality_len: int = 0) -> list[SweepRow]:
    engine = PrefixEngine(params)
    top = engine.U(levels)
    if max_len is not None:
        top = min(top, max_len)
    word = engine.prefix_of_length(top)
    rows = []
    seen: set[int] = set()
    for length in range(1, top + 1):
        seen.add(int(word[length - 1]))
        prefix = word[:length]
        attractor = attractor_general(engine, length)
        verdict = is_attractor(prefix, attractor.positions)
        minimal = minimal_attractor(prefix)[0] if length <= minimality_len else None
        rows.append(SweepRow(params.label(), length, attractor.source.value, len(attractor),
                             verdict.holds, len(seen), minimal))
    return rows


def _job(args):
    return sweep_parameters(*args)


def run_sweep(grid: list[ParryParameters], levels: int, max_len: int | None = None,
              minimality_len: int = 0, jobs: int = 1) -> Iterator[SweepRow]:
    """Rows in grid order, whatever order the workers finish in."""
    tasks = [(p, levels, max_len, minimality_len) for p in grid]
    if jobs <= 1:
        for task in tasks:
            yield from _job(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_job, tasks):
            yield from rows
