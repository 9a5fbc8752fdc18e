"""Acceptance suite: one PASS/FAIL line per criterion, at the stated tolerances and budgets."""
import itertools
import math
import random
import time

import numpy as np
import pytest

from conftest import GOLDEN, golden_params
from parryattr import (ParryParameters, PrefixEngine, attractor_affine, attractor_binary, attractor_general,
                       attractor_nonsimple, attractor_restricted, conditions, format_word, gamma, is_attractor,
                       minimal_attractor)
from parryattr.numeration import (RenyiExpansion, beta_integer_value, beta_root, delta, expansion_to_position,
                                  fabre_word, parry_admissible, position_to_expansion)
from parryattr.sweep import simple_parameter_grid, sweep_parameters
from parryattr.verifier import factor_crosses, occurrences
from parryattr.words import distinct_letters, is_factor

from test_core import nsp_structure_items


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


def test_criterion_1_golden_strings(report):
    start = time.perf_counter()
    mismatches = []
    for key, texts in GOLDEN.items():
        engine = PrefixEngine(golden_params(key))
        for n, text in enumerate(texts):
            if format_word(engine.prefix_u(n)) != text:
                mismatches.append((key, n))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 1.0
    report(1, ok, f"{sum(map(len, GOLDEN.values()))} prefixes, mismatches={mismatches}, {elapsed:.3f}s")
    assert ok


def test_criterion_2_main_theorem_sweep(report):
    start = time.perf_counter()
    grid = simple_parameter_grid(4, 3)
    rows = failures = 0
    first = None
    for params in grid:
        top = min(PrefixEngine(params).U(6), 5000)
        for row in sweep_parameters(params, 6, top):
            rows += 1
            if not row.passed:
                failures += 1
                first = first or row.tsv()
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed <= 600
    report(2, ok, f"{len(grid)} parameter sets, {rows} prefixes, {failures} failures, {elapsed:.1f}s"
           + (f", first: {first}" if first else ""))
    assert ok


def test_criterion_3_pinned_attractors(report):
    checks = {}
    e = PrefixEngine(ParryParameters.simple((2, 2)))
    checks["t=2,2 u1"] = attractor_binary(e, e.U(1)).positions == (0, 2) and \
        attractor_general(e, e.U(1)).positions == (0, 2)
    u2 = e.prefix_u(2)
    checks["t=2,2 u2 both"] = is_attractor(u2, [0, 2]).holds and is_attractor(u2, [2, 7]).holds and \
        attractor_binary(e, e.U(2)).positions in ((0, 2), (2, 7))
    e = PrefixEngine(ParryParameters.simple((3, 0, 2)))
    checks["t=3,0,2 u2"] = attractor_general(e, e.U(2)).positions == (0, 3, 12) and \
        attractor_restricted(e, e.U(2)).positions == (0, 3, 12)
    e = PrefixEngine(ParryParameters.simple((2, 1, 2, 1)))
    U = e.U
    r = attractor_general(e, U(6) + 9)
    checks["t=2,1,2,1 U6+9"] = r.positions == (U(3) - 1, U(4) - 1, U(5) - 1, U(6) - U(3) - 1) and \
        is_attractor(e.prefix_of_length(U(6) + 9), r.positions).holds
    e = PrefixEngine(ParryParameters.nonsimple(3, 1))
    checks["nsp=3,1 n=1,2"] = attractor_nonsimple(e, 1).positions == (0, 3) and \
        attractor_nonsimple(e, 2).positions == (4, 11)
    ok = all(checks.values())
    report(3, ok, ", ".join(f"{k}={'ok' if v else 'MISMATCH'}" for k, v in checks.items()))
    assert ok


def _witness_valid(word, positions, verdict):
    if verdict.holds or verdict.witness is None:
        return False
    factor = list(verdict.witness.factor)
    return bool(occurrences(word, factor)) and not factor_crosses(word, factor, positions)


def test_criterion_4_negative_controls(report):
    checks = {}
    e = PrefixEngine(ParryParameters.simple((2, 1, 2, 1)))
    v = e.prefix_of_length(e.U(6) + 9).tolist()
    for level in (5, 6):
        verdict = is_attractor(v, gamma(e, level))
        checks[f"Gamma{level} rejected"] = _witness_valid(v, gamma(e, level), verdict)
    e = PrefixEngine(ParryParameters.simple((1, 1, 0, 1, 1)))
    v2 = e.prefix_of_length(e.U(9) + 9).tolist()
    quoted = "010201301020401020130100102013010204010201301"
    verdict = is_attractor(v2, gamma(e, 8))
    checks["Gamma8 rejected on v2"] = _witness_valid(v2, gamma(e, 8), verdict) and \
        format_word(v2).endswith(quoted) and is_factor(format_word(verdict.witness.factor), quoted)
    ok = all(checks.values())
    report(4, ok, ", ".join(f"{k}={'ok' if v else 'NO'}" for k, v in checks.items()))
    assert ok


MINIMALITY_SETS = [(2, 1, 1), (2, 1, 2, 1), (2, 2), (3, 0, 2), (1, 1, 0, 1, 1), (1, 1), (2, 1), (3, 3),
                   (1, 0, 1), (3, 2, 1), (1, 1, 1), ("nsp", 3, 1), ("nsp", 2, 1), ("nsp", 4, 3)]


def test_criterion_5_exact_minimality(report):
    start = time.perf_counter()
    bad = []
    for key in MINIMALITY_SETS:
        params = ParryParameters.nonsimple(key[1], key[2]) if key[0] == "nsp" else ParryParameters.simple(key)
        engine = PrefixEngine(params)
        word = engine.prefix_of_length(40)
        for length in range(1, 41):
            prefix = word[:length]
            size = minimal_attractor(prefix)[0]
            letters = distinct_letters(prefix)
            if params.is_simple:
                theorem = len(attractor_general(engine, length))
            else:
                level = engine.level_of(length)
                theorem = len(attractor_nonsimple(engine, level)) if engine.U(level) == length else letters
            if not size == letters == theorem:
                bad.append((key, length, size, letters, theorem))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 300
    report(5, ok, f"{len(MINIMALITY_SETS)} parameter sets x lengths 1..40, mismatches={bad[:3]}, {elapsed:.1f}s")
    assert ok


def test_criterion_6_subset_property(report):
    start = time.perf_counter()
    cases = bad = 0
    for params in simple_parameter_grid(4, 3):
        c = conditions(params)
        builders = [b for b, flag in ((attractor_restricted, c.restricted_ok), (attractor_affine, c.affine_ok),
                                      (attractor_binary, c.binary)) if flag]
        if not builders:
            continue
        engine = PrefixEngine(params)
        specials = {engine.U(j) - 1 for j in range(60)}
        top = min(engine.U(6), 5000)
        word = engine.prefix_of_length(top)
        for length in range(1, top + 1):
            for build in builders:
                r = build(engine, length)
                cases += 1
                if not (set(r.positions) <= specials and is_attractor(word[:length], r.positions).holds):
                    bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and cases > 0
    report(6, ok, f"{cases} constructor outputs checked, {bad} outside {{U_j-1}} or unverified, {elapsed:.1f}s")
    assert ok


def test_criterion_7_nonsimple_sweep(report):
    bad = []
    runs = 0
    for p in range(2, 5):
        for q in range(1, p):
            engine = PrefixEngine(ParryParameters.nonsimple(p, q))
            for n in range(1, 6):
                r = attractor_nonsimple(engine, n)
                runs += 1
                if len(r) != 2 or not is_attractor(engine.prefix_u(n), r.positions).holds:
                    bad.append((p, q, n))
            for k in range(0, 6):
                items = nsp_structure_items(engine, k)
                if not all(items.values()):
                    bad.append((p, q, "structure", k))
    ok = not bad
    report(7, ok, f"{runs} (p,q,n) attractors plus structural identities for k<=5, failures={bad}")
    assert ok


NUMERATION_SETS = [ParryParameters.simple(t) for t in [(1, 1), (2, 1, 1), (2, 2), (3, 0, 2), (2, 1, 2, 1),
                                                      (1, 1, 0, 1, 1), (1, 0, 1), (3, 2, 1)]] + \
                  [ParryParameters.nonsimple(p, q) for p, q in [(3, 1), (2, 1), (4, 3)]]


def test_criterion_8_numeration(report):
    start = time.perf_counter()
    problems = []
    for params in NUMERATION_SETS:
        engine = PrefixEngine(params)
        expansion = RenyiExpansion.from_params(params)
        for n in range(10 ** 4 + 1):
            digits = position_to_expansion(engine, n)
            if not parry_admissible(digits, expansion) or expansion_to_position(engine, digits) != n:
                problems.append((params.label(), "round trip", n))
                break
        prefix = engine.prefix_of_length(2000).tolist()
        for n in range(1, 2001):
            if fabre_word(engine, position_to_expansion(engine, n)) != prefix[:n]:
                problems.append((params.label(), "fabre", n))
                break
        beta = beta_root(params).approx
        deltas = [delta(params, k, beta) for k in range(params.m if params.is_simple else 2)]
        if abs(deltas[0] - 1) > 1e-10:
            problems.append((params.label(), "delta0", deltas[0]))
        word = engine.prefix_of_length(202)
        values = [beta_integer_value(engine, n, beta) for n in range(202)]
        for n in range(201):
            if abs(values[n + 1] - values[n] - deltas[word[n]]) > 1e-9:
                problems.append((params.label(), "gap", n))
                break
    golden = beta_root(ParryParameters.simple((1, 1))).approx
    if abs(golden - (1 + math.sqrt(5)) / 2) > 1e-12:
        problems.append(("golden ratio", golden))
    elapsed = time.perf_counter() - start
    ok = not problems
    report(8, ok, f"{len(NUMERATION_SETS)} parameter sets, golden-ratio error "
                  f"{abs(golden - (1 + math.sqrt(5)) / 2):.1e}, problems={problems}, {elapsed:.1f}s")
    assert ok


def _covering_sets(word, max_size=3):
    letters = set(word)
    for size in range(len(letters), max_size + 1):
        for combo in itertools.combinations(range(len(word)), size):
            if {word[i] for i in combo} == letters:
                yield combo


def test_criterion_9_oracle_equivalence(report):
    start = time.perf_counter()
    exhaustive = sampled = disagreements = 0
    # every word and every letter-covering set, as far as the full enumeration stays cheap
    for sigma, longest in ((2, 10), (3, 7)):
        for n in range(1, longest + 1):
            for word in itertools.product(range(sigma), repeat=n):
                for combo in _covering_sets(word):
                    exhaustive += 1
                    if is_attractor(word, combo) != is_attractor(word, combo, method="naive"):
                        disagreements += 1
    # the full space up to length 14 is far beyond the budget: sample it
    rng = random.Random(20240601)
    while sampled < 10 ** 5:
        sigma = rng.choice((2, 3))
        n = rng.randint(1, 14)
        word = tuple(rng.randrange(sigma) for _ in range(n))
        letters = sorted(set(word))
        if len(letters) > 3:
            continue
        size = rng.randint(len(letters), min(3, n))
        combo = [rng.choice([i for i in range(n) if word[i] == a]) for a in letters]
        rest = [i for i in range(n) if i not in combo]
        combo = sorted(set(combo + rng.sample(rest, min(size - len(combo), len(rest)))))
        sampled += 1
        if is_attractor(word, combo) != is_attractor(word, combo, method="naive"):
            disagreements += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and elapsed <= 600
    report(9, ok, f"{exhaustive} exhaustive + {sampled} sampled cases, {disagreements} disagreements, {elapsed:.1f}s")
    assert ok
