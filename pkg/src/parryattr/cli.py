"""Command-line front end.

Exit codes: 0 ok, 1 verification false, 2 bad input, 3 length cap exceeded,
4 construction precondition unmet, 5 self-check failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from . import attractors as att
from . import numeration as num
from .core import ParryParameters, PrefixEngine, validate
from .errors import CapExceeded, ConsistencyError, InvalidParameters, PreconditionError
from .sweep import TSV_HEADER, run_sweep, simple_parameter_grid
from .verifier import is_attractor
from .words import format_word

log = logging.getLogger("parryattr")

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CAP, EXIT_PRECONDITION, EXIT_SELFCHECK = range(6)

_LENGTH_EXPR = re.compile(r"^([UZSPQ])(\d+)\s*(?:([+-])\s*(\d+))?$")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(args) -> ParryParameters:
    if args.t is not None:
        params = ParryParameters.simple(args.t)
    else:
        if len(args.nsp) != 2:
            raise InvalidParameters("--nsp takes exactly two values p,q")
        params = ParryParameters.nonsimple(*args.nsp)
    return validate(params)


def _engine(args) -> PrefixEngine:
    return PrefixEngine(_params(args), max_len=args.max_word)


def resolve_length(engine: PrefixEngine, text: str) -> int:
    """Integer, or an expression such as ``U6+9`` / ``Z3`` over the engine's lengths."""
    text = text.strip()
    if text.isdigit():
        return int(text)
    match = _LENGTH_EXPR.match(text)
    if not match:
        raise InvalidParameters(f"cannot parse length {text!r}")
    which, n, sign, offset = match.groups()
    value = engine.length(which, int(n))
    if offset:
        value += int(offset) if sign == "+" else -int(offset)
    return value


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def _add_family(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=_int_list, help="simple parameters t_1,...,t_m")
    group.add_argument("--nsp", type=_int_list, help="non-simple binary parameters p,q")
    parser.add_argument("--max-word", type=int, default=None,
                        help="cap on materialised word length (default: $PARRY_MAX_WORD or 10^7)")


def _add_size(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--len", dest="length", help="prefix length, integer or e.g. U6+9")
    group.add_argument("--level", type=int, help="use the prefix phi^n(0)")


def cmd_gen(args) -> int:
    engine = _engine(args)
    word = engine.prefix_u(args.level) if args.level is not None else \
        engine.prefix_of_length(resolve_length(engine, args.length))
    sys.stdout.write(format_word(word, engine.params.alphabet_size) + "\n")
    return EXIT_OK


def cmd_attractor(args) -> int:
    engine = _engine(args)
    params = engine.params
    if params.is_simple:
        if args.level is not None:
            length = engine.U(args.level)
        else:
            length = resolve_length(engine, args.length)
        if length < 1:
            raise InvalidParameters("length must be >= 1")
        theorem = "general" if args.theorem == "auto" else args.theorem
        result = att.CONSTRUCTIONS[theorem](engine, length)
    else:
        if args.theorem not in ("auto", "nonsimple"):
            raise PreconditionError(f"theorem {args.theorem!r} needs simple parameters")
        if args.level is not None:
            level = args.level
        else:
            length = resolve_length(engine, args.length)
            level = engine.level_of(length)
            if engine.U(level) != length:
                raise PreconditionError("non-simple attractors exist only for prefixes phi^n(0)")
        result = att.attractor_nonsimple(engine, level)
    record = result.to_dict()
    if result.note:
        record["note"] = result.note
    code = EXIT_OK
    if args.verify:
        word = engine.prefix_of_length(result.word_length)
        verdict = is_attractor(word, result.positions)
        record["verified"] = verdict.holds
        if not verdict.holds:
            record["witness"] = verdict.witness.to_dict(lambda f: format_word(f, params.alphabet_size))
            code = EXIT_SELFCHECK
    if args.format == "plain":
        sys.stdout.write(",".join(map(str, result.positions)) + "\n")
    elif args.format == "tsv":
        verified = record.get("verified")
        sys.stdout.write("\t".join([params.label(), str(result.word_length), result.source.value,
                                    str(len(result)), "" if verified is None else str(verified).lower()]) + "\n")
    else:
        _emit(record)
    return code


def read_word_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def parse_any_word(text: str) -> tuple[list, bool]:
    """Letters of a word file: digits or comma-separated integers, otherwise raw characters."""
    text = text.rstrip("\r\n")
    if not text:
        raise InvalidParameters("empty word")
    if "," in text:
        try:
            return [int(x) for x in text.split(",")], True
        except ValueError:
            raise InvalidParameters("malformed comma-separated word")
    if text.isdigit():
        return [int(c) for c in text], True
    return list(text), False


def cmd_verify(args) -> int:
    letters, numeric = parse_any_word(read_word_text(args.word))
    outside = [g for g in args.gamma if not 0 <= g < len(letters)]
    if outside:
        raise InvalidParameters(f"positions {outside} outside word of length {len(letters)}")
    verdict = is_attractor(letters, args.gamma)
    render = (lambda f: format_word(f)) if numeric else (lambda f: "".join(f))
    record = {"length": len(letters), "positions": sorted(set(args.gamma)), **verdict.to_dict(render)}
    _emit(record)
    return EXIT_OK if verdict.holds else EXIT_FALSE


def cmd_sweep(args) -> int:
    if args.t_max < 0 or args.levels < 0 or args.m_max < 0:
        raise InvalidParameters("sweep bounds must be non-negative")
    grid = simple_parameter_grid(args.m_max, args.t_max)
    if not grid:
        log.warning("empty parameter space (m_max=%d, t_max=%d)", args.m_max, args.t_max)
    sys.stdout.write("\t".join(TSV_HEADER) + "\n")
    failures = 0
    for row in run_sweep(grid, args.levels, args.max_len, args.minimality_len, args.jobs):
        failures += not row.passed
        sys.stdout.write(row.tsv() + "\n")
    log.info("%d parameter sets, %d failures", len(grid), failures)
    return EXIT_OK if failures == 0 else EXIT_FALSE


def cmd_fabre(args) -> int:
    engine = _engine(args)
    expansion = num.RenyiExpansion.from_params(engine.params)
    if args.pos is not None:
        digits = num.position_to_expansion(engine, args.pos)
        position = args.pos
    else:
        digits = num.parse_digits(args.digits)
        if not num.parry_admissible(digits, expansion):
            _emit({"position": None, "digits": num.format_digits(digits), "admissible": False})
            return EXIT_FALSE
        position = num.expansion_to_position(engine, digits)
    _emit({"position": position, "digits": num.format_digits(digits),
           "admissible": num.parry_admissible(digits, expansion)})
    return EXIT_OK


def cmd_beta(args) -> int:
    params = _params(args)
    beta = num.beta_root(params)
    count = params.m if params.is_simple else 2
    _emit({
        "beta": beta.approx,
        "polynomial": list(beta.polynomial),
        "deltas": [num.delta(params, k, beta.approx) for k in range(count)],
        "d_star": num.d_star(num.RenyiExpansion.from_params(params)).render(),
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parryattr", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress log output")
    parser.add_argument("--format", choices=["json", "tsv", "plain"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a prefix of the Parry sequence")
    _add_family(p)
    _add_size(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("attractor", help="closed-form attractor of a prefix")
    _add_family(p)
    _add_size(p)
    p.add_argument("--theorem", default="auto",
                   choices=["auto", "general", "restricted", "binary", "affine", "prior", "nonsimple"])
    p.add_argument("--verify", action="store_true", help="check the set with the exhaustive verifier")
    p.set_defaults(func=cmd_attractor)

    p = sub.add_parser("verify", help="check whether positions form an attractor of a word")
    p.add_argument("--word", required=True, help="word file, or - for stdin")
    p.add_argument("--gamma", type=_int_list, required=True, help="positions i,j,k")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify the general construction over a parameter grid (TSV)")
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--levels", type=int, required=True, help="check every length up to U_levels")
    p.add_argument("--max-len", type=int, default=None, help="additional cap on prefix lengths")
    p.add_argument("--minimality-len", type=int, default=0,
                   help="also run the exact minimum search for lengths up to this")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fabre", help="convert between positions and beta-expansions")
    _add_family(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pos", type=int)
    group.add_argument("--digits")
    p.set_defaults(func=cmd_fabre)

    p = sub.add_parser("beta", help="numeric base, gap lengths and d*_beta(1)")
    _add_family(p)
    p.set_defaults(func=cmd_beta)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.INFO,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CapExceeded as exc:
        log.error("%s", exc)
        return EXIT_CAP
    except PreconditionError as exc:
        log.error("%s", exc)
        return EXIT_PRECONDITION
    except (InvalidParameters, ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except ConsistencyError as exc:
        log.error("self-check failed: %s", exc)
        return EXIT_SELFCHECK


if __name__ == "__main__":
    sys.exit(main())
