"""``sbw``: normal forms and the word problem for surface braid groups.

Exit codes: 0 success, 1 selftest failure, 2 parse error, 3 range error,
4 rewrite budget exhausted (see ``SBW_MAX_STEPS``).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Sequence

from .budget import Budget, StepLimitExceeded
from .conj import rule_table
from .oracles import abelianize, artin_image, brute_force_sym, check_rule_table
from .presentations import Level, named_relators
from .solver import are_equal, emit_presentation, is_trivial, normal_form
from .sym import perm_of_word
from .words import (
    ParseError,
    RangeError,
    SurfaceSpec,
    format_letter,
    format_word,
    parse,
    sigma,
    tokens,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_RANGE, EXIT_BUDGET = 0, 1, 2, 3, 4


def _spec(args: argparse.Namespace) -> SurfaceSpec:
    try:
        return SurfaceSpec(args.surface == "or", args.genus, args.strands)
    except ValueError as exc:
        raise RangeError(str(exc)) from None


def _cmd_nf(args: argparse.Namespace) -> int:
    spec = _spec(args)
    report = normal_form(parse(args.word, spec), spec, Budget())
    if args.json:
        print(json.dumps(report.to_json()))
        return EXIT_OK
    for m, level in enumerate(report.levels, start=1):
        print(f"omega_{m}: {format_word(level)}")
    print(f"s: {format_word(report.perm_word)}")
    print(f"trivial: {str(report.trivial).lower()}")
    return EXIT_OK


def _cmd_eq(args: argparse.Namespace) -> int:
    spec = _spec(args)
    w1, w2 = parse(args.word1, spec), parse(args.word2, spec)
    print(str(are_equal(w1, w2, spec, Budget())).lower())
    return EXIT_OK


def _cmd_relators(args: argparse.Namespace) -> int:
    spec = _spec(args)
    doc = emit_presentation(spec, args.level)
    if args.json:
        print(json.dumps(doc))
        return EXIT_OK
    print("generators: " + " ".join(doc["generators"]))
    for name, word in named_relators(spec, args.level):
        print(f"{name}: {format_word(word)}")
    return EXIT_OK


def _cmd_rules(args: argparse.Namespace) -> int:
    spec = _spec(args)
    rows = [[format_letter(y), format_letter(x), tokens(z)] for y, x, z in rule_table(spec)]
    print(json.dumps(rows))
    return EXIT_OK


def _selftest_checks(seed: int) -> list[tuple[str, Callable[[], str | None]]]:
    rng = random.Random(seed)
    small = [SurfaceSpec(True, 1, 3), SurfaceSpec(True, 2, 2), SurfaceSpec(False, 2, 3),
             SurfaceSpec(False, 3, 2)]

    def sym() -> str | None:
        bad = [r for n in range(1, 5) if not (r := brute_force_sym(n)).ok]
        return bad[0].failures[0] if bad else None

    def rules() -> str | None:
        for spec in small:
            report = check_rule_table(spec)
            if not report.ok:
                return f"{spec}: {report.failures[0]}"
        return None

    def relators() -> str | None:
        for spec in small:
            for level in Level:
                for name, word in named_relators(spec, level):
                    if not is_trivial(word, spec):
                        return f"{spec} {level.value} {name} is not trivial"
        return None

    def artin() -> str | None:
        for _ in range(100):
            n = rng.randint(2, 5)
            word = tuple(sigma(rng.randint(1, n - 1), rng.choice((1, -1)))
                         for _ in range(rng.randint(0, 20)))
            spec = SurfaceSpec(True, 1, n)
            if is_trivial(word, spec) != artin_image(word, n).is_identity():
                return f"disagreement on {format_word(word)}"
        return None

    def guards() -> str | None:
        for spec in small:
            for name, word in named_relators(spec, Level.THEOREM):
                if not abelianize(word, spec).is_zero:
                    return f"{spec} {name} has nonzero abelianization"
                if not perm_of_word(word, spec).is_identity():
                    return f"{spec} {name} has a nontrivial permutation"
        return None

    return [("sym", sym), ("rules", rules), ("relators", relators), ("artin", artin),
            ("guards", guards)]


def _cmd_selftest(args: argparse.Namespace) -> int:
    failed = 0
    for name, check in _selftest_checks(args.seed):
        problem = check()
        print(f"{name}: {'ok' if problem is None else 'FAIL ' + problem}")
        failed += problem is not None
    return EXIT_FAIL if failed else EXIT_OK


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--surface", choices=("or", "non"), required=True,
                   help="orientable or non-orientable closed surface")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--strands", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="combed normal form of a word")
    _add_spec_args(p)
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("eq", help="decide whether two words are equal")
    _add_spec_args(p)
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=_cmd_eq)

    p = sub.add_parser("relators", help="print a presentation")
    _add_spec_args(p)
    p.add_argument("--level", choices=[lv.value for lv in Level], default="theorem")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_relators)

    p = sub.add_parser("rules", help="dump the conjugation table as JSON (debugging)")
    _add_spec_args(p)
    p.set_defaults(func=_cmd_rules)

    p = sub.add_parser("selftest", help="run the oracle checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"sbw: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RangeError as exc:
        print(f"sbw: range error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except StepLimitExceeded as exc:
        print(f"sbw: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:  # a malformed SBW_MAX_STEPS
        print(f"sbw: {exc}", file=sys.stderr)
        return EXIT_RANGE


if __name__ == "__main__":
    sys.exit(main())
