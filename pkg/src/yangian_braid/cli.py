"""Command-line entry point.

Machine-readable output (JSON or markdown) goes to stdout, diagnostics to
stderr.  Exit codes: 0 success, 2 ``Unknown`` verdict from ``check``,
1 any error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from .braid_action import (
    apply_word, braid_relation_words, check_automorphism, check_braid_relation,
)
from .cyclicity import (
    CyclicityError, Verdict, check_tensor, compute_tables, fundamental_set,
    kr_set, parse_factors,
)
from .lie_data import LieDataError, LieDatum, make_lie_datum, num_positive_roots
from .ratfun import RatfunError, random_tuple, tuple_from_json, tuple_to_json
from .reference import reference_set
from .weyl import (
    WeylWord, braid_equivalent_words, is_reduced, longest_word, parse_word,
    random_reduced_word,
)

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2

_DOMAIN_ERRORS = (LieDataError, RatfunError, CyclicityError, ValueError, IndexError,
                  OSError, json.JSONDecodeError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class CliError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _datum(args) -> LieDatum:
    family = getattr(args, "family_pos", None) or args.family
    rank = getattr(args, "rank_pos", None) or args.rank
    if not family:
        raise CliError("a Lie family is required (e.g. --family E6)")
    return make_lie_datum(family, rank)


def _read_arg(value: str) -> str:
    """Treat ``value`` as a path if such a file exists, otherwise as inline text."""
    if value and os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read()
    return value


def _word(args, datum: LieDatum) -> WeylWord:
    if getattr(args, "word", None):
        w = parse_word(_read_arg(args.word), datum)
        if not is_reduced(datum, w) or len(w) != num_positive_roots(datum.lie_type):
            raise CliError(f"word {w} is not a reduced expression of w0 for {datum.name}")
        return w
    return longest_word(datum)


def _with_family(p: argparse.ArgumentParser, positional: bool = False) -> None:
    if positional:
        p.add_argument("family_pos", nargs="?", metavar="family")
        p.add_argument("rank_pos", nargs="?", type=int, metavar="rank")
    p.add_argument("--family", help="A, B, C, D (with --rank), E6, E7, E8, F4 or G2")
    p.add_argument("--rank", type=int)


def _with_word(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", help="reduced word of w0: a file or inline indices; default catalog")


# commands ---------------------------------------------------------------------

def cmd_cartan(args) -> int:
    _emit(_datum(args).to_json())
    return EXIT_OK


def cmd_w0(args) -> int:
    d = _datum(args)
    _emit(list(_word(args, d).letters))
    return EXIT_OK


def cmd_braid_apply(args) -> int:
    d = _datum(args)
    letters = parse_word(_read_arg(args.word), d) if args.word else longest_word(d)
    p = tuple_from_json(json.loads(_read_arg(args.tuple)), d)
    _emit(tuple_to_json(apply_word(d, letters, p)))
    return EXIT_OK


def _verify_braid(d, rng, iters):
    for _ in range(iters):
        p = random_tuple(d, rng)
        for i in d.nodes:
            for j in d.nodes:
                if i < j and not check_braid_relation(d, i, j, p):
                    left, right = braid_relation_words(d, i, j)
                    return {"relation": [list(left), list(right)], "tuple": tuple_to_json(p)}
    return None


def _verify_automorphism(d, rng, iters):
    for _ in range(iters):
        p, q = random_tuple(d, rng), random_tuple(d, rng)
        for j in d.nodes:
            if not check_automorphism(d, j, p, q):
                return {"generator": j, "p": tuple_to_json(p), "q": tuple_to_json(q)}
    return None


def _verify_well_defined(d, rng, iters):
    top = num_positive_roots(d.lie_type)
    for _ in range(iters):
        w = random_reduced_word(d, rng, top)
        p = random_tuple(d, rng)
        words = braid_equivalent_words(d, w, budget=8)
        ref = apply_word(d, words[0], p)
        for other in words[1:]:
            if apply_word(d, other, p) != ref:
                return {"words": [list(words[0]), list(other)], "tuple": tuple_to_json(p)}
    return None


_VERIFIERS = {"braid": _verify_braid, "automorphism": _verify_automorphism,
              "well-defined": _verify_well_defined}


def cmd_verify(args) -> int:
    d = _datum(args)
    rng = random.Random(args.seed)
    bad = _VERIFIERS[args.what](d, rng, args.iters)
    _emit({"check": args.what, "family": d.name, "iters": args.iters, "seed": args.seed,
           "passed": bad is None, "counterexample": bad})
    if bad is not None:
        _note(f"{args.what}: counterexample found for {d.name}")
        return EXIT_ERROR
    return EXIT_OK


def cmd_sets(args) -> int:
    d = _datum(args)
    w = _word(args, d)
    if args.kind == "fundamental":
        s = fundamental_set(d, w, args.b1, args.b2)
        head = {"b1": args.b1, "b2": args.b2}
    else:
        s = kr_set(d, w, args.b1, args.m1, args.b2, args.m2)
        head = {"b1": args.b1, "m1": args.m1, "b2": args.b2, "m2": args.m2}
    _emit({"family": d.name, "numbering": d.numbering_tag, "word": list(w.letters),
           **head, **s.to_json()})
    return EXIT_OK


def cmd_check(args) -> int:
    d = _datum(args)
    w = _word(args, d)
    factors = parse_factors(args.factors)
    for f in factors:
        d.check_node(f.node)
    cert = check_tensor(d, w, factors)
    _emit({"family": d.name, **cert.to_json()})
    _note(f"verdict: {cert.verdict.value}")
    return EXIT_OK if cert.verdict is Verdict.CYCLIC else EXIT_UNKNOWN


def _markdown(d: LieDatum, w: WeylWord, table) -> str:
    nodes = list(d.nodes)
    lines = [f"### {d.name} (numbering: {d.numbering_tag})", "",
             f"w0 = {' '.join(map(str, w.letters))}", "",
             "| b1 \\ b2 | " + " | ".join(str(b) for b in nodes) + " |",
             "|---" * (len(nodes) + 1) + "|"]
    for b1 in nodes:
        cells = ["{" + ", ".join(table[b1, b2].as_strings()) + "}" for b2 in nodes]
        lines.append(f"| {b1} | " + " | ".join(cells) + " |")
    return "\n".join(lines)


def cmd_tables(args) -> int:
    d = _datum(args)
    w = _word(args, d)
    table = compute_tables(d, w, jobs=args.jobs)
    if args.format == "markdown":
        sys.stdout.write(_markdown(d, w, table) + "\n")
        return EXIT_OK
    sets = []
    for (b1, b2), s in sorted(table.items()):
        entry = {"b1": b1, "b2": b2, "values": s.as_strings()}
        if args.compare:
            ref = reference_set(d.lie_type, b1, b2)
            entry["reference"] = None if ref is None else [str(x) for x in ref]
            entry["matches"] = None if ref is None else tuple(s.values) == ref
        sets.append(entry)
    _emit({"family": d.name, "rank": d.rank, "numbering": d.numbering_tag,
           "word": list(w.letters), "sets": sets})
    if args.compare:
        bad = [(e["b1"], e["b2"]) for e in sets if e["matches"] is False]
        _note(f"{d.name}: {len(sets) - len(bad)}/{len(sets)} entries match the reference"
              + (f"; differing: {bad}" if bad else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="yangian-braid",
                     description="Braid group action on Drinfeld tuples and cyclicity sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cartan", help="Cartan matrix and symmetrizers as JSON")
    _with_family(p, positional=True)
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("w0", help="reduced word of the longest element")
    _with_family(p, positional=True)
    _with_word(p)
    p.set_defaults(func=cmd_w0)

    braid = sub.add_parser("braid", help="apply T_w to a tuple")
    bsub = braid.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = bsub.add_parser("apply")
    _with_family(p)
    p.add_argument("--word", help="word (file or inline); default w0")
    p.add_argument("--tuple", required=True, help="tuple JSON (file or inline)")
    p.set_defaults(func=cmd_braid_apply)

    p = sub.add_parser("verify", help="randomized checks of the braid action")
    p.add_argument("what", choices=sorted(_VERIFIERS))
    _with_family(p)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sets", help="fundamental or KR cyclicity sets")
    p.add_argument("kind", choices=["fundamental", "kr"])
    _with_family(p)
    _with_word(p)
    p.add_argument("--b1", type=int, required=True)
    p.add_argument("--b2", type=int, required=True)
    p.add_argument("--m1", type=int, default=1)
    p.add_argument("--m2", type=int, default=1)
    p.set_defaults(func=cmd_sets)

    check = sub.add_parser("check", help="cyclicity certificates")
    csub = check.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = csub.add_parser("tensor")
    _with_family(p)
    _with_word(p)
    p.add_argument("--factors", required=True, help='"b:a:m,b:a:m,..." with a like 3/2+1/2i')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tables", help="all S(b1, b2) for one type")
    _with_family(p)
    _with_word(p)
    p.add_argument("--format", choices=["json", "markdown"], default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--compare", action="store_true",
                   help="include reference values and report mismatches on stderr")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, *_DOMAIN_ERRORS) as exc:
        _note(f"error: {exc}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
