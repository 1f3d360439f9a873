"""Command-line front end.

Exit codes: 0 success, 1 verification failure or shape mismatch, 2 usage
or input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import catalog
from .automaton import check_budget, vertex_budget
from .dsl import parse_automaton, parse_group_word, parse_tree_word
from .errors import ResourceLimitError
from .orbit_tree import build_orbit_tree, to_dot, to_text
from .orbits import iter_level_orbits
from .render import matrix_to_ascii, matrix_to_pbm
from .series import orbit_matrix
from .shapes import match_shape, parse_shape
from .verify import CASES, run_case

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_source(parser):
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", metavar="FILE", help="automaton description file")
    src.add_argument("--builtin", metavar="NAME", help=f"one of: {', '.join(catalog.BUILTINS)}")
    parser.add_argument(
        "--gens",
        metavar="LIST",
        help='comma-separated group words, e.g. "a,b" or "a c,b^-1" (default: builtin generators)',
    )


def _add_depth(parser, default):
    parser.add_argument("--depth", type=int, default=default, metavar="N")


def _load(args):
    if args.spec:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                automaton = parse_automaton(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.spec}: {exc.strerror}") from None
        gens = automaton.generators()
    else:
        try:
            automaton, gens = catalog.builtin(args.builtin)
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc).strip("'\"")) from None
    if args.gens:
        gens = [parse_group_word(part, automaton) for part in args.gens.split(",")]
    return automaton, gens


def _check_depth(automaton, depth):
    if depth < 0:
        raise UsageError("--depth must be non-negative")
    check_budget(automaton.degree, depth)


def _emit(text, out=None):
    if out is None:
        if isinstance(text, bytes):
            sys.stdout.flush()
            sys.stdout.buffer.write(text)
            sys.stdout.buffer.flush()
        else:
            sys.stdout.write(text)
    else:
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(out, mode) as fh:
            fh.write(text)


def cmd_orbits(args):
    automaton, gens = _load(args)
    _check_depth(automaton, args.depth)
    for lo in iter_level_orbits(automaton, gens, args.depth):
        if lo.level == 0:
            continue
        if args.json:
            print(lo.to_json_line())
        else:
            sizes = ", ".join(f"{count}x{size}" for size, count in lo.histogram().items())
            print(f"level {lo.level}: {lo.count} orbits; sizes {sizes}")
    return EXIT_OK


def cmd_tree(args):
    automaton, gens = _load(args)
    _check_depth(automaton, args.depth)
    shape = parse_shape(args.expect) if args.expect else None
    tree = build_orbit_tree(automaton, gens, args.depth)
    _emit(to_dot(tree) if args.format == "dot" else to_text(tree))
    if shape is None:
        return EXIT_OK
    verdict = match_shape(tree, shape)
    print(f"expect {args.expect}: {verdict}", file=sys.stderr)
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_verify(args):
    try:
        verdict = run_case(args.case, depth=args.depth, seed=args.seed, trials=args.trials)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    print(json.dumps(verdict, default=str))
    return EXIT_OK if verdict["passed"] else EXIT_FAIL


def _render_word(args, automaton):
    if args.word is None:
        raise UsageError("render matrix needs --word")
    if args.word == "random":
        if args.length is None:
            raise UsageError("--word random needs --length")
        rng = random.Random(args.seed)
        return tuple(rng.randrange(automaton.degree) for _ in range(args.length))
    return parse_tree_word(args.word, automaton.alphabet)


def cmd_render(args):
    automaton, gens = _load(args)
    if args.what == "tree":
        if args.format not in ("dot", "text"):
            raise UsageError("render tree supports --format dot or text")
        _check_depth(automaton, args.depth)
        tree = build_orbit_tree(automaton, gens, args.depth)
        _emit(to_dot(tree) if args.format == "dot" else to_text(tree), args.out)
        return EXIT_OK
    if args.format not in ("ascii", "pbm"):
        raise UsageError("render matrix supports --format ascii or pbm")
    if args.element is None:
        raise UsageError("render matrix needs --element")
    g = parse_group_word(args.element, automaton)
    v = _render_word(args, automaton)
    rows = args.rows if args.rows is not None else len(v)
    if rows < 1 or not v:
        raise UsageError("need a non-empty word and --rows >= 1")
    if rows * len(v) > vertex_budget():
        raise ResourceLimitError(f"{rows}x{len(v)} matrix exceeds the budget of {vertex_budget()} cells")
    matrix = orbit_matrix(v, g, rows, automaton=automaton)
    if args.format == "pbm":
        _emit(matrix_to_pbm(matrix), args.out)
    else:
        _emit(matrix_to_ascii(matrix) + "\n", args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="orbitree", description="Orbit trees of automaton groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="per-level orbit summary")
    _add_source(p)
    _add_depth(p, 4)
    p.add_argument("--json", action="store_true", help="one JSON line per level")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("tree", help="print the orbit tree")
    _add_source(p)
    _add_depth(p, 6)
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--expect", metavar="SHAPE", help="compare with a shape; exit 1 on mismatch")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run a named verification case")
    p.add_argument("case", metavar="CASE", help=f"one of: {', '.join(CASES)}, sushchansky:p")
    p.add_argument("--depth", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an orbit matrix or orbit tree")
    p.add_argument("what", choices=("matrix", "tree"))
    _add_source(p)
    _add_depth(p, 6)
    p.add_argument("--element", metavar="E", help='group word, e.g. "b" or "a c"')
    p.add_argument("--word", metavar="W", help='start vertex, e.g. "10^31", or "random"')
    p.add_argument("--length", type=int, help="length of a random word")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rows", type=int)
    p.add_argument("--format", choices=("ascii", "pbm", "dot", "text"))
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "render" and args.format is None:
        args.format = "dot" if args.what == "tree" else "ascii"
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"orbitree: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ValueError) as exc:
        print(f"orbitree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
