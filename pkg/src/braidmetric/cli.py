"""braidmetric command line.

Exit codes: 0 success or exact distance, 1 not equivalent, 2 unknown or
inconclusive, 64 usage error, 65 data error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .derivation import (
    FAMILIES,
    dump_derivation,
    family_word,
    grid_derivation,
    lcm_derivation,
    load_derivation,
    optimality_certificate,
)
from .errors import BraidError, ConsistencyError
from .metric import (
    EXACT,
    NOT_EQUIVALENT,
    SearchLimits,
    exact_distance,
    exact_distance_general,
    lower_bound,
    random_equivalent_pair,
)
from .naming import parse_name, signed_name_sequence
from .render import RenderOptions, render_braid_diagram, render_derivation_chart
from .words import BraidWord, Derivation, format_word, parse_word

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Stdin:
    """Hands out successive stdin lines to word arguments given as '-'."""

    def __init__(self):
        self._lines = None

    def next(self) -> str:
        if self._lines is None:
            self._lines = sys.stdin.read().splitlines()
        if not self._lines:
            raise UsageError("not enough lines on stdin")
        return self._lines.pop(0)


def _words(args, *texts: str) -> list[BraidWord]:
    stdin = _Stdin()
    texts = [stdin.next() if t == "-" else t for t in texts]
    if args.n is None:
        # a common default so that both words live on the same strand count
        joint = parse_word(" ".join(texts))
        n = joint.n
    else:
        n = args.n
    return [parse_word(t, n) for t in texts]


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj))
    elif text:
        print(text)


def _limits(args) -> SearchLimits:
    return SearchLimits.from_env(
        max_states=getattr(args, "max_states", None),
        max_depth=getattr(args, "max_depth", None),
        max_word_length=getattr(args, "max_word_length", None),
    )


def cmd_names(args) -> int:
    (w,) = _words(args, args.word)
    seq = signed_name_sequence(w)
    _emit(args, str(seq), seq.to_list())
    return EXIT_OK


def cmd_distance(args) -> int:
    w, w2 = _words(args, args.word1, args.word2)
    limits = _limits(args)
    bidirectional = not args.single_source
    if args.general or not (w.is_positive and w2.is_positive):
        if limits.max_word_length is None:
            limits = SearchLimits(limits.max_states, limits.max_depth, max(len(w), len(w2)) + 2)
        res = exact_distance_general(w, w2, limits, bidirectional)
    else:
        res = exact_distance(w, w2, limits, bidirectional)
    if res.status == EXACT:
        text = f"exact {res.distance}"
    elif res.status == NOT_EQUIVALENT:
        text = "not_equivalent"
    else:
        text = f"unknown ({res.reason})"
    _emit(args, text, res.to_dict())
    return {EXACT: EXIT_OK, NOT_EQUIVALENT: EXIT_NOT_EQUIVALENT}.get(res.status, EXIT_UNKNOWN)


def cmd_lb(args) -> int:
    w, w2 = _words(args, args.word1, args.word2)
    rep = lower_bound(w, w2)
    d = rep.to_dict()
    if rep.multiset_equal:
        text = "\n".join([
            "multiset_equal true",
            f"disjoint {rep.disjoint}",
            f"shared {rep.shared}",
            f"median {rep.median}",
            f"bound_simple {rep.bound_simple}",
            f"bound {rep.bound}",
        ])
    else:
        text = "multiset_equal false"
    _emit(args, text, d)
    return EXIT_OK if rep.multiset_equal else EXIT_NOT_EQUIVALENT


def cmd_family(args) -> int:
    w = family_word(args.kind, args.m)
    _emit(args, format_word(w), w.to_dict())
    return EXIT_OK


def cmd_derive(args) -> int:
    if args.kind == "grid":
        d = grid_derivation(args.m)
    else:
        d = lcm_derivation(args.m, _limits(args))
        if not isinstance(d, Derivation):
            print(f"unknown ({d.reason})")
            return EXIT_UNKNOWN
    if args.out:
        Path(args.out).write_text(dump_derivation(d))
        _emit(args, f"wrote {args.out} ({len(d)} moves)", {"out": args.out, "moves": len(d)})
    else:
        sys.stdout.write(dump_derivation(d))
    return EXIT_OK


def cmd_certify(args) -> int:
    cert = optimality_certificate(load_derivation(args.file))
    _emit(args, str(cert), cert.to_dict())
    return EXIT_OK if cert.optimal else EXIT_UNKNOWN


_NAME_TOKEN = re.compile(r"N\([^)]*\)(?:\^-1)?")


def _highlight(specs) -> tuple:
    pairs = []
    for spec in specs or ():
        names = _NAME_TOKEN.findall(spec)
        if len(names) != 2:
            raise UsageError(f"--highlight expects two names like 'N(1,3,1) N(2,3,1)', got {spec!r}")
        pairs.append((parse_name(names[0]), parse_name(names[1])))
    return tuple(pairs)


def cmd_render(args) -> int:
    opts = RenderOptions(args.cell_width, args.cell_height, args.labels, _highlight(args.highlight))
    if args.kind == "braid":
        (w,) = _words(args, args.input)
        svg = render_braid_diagram(w, opts)
    else:
        svg = render_derivation_chart(load_derivation(args.input), opts)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_randpair(args) -> int:
    (w,) = _words(args, args.word)
    if not w.is_positive:
        raise UsageError("randpair needs a positive word")
    w2, d = random_equivalent_pair(w, args.steps, args.seed)
    _emit(args, format_word(w2), {"word": w2.to_dict(), "derivation": d.to_dict()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidmetric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, strands=True):
        if strands:
            p.add_argument("--n", type=int, help="strand count (default: from the letters)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    def search_flags(p):
        p.add_argument("--max-states", type=int)
        p.add_argument("--max-depth", type=int)
        p.add_argument("--max-word-length", type=int)

    p = sub.add_parser("names", help="print the crossing names of a word")
    p.add_argument("word")
    p.add_argument("--signed", action="store_true",
                   help="signed names (always used for words with inverse letters)")
    common(p)
    p.set_defaults(func=cmd_names)

    p = sub.add_parser("distance", help="exact combinatorial distance between two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--general", action="store_true", help="allow free insertions and deletions")
    p.add_argument("--single-source", action="store_true", help="one-sided breadth-first search")
    search_flags(p)
    common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("lb", help="inversion lower bound between two positive words")
    p.add_argument("word1")
    p.add_argument("word2")
    common(p)
    p.set_defaults(func=cmd_lb)

    p = sub.add_parser("family", help="print a word of the 4m^2 families")
    p.add_argument("kind", choices=FAMILIES)
    p.add_argument("--m", type=int, required=True)
    common(p, strands=False)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("derive", help="write an explicit derivation")
    p.add_argument("kind", choices=("grid", "lcm"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    search_flags(p)
    common(p, strands=False)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("certify", help="check a derivation file for optimality")
    p.add_argument("file")
    common(p, strands=False)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("render", help="write an SVG braid diagram or separatrix chart")
    p.add_argument("kind", choices=("braid", "derivation"))
    p.add_argument("input", help="a word for 'braid', a derivation file for 'derivation'")
    p.add_argument("--out")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--cell-width", type=float, default=24.0)
    p.add_argument("--cell-height", type=float, default=16.0)
    p.add_argument("--highlight", action="append", metavar="PAIR",
                   help="two names whose crossings are marked, e.g. 'N(1,3,1) N(2,3,1)'")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("randpair", help="random walk of relation moves from a word")
    p.add_argument("word")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_randpair)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError:
        raise
    except UsageError as exc:
        print(f"braidmetric: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BraidError, ValueError, OSError) as exc:
        print(f"braidmetric: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
