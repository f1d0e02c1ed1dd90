"""Command-line front end.

Exit codes: 0 definitive answer, 1 usage or input error, 2 open case
(Unknown verdict, unsupported witness, or no reduction within budget).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .automorphisms import PolyMap, build_witness, reduction_search
from .bracket import bracket
from .classifier import Status, classify_ap, classify_triple
from .degree_analysis import BoundInapplicable, exclude_all, type_iii_possible
from .pairs import PreconditionError, SUQuery, su_lower_bound
from .poly import ParseError, PolynomialError, parse
from .semigroup import lemma31_sweep

EXIT_OK, EXIT_ERROR, EXIT_OPEN = 0, 1, 2


def _emit(payload, out=None) -> None:
    text = json.dumps(payload, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _sorted_triple(values) -> tuple:
    t = tuple(values)
    s = tuple(sorted(t))
    if s != t:
        print(f"note: sorted multidegree {t} to {s}", file=sys.stderr)
    return s


def _pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected PAIR like 1,3, got {text!r}")
    if (min(i, j), max(i, j)) not in ((1, 2), (1, 3), (2, 3)):
        raise argparse.ArgumentTypeError(f"invalid pair {text!r}")
    return min(i, j), max(i, j)


def _pair_value(text: str) -> tuple[tuple[int, int], int]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected PAIR=VAL, got {text!r}")
    pair, val = text.split("=", 1)
    return _pair(pair), int(val)


def _verdict_exit(status: Status) -> int:
    return EXIT_OPEN if status is Status.UNKNOWN else EXIT_OK


def cmd_classify(args) -> int:
    v = classify_triple(*_sorted_triple(args.degrees))
    if args.json:
        _emit(v.to_json())
    else:
        print(f"{tuple(v.triple)}: {v.status.value} ({v.why.get('rule')})")
    return _verdict_exit(v.status)


def cmd_classify_ap(args) -> int:
    v = classify_ap(args.a, args.d)
    _emit(v.to_json())
    return _verdict_exit(v.status)


def _threads() -> int:
    env = os.environ.get("MDEG_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def cmd_sweep(args) -> int:
    rows = list(range(1, args.a_max + 1))

    def work(a):
        return [classify_ap(a, d).dumps() for d in range(args.d_min, args.d_max + 1)]

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        chunks = list(pool.map(work, rows))  # map keeps input order
    lines = [line for chunk in chunks for line in chunk]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_build(args) -> int:
    t = _sorted_triple(args.degrees)
    F = build_witness(*t)
    if F is None:
        _emit({"mdeg": list(t), "status": "unsupported",
               "note": "third degree is not a non-negative combination of the first two"})
        return EXIT_OPEN
    _emit(F.to_json(), args.output)
    return EXIT_OK


def cmd_bracket(args) -> int:
    f = parse(args.f, args.vars)
    g = parse(args.g, args.vars)
    _emit(bracket(f, g).to_json())
    return EXIT_OK


def cmd_su_bound(args) -> int:
    qy = SUQuery.from_deg_y(args.deg_f, args.deg_g, args.deg_y, args.bracket)
    _emit({"deg_f": qy.deg_f, "deg_g": qy.deg_g, "p": qy.p, "q": qy.q, "r": qy.r,
           "bracket_deg": qy.bracket_deg, "bound": su_lower_bound(qy)})
    return EXIT_OK


def cmd_exclude(args) -> int:
    t = _sorted_triple(args.degrees)
    summary = exclude_all(t, dict(args.bracket_lb or []), strict=args.strict or [])
    _emit(summary.to_json())
    return EXIT_OK if summary.no_elementary_reduction else EXIT_OPEN


def cmd_type3(args) -> int:
    w = type_iii_possible(_sorted_triple(args.degrees))
    _emit({"witness": None if w is None else w.to_json()})
    return EXIT_OK


def cmd_reduce(args) -> int:
    with open(args.F) as fh:
        F = PolyMap.from_json(json.load(fh))
    g = reduction_search(F, args.position, args.max_deg)
    _emit({"position": args.position, "g": None if g is None else str(g),
           "found": g is not None})
    return EXIT_OK if g is not None else EXIT_OPEN


def cmd_lemma31(args) -> int:
    bad = lemma31_sweep(args.a_max, args.d_max)
    _emit({"a_max": args.a_max, "d_max": args.d_max,
           "checked": args.a_max * (args.d_max + 1),
           "exceptions": [list(p) for p in bad]})
    return EXIT_OK if not bad else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tamemdeg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="verdict for a degree triple")
    p.add_argument("degrees", type=int, nargs=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("classify-ap", help="verdict for (a, a+d, a+2d)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_classify_ap)

    p = sub.add_parser("sweep", help="JSON-lines verdicts over an (a, d) grid")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--d-min", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("build", help="tame witness for a degree triple")
    p.add_argument("degrees", type=int, nargs=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("bracket", help="Poisson bracket minors and degree")
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    p.add_argument("--vars", type=int, default=3)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("su-bound", help="evaluate the degree lower bound for G(f, g)")
    p.add_argument("--deg-f", type=int, required=True)
    p.add_argument("--deg-g", type=int, required=True)
    p.add_argument("--deg-y", type=int, required=True)
    p.add_argument("--bracket", type=int, required=True)
    p.set_defaults(func=cmd_su_bound)

    p = sub.add_parser("exclude", help="mechanized elementary-reduction exclusion")
    p.add_argument("degrees", type=int, nargs=3)
    p.add_argument("--bracket-lb", type=_pair_value, action="append", metavar="PAIR=VAL")
    p.add_argument("--strict", type=_pair, action="append", metavar="PAIR")
    p.set_defaults(func=cmd_exclude)

    p = sub.add_parser("type3", help="search the type-III degree systems")
    p.add_argument("degrees", type=int, nargs=3)
    p.set_defaults(func=cmd_type3)

    p = sub.add_parser("reduce", help="bounded elementary-reduction search")
    p.add_argument("-F", required=True, help="PolyMap JSON file")
    p.add_argument("--position", type=int, required=True)
    p.add_argument("--max-deg", type=int)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("lemma31", help="check the a | 2d equivalence on a grid")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.set_defaults(func=cmd_lemma31)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: malformed polynomial: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_ERROR
    except (PolynomialError, PreconditionError, BoundInapplicable, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
