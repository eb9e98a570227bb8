"""Command-line front end.

Subcommands map one-to-one onto the library surface: position queries
(outcome, sequence, form, classify), coin-problem helpers (frobenius,
reduce), exceptional-set geometry (tset ...), map rendering (map), and the
self-verification suites (verify).  Rulesets are written "a,b/c,d" (Left
moves / Right moves).  Every command accepts --json for structured output.

Exit codes: 0 success, 1 bad usage or bad input values, 2 period not found
within the cap, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import parse_ruleset
from .engine import PeriodNotFound, classify, detect_eventual_form, outcome, outcome_sequence
from .geometry import TSetParams, t_distance, t_lines, t_membership, two_vs_two_condition
from .numeric import CoinSet, frobenius, knapsack_to_game, representable
from . import mapgen, verify


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_coins(text: str) -> CoinSet:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad coin set {text!r}; expected comma-separated integers")
    return CoinSet(values)


def _parse_span(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"bad range {text!r}; expected lo:hi")
    return int(lo), int(hi)


def _emit(args, payload: dict, text: str) -> int:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)
    return 0


def _cmd_outcome(args) -> int:
    rules = parse_ruleset(args.rules)
    out = outcome(rules, args.n)
    return _emit(
        args,
        {"rules": str(rules), "n": args.n, "label": out.label, "oL": out.oL, "oR": out.oR},
        out.label,
    )


def _cmd_sequence(args) -> int:
    rules = parse_ruleset(args.rules)
    seq = outcome_sequence(rules, args.n_max)
    return _emit(args, {"rules": str(rules), "n_max": args.n_max, "word": seq.word}, seq.word)


def _cmd_form(args) -> int:
    rules = parse_ruleset(args.rules)
    form = detect_eventual_form(rules, args.cap)
    payload = {"rules": str(rules), **form.to_record()}
    return _emit(args, payload, f"preperiod={form.preperiod} period={form.period}")


def _cmd_classify(args) -> int:
    rules = parse_ruleset(args.rules)
    form = detect_eventual_form(rules, args.cap)
    payload = {"rules": str(rules), **form.to_record()}
    return _emit(
        args, payload, f"{classify(rules, args.cap)} preperiod={form.preperiod} period={form.period}"
    )


def _cmd_frobenius(args) -> int:
    coins = _parse_coins(args.coins)
    value = frobenius(coins)
    return _emit(args, {"coins": str(coins), "frobenius": value}, str(value))


def _cmd_reduce(args) -> int:
    coins = _parse_coins(args.coins)
    rules, heap = knapsack_to_game(coins, args.n)
    left_wins = outcome(rules, heap).oL
    reachable = representable(coins, args.n)
    payload = {
        "coins": str(coins),
        "n": args.n,
        "game": str(rules),
        "heap": heap,
        "oL": left_wins,
        "representable": reachable,
    }
    text = f"game={rules} heap={heap} oL={left_wins} representable={str(reachable).lower()}"
    return _emit(args, payload, text)


def _tset_params(args) -> TSetParams:
    return TSetParams(shift=args.shift, alpha=Fraction(args.alpha))


def _cmd_tset_lines(args) -> int:
    lines = t_lines(Fraction(args.alpha))
    payload = {"alpha": args.alpha, "lines": [[line.u, line.v] for line in lines]}
    return _emit(args, payload, "\n".join(f"{line.u}/{line.v}" for line in lines))


def _cmd_tset_member(args) -> int:
    member = t_membership(args.x, args.y, _tset_params(args))
    payload = {"x": args.x, "y": args.y, "shift": args.shift, "alpha": args.alpha, "member": member}
    return _emit(args, payload, str(member).lower())


def _cmd_tset_dist(args) -> int:
    dist = t_distance(args.x, args.y, _tset_params(args))
    payload = {"x": args.x, "y": args.y, "shift": args.shift, "alpha": args.alpha, "distance": dist}
    return _emit(args, payload, str(dist))


def _cmd_tset_condition(args) -> int:
    report = two_vs_two_condition(args.a, args.b, args.c, args.d, shift=args.shift)
    payload = {
        "a": args.a,
        "b": args.b,
        "c": args.c,
        "d": args.d,
        "holds": report.holds,
        "alpha": str(report.alpha),
        "threshold": report.threshold,
        "distance": report.distance,
        "shift": report.shift,
    }
    text = (
        f"{'holds' if report.holds else 'fails'} "
        f"distance={report.distance} threshold={report.threshold}"
    )
    return _emit(args, payload, text)


def _cmd_map(args) -> int:
    m = mapgen.domination_map(
        args.a, args.b, c_range=args.c_range, d_range=args.d_range, cap=args.cap,
        workers=args.workers,
    )
    rendered = mapgen.render_map(m, args.format)
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(rendered)
    if args.json:
        print(json.dumps(mapgen.summary(m)))
    elif not args.out:
        if args.format == "ppm":
            sys.stdout.buffer.write(rendered)
        else:
            sys.stdout.write(rendered.decode("ascii"))
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        results = verify.run_all(seed=args.seed, workers=args.workers)
    else:
        results = [verify.run_suite(args.suite, seed=args.seed, workers=args.workers)]
    if args.json:
        records = [
            {
                "suite": r.name,
                "criterion": r.criterion,
                "passed": r.passed,
                "checks": r.checks,
                "failures": list(r.failures),
                "detail": r.detail,
            }
            for r in results
        ]
        print(json.dumps(records))
    else:
        print(verify.format_report(results))
    return 0 if all(r.passed for r in results) else 3


def _add_json(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> _Parser:
    parser = _Parser(prog="partizan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("outcome", help="label of one heap size")
    p.add_argument("rules", help="ruleset, e.g. 1,2/1,3")
    p.add_argument("n", type=int, help="heap size")
    _add_json(p)
    p.set_defaults(func=_cmd_outcome)

    p = sub.add_parser("sequence", help="label word for heaps 0..NMAX")
    p.add_argument("rules")
    p.add_argument("n_max", type=int)
    _add_json(p)
    p.set_defaults(func=_cmd_sequence)

    for name, func in (("form", _cmd_form), ("classify", _cmd_classify)):
        p = sub.add_parser(name, help=f"{name} of the outcome sequence")
        p.add_argument("rules")
        p.add_argument("--cap", type=int, default=None, help="search cap on heap size")
        _add_json(p)
        p.set_defaults(func=func)

    p = sub.add_parser("frobenius", help="largest amount the coins cannot pay")
    p.add_argument("coins", help="coin values, e.g. 3,5")
    _add_json(p)
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("reduce", help="turn a coin question into a game position")
    p.add_argument("coins")
    p.add_argument("n", type=int, help="amount to pay")
    _add_json(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("tset", help="exceptional-set geometry queries")
    tsub = p.add_subparsers(dest="tset_command", required=True)

    q = tsub.add_parser("lines", help="primitive slopes of the line family")
    q.add_argument("alpha", help="slope bound, integer or fraction like 5/2")
    _add_json(q)
    q.set_defaults(func=_cmd_tset_lines)

    for name, func in (("member", _cmd_tset_member), ("dist", _cmd_tset_dist)):
        q = tsub.add_parser(name, help=f"point {name} query")
        q.add_argument("x", type=int)
        q.add_argument("y", type=int)
        q.add_argument("--shift", type=int, default=0, help="translate the point by (shift, shift)")
        q.add_argument("--alpha", required=True, help="slope bound")
        _add_json(q)
        q.set_defaults(func=func)

    q = tsub.add_parser("condition", help="dominance condition for ({a,b},{c,d})")
    for field in ("a", "b", "c", "d"):
        q.add_argument(field, type=int)
    q.add_argument("--shift", type=int, default=None, help="override the default shift of b")
    _add_json(q)
    q.set_defaults(func=_cmd_tset_condition)

    p = sub.add_parser("map", help="classify a (c,d) grid and render it")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--c-range", type=_parse_span, default=None, metavar="LO:HI")
    p.add_argument("--d-range", type=_parse_span, default=None, metavar="LO:HI")
    p.add_argument("--cap", type=int, default=mapgen.DEFAULT_CELL_CAP)
    p.add_argument("--format", choices=("csv", "ppm"), default="csv")
    p.add_argument("--out", default=None, help="write the render here instead of stdout")
    p.add_argument("--workers", type=int, default=None)
    _add_json(p)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("verify", help="run self-verification suites")
    p.add_argument(
        "suite", nargs="?", default="all", choices=("all",) + verify.SUITE_NAMES,
        help="one suite, or all",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    _add_json(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PeriodNotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
