"""Command-line interface.

Every subcommand prints a report ``{command, inputs, result, status, elapsed_ms}``.
Exit codes: 0 success or pass, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import suites, twist
from .derivations import DerivationElement, bracket
from .exact import h_series, obstruction_series, s_series
from .goldman_turaev import mu_alg, mu_theta_0, schedler_delta
from .morita import morita_trace
from .tensor import ParseError, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _word(text: str, genus: int) -> tuple:
    w = parse_word(text, genus)
    if not w:
        raise ParseError("the word must be nonempty")
    return w


def _cmd_schedler(a):
    return schedler_delta(_word(a.word, a.genus), a.genus), None


def _cmd_mu_alg(a):
    return mu_alg(_word(a.word, a.genus), a.genus), None


def _cmd_mu0(a):
    return mu_theta_0(_word(a.word, a.genus), a.genus), None


def _cmd_trace(a):
    w = _word(a.word, a.genus)
    if len(w) < 2:
        raise ParseError("the trace needs a word of degree >= 2")
    return morita_trace(len(w) - 1, DerivationElement.from_word(a.genus, w)), None


def _cmd_bracket(a):
    d1 = DerivationElement.from_word(a.genus, _word(a.word1, a.genus))
    d2 = DerivationElement.from_word(a.genus, _word(a.word2, a.genus))
    return bracket(d1, d2), None


def _cmd_series(a):
    fn = {"s": s_series, "h": h_series, "obstruction": obstruction_series}[a.which]
    return fn(a.order), None


def _cmd_verify(a):
    if a.suite == "54trace":
        r = suites.verify_trace(a.genus, a.m, a.mode, a.n, a.seed)
    elif a.suite == "bialgebra":
        r = suites.verify_bialgebra(a.genus, a.max_degree, jobs=a.jobs)
    elif a.suite == "mu-zero":
        r = suites.verify_mu_zero(a.genus, a.max_degree, a.n if a.mode == "random" else 0, a.seed)
    elif a.suite == "fn":
        r = suites.verify_fn(a.max_n)
    else:
        r = suites.verify_obstruction_corpus(a.n, a.max_crossings, a.seed, a.order, jobs=a.jobs)
    return r, ("pass" if r["failure_count"] == 0 else "fail")


def _cmd_obstruction(a):
    try:
        with open(a.file, encoding="utf-8") as fh:
            code = twist.GaussCode.from_json(fh.read())
    except OSError as exc:
        raise ParseError(str(exc)) from None
    return twist.obstruction_verdict(code, a.order), None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gtalg", description="Exact graded Goldman-Turaev computations.")
    p.add_argument("--output", choices=("json", "text"), default="json", help="report format (default json)")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0, for byte-stable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--genus", type=int, default=1, help="genus (default 1)")
        s.add_argument("--word", required=True, help="word such as a1b1a2")
        s.set_defaults(func=fn)
        return s

    word_cmd("schedler", _cmd_schedler, "cobracket of N(word)")
    word_cmd("mu-alg", _cmd_mu_alg, "leading term of the self-intersection map")
    word_cmd("mu0", _cmd_mu0, "constant term of the self-intersection map")
    word_cmd("trace", _cmd_trace, "Morita trace of N(word)")

    s = sub.add_parser("bracket", help="bracket of N(word1) and N(word2)")
    s.add_argument("--genus", type=int, default=1, help="genus (default 1)")
    s.add_argument("--word1", required=True)
    s.add_argument("--word2", required=True)
    s.set_defaults(func=_cmd_bracket)

    s = sub.add_parser("series", help="truncated power series")
    s.add_argument("which", choices=("s", "h", "obstruction"))
    s.add_argument("--order", type=int, default=8, help="truncation order (default 8)")
    s.set_defaults(func=_cmd_series)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=("54trace", "bialgebra", "mu-zero", "fn", "obstruction-corpus"))
    s.add_argument("--genus", type=int, default=1, help="genus (default 1)")
    s.add_argument("--max-degree", type=int, default=6, help="degree bound (default 6)")
    s.add_argument("--m", type=int, default=3, help="degree of w for 54trace (default 3)")
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--n", type=int, default=100, help="sample count for random modes and the corpus (default 100)")
    s.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    s.add_argument("--max-n", type=int, default=12, help="bound for the fn suite (default 12)")
    s.add_argument("--max-crossings", type=int, default=5, help="corpus crossing bound (default 5)")
    s.add_argument("--order", type=int, default=4, help="series order for the corpus (default 4)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("obstruction", help="obstruction verdict for a Gauss code JSON file")
    s.add_argument("file")
    s.add_argument("--order", type=int, default=8, help="series order (default 8)")
    s.set_defaults(func=_cmd_obstruction)
    return p


def _serialize(obj):
    return obj.to_json() if hasattr(obj, "to_json") else obj


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"gtalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "output", "no_timing", "command")}
    start = time.perf_counter()
    try:
        value, status = args.func(args)
    except (ParseError, twist.GaussCodeError, ValueError) as exc:
        print(f"gtalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = 0 if args.no_timing else int((time.perf_counter() - start) * 1000)
    if args.no_timing and isinstance(value, dict) and "elapsed_ms" in value:
        value = dict(value, elapsed_ms=0)
    report = {
        "command": args.command,
        "inputs": inputs,
        "result": _serialize(value),
        "status": status or "value",
        "elapsed_ms": elapsed,
    }
    if args.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"{args.command}: {status or 'value'}")
        print(value if not isinstance(value, dict) else json.dumps(value, indent=2))
    return EXIT_FAIL if status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
