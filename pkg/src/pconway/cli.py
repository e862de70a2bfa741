"""Command-line front end.

Exit codes: 0 ok, 1 expression syntax error, 2 ill-starred expression,
3 overflow, 4 malformed automaton JSON, 5 unknown suite, 6 check failures,
64 bad command-line usage.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from . import automata
from .errors import ExprSyntaxError, FormatError, IllStarred, Overflow
from .ratexpr import compile_expr, eval_series, parse
from .semiring import BASE_INSTANCES, get_semiring
from .series import DEFAULT_MAX_LEN, SeriesSemiring
from .verify import SUITES, run_suite

EXIT_SYNTAX, EXIT_ILL_STARRED, EXIT_OVERFLOW, EXIT_FORMAT = 1, 2, 3, 4
EXIT_UNKNOWN_SUITE, EXIT_CHECK_FAILED, EXIT_USAGE = 5, 6, 64


@dataclass(frozen=True)
class CliConfig:
    semiring: str = "nat"
    alphabet: str = "xy"
    max_len: int = DEFAULT_MAX_LEN
    seed: int = 0
    cases: int = 100
    out: Optional[str] = None

    def __post_init__(self):
        if self.semiring not in BASE_INSTANCES:
            raise ValueError(f"semiring must be one of {sorted(BASE_INSTANCES)}")
        if not self.alphabet or len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet must be nonempty with distinct characters")
        if not all("a" <= ch <= "z" for ch in self.alphabet):
            raise ValueError("alphabet letters must be lowercase characters")
        if self.max_len < 0:
            raise ValueError("maxlen must be nonnegative")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p, semiring_default: Optional[str] = "nat"):
    p.add_argument("-s", "--semiring", default=semiring_default,
                   help="coefficient semiring: bool, nat, natinf, natmat2")
    p.add_argument("-a", "--alphabet", default="xy", help="letters, e.g. xy")
    p.add_argument("-L", "--maxlen", type=int, default=DEFAULT_MAX_LEN,
                   help="truncation length")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pconway", description="Partial Conway semiring toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate an expression to a coefficient listing")
    p.add_argument("-e", "--expr", required=True)
    _add_common(p)

    p = sub.add_parser("compile", help="compile an expression to a JSON automaton")
    p.add_argument("-e", "--expr", required=True)
    p.add_argument("-o", "--out", help="output file (default stdout)")
    _add_common(p)

    p = sub.add_parser("behavior", help="coefficient listing of a JSON automaton")
    p.add_argument("automaton", help="JSON automaton file, or - for stdin")
    _add_common(p, semiring_default=None)

    p = sub.add_parser("check", help="run an identity verification suite")
    p.add_argument("-t", "--suite", required=True, help=", ".join(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    _add_common(p)
    return parser


def _config(args) -> CliConfig:
    return CliConfig(
        semiring=args.semiring or "nat",
        alphabet=args.alphabet,
        max_len=args.maxlen,
        seed=getattr(args, "seed", 0),
        cases=getattr(args, "cases", 100),
        out=getattr(args, "out", None),
    )


def cmd_eval(expr_text: str, cfg: CliConfig, out) -> int:
    ring = SeriesSemiring(get_semiring(cfg.semiring), cfg.alphabet, cfg.max_len)
    out.write(eval_series(parse(expr_text, cfg.alphabet), ring).dump())
    return 0


def cmd_compile(expr_text: str, cfg: CliConfig, out) -> int:
    coeff = get_semiring(cfg.semiring)
    aut = compile_expr(parse(expr_text, cfg.alphabet), coeff, cfg.alphabet)
    text = automata.dumps(aut)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_behavior(path: str, cfg: CliConfig, out, semiring_given: bool = False) -> int:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise FormatError(f"cannot read {path}: {exc}") from exc
    aut = automata.loads(text)
    if semiring_given and aut.coeff.name != cfg.semiring:
        raise FormatError(f"automaton is over {aut.coeff.name}, not {cfg.semiring}")
    out.write(automata.behavior(aut, cfg.max_len).dump())
    return 0


def cmd_check(suite: str, cfg: CliConfig, out) -> int:
    if suite not in SUITES:
        print(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_UNKNOWN_SUITE
    reports = run_suite(suite, get_semiring(cfg.semiring), cfg.alphabet, cfg.max_len,
                        cfg.seed, cfg.cases)
    ok = True
    for rep in reports:
        out.write(rep.summary() + "\n")
        for f in rep.failures[:5]:
            out.write(f"  {f}\n")
        ok = ok and rep.passed
    out.write(f"{'PASS' if ok else 'FAIL'} {suite} (semiring {cfg.semiring}, alphabet "
              f"{cfg.alphabet}, L={cfg.max_len}, seed {cfg.seed})\n")
    return 0 if ok else EXIT_CHECK_FAILED


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "eval":
            return cmd_eval(args.expr, cfg, out)
        if args.command == "compile":
            return cmd_compile(args.expr, cfg, out)
        if args.command == "behavior":
            return cmd_behavior(args.automaton, cfg, out, args.semiring is not None)
        return cmd_check(args.suite, cfg, out)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except IllStarred as exc:
        print(f"ill-starred: {exc}", file=sys.stderr)
        return EXIT_ILL_STARRED
    except Overflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except FormatError as exc:
        print(f"malformed automaton: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
