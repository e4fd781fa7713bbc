"""Command-line front end.

Exit codes: 0 ok, 1 bad input, 2 tied window, 3 not realizable / illegal,
4 budget exhausted, 5 validation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from lrm import core, scheme12, scheme13
from lrm.errors import (
    BudgetExceeded,
    IllegalCodeword,
    LrmError,
    NotRealizable,
    SuccessionViolation,
    TiedWindow,
    UnsupportedN,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_TIE = 2
EXIT_NOT_REALIZABLE = 3
EXIT_BUDGET = 4
EXIT_INVALID = 5


class CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    # argparse's own exit status 2 is reserved for tied windows here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise CliExit(EXIT_INPUT, f"expected comma-separated integers, got {text!r}") from None


def _emit(args, scheme: str, n: Any, result: dict, plain: list[str], witness=None) -> None:
    if args.format == "json":
        doc = {"scheme": scheme, "n": n, "result": result}
        if witness is not None:
            doc["witness"] = witness
        print(json.dumps(doc, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in result.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(map(str, value))
            writer.writerow([key, value])
        if witness is not None:
            writer.writerow(["witness", " ".join(witness)])
        sys.stdout.write(buf.getvalue())
    else:
        for line in plain:
            print(line)


def _perm_text(perm: Sequence[int]) -> str:
    return "[" + ",".join(map(str, perm)) + "]"


def cmd_demod(args) -> int:
    levels = _int_list(args.levels)
    try:
        params = core.LrmParams(args.s, args.t, len(levels))
    except ValueError as exc:
        raise CliExit(EXIT_INPUT, str(exc)) from None
    try:
        word = core.demodulate(params, levels)
    except TiedWindow as exc:
        raise CliExit(EXIT_TIE, str(exc)) from None

    result: dict[str, Any] = {"windows": [list(p) for p in word]}
    if args.s == 1 and args.t == 2:
        code = scheme12.format_bits(scheme12.from_base_word(word))
        result["codeword"] = code
        plain = [code]
    elif args.s == 1 and args.t == 3:
        symbols = scheme13.from_base_word(word)
        code = scheme13.format_digits(scheme13.encode(symbols))
        result["base_word"] = list(symbols)
        result["codeword"] = code
        plain = [",".join(map(str, symbols)), code]
    else:
        plain = [" ".join(_perm_text(p) for p in word)]
    _emit(args, str(params), params.n, result, plain)
    return EXIT_OK


def _parse_word(text: str, s: int, t: int) -> tuple[core.LrmParams, core.BaseWord]:
    """Binary word for (1,2,n); ternary codeword or symbols for (1,3,n);
    otherwise comma-separated permutations written as digit strings."""
    try:
        if s == 1 and t == 2 and "," not in text:
            bits = scheme12.parse_bits(text)
            return scheme12.params_for(len(bits)), scheme12.to_base_word(bits)
        if s == 1 and t == 3 and "," not in text:
            code = scheme13.parse_ternary(text)
            params = scheme13.params_for(len(code))
            try:
                alpha = scheme13.decode(code)
            except IllegalCodeword as exc:
                raise NotRealizable(f"codeword {text} is illegal ({exc.reason})") from None
            return params, scheme13.to_base_word(alpha)
        tokens = text.split(",")
        if s == 1 and t == 3 and all(len(tok) == 1 for tok in tokens):
            symbols = [int(tok) for tok in tokens]
            if not all(0 <= x < 6 for x in symbols):
                raise ValueError(f"symbols must lie in 0..5, got {text!r}")
            params = scheme13.params_for(len(symbols))
            return params, scheme13.to_base_word(symbols)
        word = [tuple(int(ch) for ch in tok) for tok in tokens]
        params = core.LrmParams(s, t, len(word) * s)
        return params, core.check_base_word(params, word)
    except (ValueError, KeyError) as exc:
        if isinstance(exc, NotRealizable):
            raise
        raise CliExit(EXIT_INPUT, f"cannot parse word {text!r}: {exc}") from None


def cmd_realize(args) -> int:
    try:
        params, word = _parse_word(args.word, args.s, args.t)
        levels = core.realize(params, word)
    except NotRealizable as exc:
        print("NOT_REALIZABLE")
        print(exc, file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    _emit(args, str(params), params.n, {"levels": list(levels)}, [",".join(map(str, levels))])
    return EXIT_OK


def cmd_encode13(args) -> int:
    symbols = _int_list(args.word)
    if len(symbols) < 3 or not all(0 <= x < 6 for x in symbols):
        raise CliExit(EXIT_INPUT, "base-word needs at least 3 symbols from 0..5")
    try:
        code = scheme13.encode(symbols)
    except SuccessionViolation as exc:
        raise CliExit(EXIT_INPUT, str(exc)) from None
    params = scheme13.params_for(len(symbols))
    realizable = core.is_realizable(params, scheme13.to_base_word(symbols))
    text = scheme13.format_digits(code)
    _emit(args, str(params), params.n, {"codeword": text, "realizable": realizable}, [text])
    return EXIT_OK


def cmd_decode13(args) -> int:
    try:
        code = scheme13.parse_ternary(args.word)
    except ValueError as exc:
        raise CliExit(EXIT_INPUT, str(exc)) from None
    if len(code) < 3:
        raise CliExit(EXIT_INPUT, "codeword needs at least 3 digits")
    params = scheme13.params_for(len(code))
    try:
        alpha = scheme13.decode(code)
    except IllegalCodeword as exc:
        print(f"ILLEGAL ({exc.reason})")
        return EXIT_NOT_REALIZABLE
    legal = core.is_realizable(params, scheme13.to_base_word(alpha))
    _emit(args, str(params), params.n, {"base_word": list(alpha), "legal": legal},
          [",".join(map(str, alpha)), "legal" if legal else "illegal (not realizable)"])
    return EXIT_OK


def _load_code(path: str) -> scheme12.GrayCode:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if isinstance(doc, list):
            doc = {"words": doc}
        words = tuple(scheme12.parse_bits(str(w)) for w in doc["words"])
        return scheme12.GrayCode(words, bool(doc.get("cyclic", False))), doc.get("weight")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliExit(EXIT_INPUT, f"cannot read Gray code from {path}: {exc}") from None


def cmd_gray(args) -> int:
    if args.mode == "verify":
        if not args.file:
            raise CliExit(EXIT_INPUT, "gray verify needs --file")
        code, w = _load_code(args.file)
        report = scheme12.validate_gray(code, w)
        result = {"passed": report.passed, "size": report.size, "cyclic": report.cyclic,
                  "failures": [f"{i}: {why}" for i, why in report.failures]}
        plain = [f"{'PASS' if report.passed else 'FAIL'} size={report.size} cyclic={str(report.cyclic).lower()}"]
        plain += [f"index={i}: {why}" for i, why in report.failures]
        _emit(args, "(1,2,n)", report.n, result, plain)
        return EXIT_OK if report.passed else EXIT_INVALID

    if args.n is None:
        raise CliExit(EXIT_INPUT, f"gray {args.mode} needs --n")
    scheme = f"(1,2,{args.n})"
    if args.mode == "search":
        try:
            graph = scheme12.build_graph(args.n, args.w)
            res = scheme12.longest_cycle(graph, args.budget or scheme12.DEFAULT_SEARCH_BUDGET)
        except BudgetExceeded as exc:
            raise CliExit(EXIT_BUDGET, str(exc)) from None
        except ValueError as exc:
            raise CliExit(EXIT_INPUT, str(exc)) from None
        witness = [scheme12.format_bits(v) for v in res.witness]
        _emit(args, scheme, args.n, {"length": res.length, "bound": 2 * args.n, "nodes": res.nodes},
              [f"length={res.length}", "witness=" + " ".join(witness)], witness)
        return EXIT_OK

    try:
        code = scheme12.construct_2n_code(args.n)
    except UnsupportedN as exc:
        raise CliExit(EXIT_INPUT, str(exc)) from None
    report = scheme12.validate_gray(code, 2)
    words = [scheme12.format_bits(v) for v in code.words]
    _emit(args, scheme, args.n, {"size": len(words), "cyclic": True, "valid": report.passed},
          words + [f"size={len(words)} cyclic=true valid={str(report.passed).lower()}"], words)
    return EXIT_OK if report.passed else EXIT_INVALID


def cmd_count(args) -> int:
    if args.scheme.replace(" ", "") != "1,3":
        raise CliExit(EXIT_INPUT, f"count supports only --scheme 1,3, got {args.scheme!r}")
    if args.n is not None:
        lo = hi = args.n
    elif args.lo is not None and args.hi is not None:
        lo, hi = args.lo, args.hi
    else:
        raise CliExit(EXIT_INPUT, "count needs --n or both --from and --to")
    budgets = {}
    if args.budget:
        budgets = {"orders_budget": args.budget, "scan_budget": args.budget}
    try:
        rows = scheme13.rate_table(lo, hi, args.method, args.workers, **budgets)
    except BudgetExceeded as exc:
        raise CliExit(EXIT_BUDGET, str(exc)) from None
    except LrmError as exc:
        raise CliExit(EXIT_INVALID, str(exc)) from None
    except ValueError as exc:
        raise CliExit(EXIT_INPUT, str(exc)) from None

    table = [[r.n, r.M, str(r.rate), r.decimal] for r in rows]
    if args.format == "json":
        doc = {"scheme": "(1,3,n)", "n": [lo, hi], "result": [
            {"n": r.n, "M": r.M, "rate": str(r.rate), "decimal": r.decimal, "method": r.method}
            for r in rows]}
        print(json.dumps(doc, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if args.format == "csv":
            writer.writerow(["n", "M", "rate", "decimal"])
        writer.writerows(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lrm", description="Local rank modulation tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        return p

    p = common(sub.add_parser("demod", help="read charge levels as window permutations"))
    p.add_argument("--levels", required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--t", type=int, default=2)
    p.set_defaults(func=cmd_demod)

    p = common(sub.add_parser("realize", help="canonical charge levels for a word"))
    p.add_argument("--word", required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--t", type=int, default=2)
    p.set_defaults(func=cmd_realize)

    p = common(sub.add_parser("encode13", help="(1,3,n) base-word to ternary codeword"))
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_encode13)

    p = common(sub.add_parser("decode13", help="(1,3,n) ternary codeword to base-word"))
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decode13)

    p = common(sub.add_parser("gray", help="weight-2 cyclic Gray codes for (1,2,n)"))
    p.add_argument("mode", choices=("search", "construct", "verify"))
    p.add_argument("--n", type=int)
    p.add_argument("--w", type=int, default=2)
    p.add_argument("--file")
    p.add_argument("--budget", type=_positive, help="DFS node budget for search")
    p.add_argument("--workers", type=_positive, default=1, help="accepted; search runs serially")
    p.set_defaults(func=cmd_gray)

    p = common(sub.add_parser("count", help="legal (1,3,n) codewords and M/3^n"))
    p.add_argument("--scheme", default="1,3")
    p.add_argument("--n", type=int)
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    p.add_argument("--method", choices=("auto", "orders", "scan", "both"), default="auto")
    p.add_argument("--budget", type=_positive, help="max enumerated items per n")
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_count)
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliExit as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
