"""Command-line runner for script files.

    idealkit script.m2l [--check expected.txt] [--verbose-gb] [--max-seconds N]

Exit status: 0 success, 1 golden mismatch, 2 parse error, 3 runtime error,
4 I/O error.
"""

import argparse
import logging
import sys

from .evaluator import Evaluator
from .golden import compare
from .lexer import ScriptSyntaxError
from .parser import parse
from .values import ScriptRuntimeError

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_RUNTIME, EXIT_IO = 0, 1, 2, 3, 4


def build_parser():
    p = argparse.ArgumentParser(prog="idealkit", description="Run an ideal-computation script.")
    p.add_argument("script", help="script file (.m2l)")
    p.add_argument("--check", metavar="EXPECTED", help="compare the output with an expected-output file")
    p.add_argument("--verbose-gb", action="store_true", help="trace Groebner basis computations on stderr")
    p.add_argument("--max-seconds", type=float, metavar="N",
                   help="warn on stderr when a statement takes longer than N seconds")
    return p


def _read(path, err):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        print(f"error: cannot read {path}: {e.strerror or e}", file=err)
        return None


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)

    if args.verbose_gb:
        handler = logging.StreamHandler(err)
        handler.setFormatter(logging.Formatter("gb: %(message)s"))
        log = logging.getLogger("idealkit.groebner")
        log.addHandler(handler)
        log.setLevel(logging.DEBUG)

    source = _read(args.script, err)
    if source is None:
        return EXIT_IO
    expected = None
    if args.check:
        expected = _read(args.check, err)
        if expected is None:
            return EXIT_IO

    try:
        script = parse(source)
    except ScriptSyntaxError as e:
        print(f"{args.script}:{e.line}:{e.col}: syntax error: {e.message}", file=err)
        return EXIT_PARSE

    def budget(k, stmt, seconds):
        if args.max_seconds is not None and seconds > args.max_seconds:
            print(f"{args.script}:{stmt.line}: warning: statement {k} took {seconds:.1f}s "
                  f"(budget {args.max_seconds:g}s)", file=err)

    ev = Evaluator(on_statement=budget)
    try:
        records = ev.run(script)
    except ScriptRuntimeError as e:
        print(f"{args.script}:{e.line}:{e.col}: error: {e.message}", file=err)
        return EXIT_RUNTIME
    except RecursionError:
        print(f"{args.script}: error: expression nested too deeply", file=err)
        return EXIT_RUNTIME

    for rec in records:
        print(rec.text, file=out)

    if expected is not None:
        problems = compare(records, expected)
        if problems:
            for p in problems:
                print(f"{args.check}: mismatch: {p}", file=err)
            return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
