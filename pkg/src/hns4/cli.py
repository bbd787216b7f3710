"""``hns4`` command-line tool.

Exit status: 0 on success, 1 on usage errors, 2 on evaluation errors
(bad expression, division by a zero divisor, overflow).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .algebra import NAMED_KINDS, HNSError, HNum, SystemDef, builtin_system, generic_system
from .expr import ExprError, evaluate_text
from .functions import exp_closed

EXIT_OK, EXIT_USAGE, EXIT_EVAL = 0, 1, 2

SYSTEM_NAMES = [k.value for k in NAMED_KINDS]


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which is reserved for evaluation errors here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def print_table(system: SystemDef | str) -> str:
    """Cayley table as a 5x5 text grid with ``e1..e4`` headers."""
    if isinstance(system, str):
        system = builtin_system(system)
    header = [system.name] + [f"e{j}" for j in range(1, 5)]
    rows = [header] + [[f"e{i + 1}"] + cells for i, cells in enumerate(system.table.rows_as_text())]
    label_width = max(len(row[0]) for row in rows)
    width = max(len(cell) for row in rows for cell in row[1:])
    return "\n".join(
        " ".join([row[0].ljust(label_width)] + [cell.rjust(width) for cell in row[1:]]) for row in rows
    )


def format_result(w: HNum, as_json: bool, digits: int) -> str:
    if as_json:
        return json.dumps({"system": w.system.name, "coeffs": list(w.a)})
    return w.render(digits)


def _system_arg(value: str) -> SystemDef:
    try:
        return builtin_system(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mu_arg(value: str) -> int:
    try:
        mu = int(value)
    except ValueError:
        mu = None
    if mu not in (-1, 0, 1):
        raise argparse.ArgumentTypeError(f"must be -1, 0 or 1, got {value!r}")
    return mu


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="hns4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("table", help="print the Cayley table of a system")
    p.add_argument("system", nargs="?", type=_system_arg, help=f"one of {', '.join(SYSTEM_NAMES)}")
    p.add_argument("--mu", nargs=2, type=_mu_arg, metavar=("M1", "M2"), help="generic doubling with these squares")

    def add_output_options(p):
        p.add_argument("--system", "-s", required=True, type=_system_arg)
        p.add_argument("--json", action="store_true", help="print {\"system\": ..., \"coeffs\": [...]}")
        p.add_argument("--digits", type=int, default=6, help="significant digits of plain output (default 6)")

    p = sub.add_parser("eval", help="evaluate an expression")
    add_output_options(p)
    p.add_argument("expression")

    p = sub.add_parser("exp", help="exponential of a1 e1 + a2 e2 + a3 e3 + a4 e4")
    add_output_options(p)
    p.add_argument("coeffs", nargs=4, type=float, metavar="A")

    p = sub.add_parser("repl", help="interactive evaluator")
    p.add_argument("--system", "-s", required=True, type=_system_arg)
    p.add_argument("--digits", type=int, default=6)
    return parser


def repl(system: SystemDef, stdin: TextIO, stdout: TextIO, stderr: TextIO, digits: int = 6) -> int:
    """Read one expression per line; ``:system S``, ``:table`` and ``:quit`` are commands."""
    interactive = stdin.isatty()
    status = EXIT_OK
    while True:
        if interactive:
            stdout.write(f"{system.name}> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line.startswith(":"):
            cmd, _, arg = line[1:].partition(" ")
            arg = arg.strip()
            if cmd in ("quit", "q", "exit"):
                break
            if cmd == "table":
                print(print_table(system), file=stdout)
            elif cmd == "system":
                try:
                    system = builtin_system(arg)
                except ValueError as exc:
                    print(f"error: {exc}", file=stderr)
                    status = EXIT_EVAL
            else:
                print(f"error: unknown command :{cmd} (use :system S, :table, :quit)", file=stderr)
                status = EXIT_EVAL
            continue
        try:
            print(evaluate_text(line, system).render(digits), file=stdout)
        except HNSError as exc:
            print(f"error: {exc}", file=stderr)
            status = EXIT_EVAL
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "table":
        if (args.system is None) == (args.mu is None):
            parser.print_usage(sys.stderr)
            print("hns4 table: error: give exactly one of SYSTEM or --mu M1 M2", file=sys.stderr)
            return EXIT_USAGE
        system = args.system if args.system is not None else generic_system(*args.mu)
        print(print_table(system))
        return EXIT_OK

    if args.command == "repl":
        return repl(args.system, sys.stdin, sys.stdout, sys.stderr, args.digits)

    if args.digits < 1:
        print("hns4: error: --digits must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "eval":
            result = evaluate_text(args.expression, args.system)
        else:
            result = exp_closed(args.system.number(*args.coeffs))
    except (ExprError, HNSError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    print(format_result(result, args.json, args.digits))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
