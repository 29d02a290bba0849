"""Command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 pipeline/oracle
mismatch, 3 ground set too large for the oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .model import DeclarativeProcess, ParseError, Trace, classify, parse_process
from .oracle import SizeLimitError, brute_force_traces
from .possim import enumerate_possim
from .relations import hasse_pairs
from .traces import count_traces, traces

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2
EXIT_TOO_LARGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage problems count as validation errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="decltrace",
        description="Enumerate, count, and inspect the traces of a declarative process.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("traces", help="print every trace in (length, index) order")
    cmd.add_argument("file", help="process description file")
    cmd.add_argument("--format", choices=("text", "json"), default="text")
    cmd.add_argument(
        "--parallel",
        action="store_true",
        help="fan extension generation out over images (output is unchanged)",
    )

    cmd = commands.add_parser("count", help="print the number of traces without enumerating")
    cmd.add_argument("file")

    cmd = commands.add_parser(
        "possim", help="print each realizable trace image with its internal order"
    )
    cmd.add_argument("file")

    cmd = commands.add_parser("classify", help="print the constraint-set class")
    cmd.add_argument("file")

    cmd = commands.add_parser(
        "check", help="compare the pipeline against the brute-force reference"
    )
    cmd.add_argument("file")
    return parser


def _load(path: str) -> DeclarativeProcess:
    return parse_process(Path(path).read_text(encoding="utf-8"))


def _format_trace(names: tuple[str, ...], trace: Trace) -> str:
    return " ".join(names[i] for i in trace) if trace else "-"


def _run_traces(process: DeclarativeProcess, fmt: str, parallel: bool) -> int:
    result = traces(process, parallel=parallel)
    names = process.names()
    if fmt == "json":
        print(json.dumps([[names[i] for i in trace] for trace in result]))
    else:
        for trace in result:
            print(_format_trace(names, trace))
    return EXIT_OK


def _run_possim(process: DeclarativeProcess) -> int:
    names = process.names()
    for downset in enumerate_possim(process):
        label = "{" + ",".join(names[i] for i in sorted(downset.members)) + "}"
        covers = hasse_pairs(downset.order)
        if covers:
            label += " " + " ".join(f"{names[i]}<{names[j]}" for i, j in covers)
        print(label)
    return EXIT_OK


def _run_check(process: DeclarativeProcess) -> int:
    try:
        reference = brute_force_traces(process)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    computed = traces(process)
    if computed == reference:
        print(f"ok: {len(computed)} traces")
        return EXIT_OK
    missing = set(reference) - set(computed)
    extra = set(computed) - set(reference)
    print(
        f"mismatch: {len(computed)} computed vs {len(reference)} reference "
        f"({len(missing)} missing, {len(extra)} extra)",
        file=sys.stderr,
    )
    return EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        process = _load(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.command == "traces":
        return _run_traces(process, args.format, args.parallel)
    if args.command == "count":
        print(count_traces(process))
        return EXIT_OK
    if args.command == "possim":
        return _run_possim(process)
    if args.command == "classify":
        print(classify(process).value)
        return EXIT_OK
    return _run_check(process)


if __name__ == "__main__":
    sys.exit(main())
