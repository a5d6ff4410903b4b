"""Command-line front-end: stream text between schemes over stdin/stdout.

Exit codes: 0 success, 1 conversion or I/O failure, 2 usage error.
Diagnostics go to the error stream as ``line:column: reason: slice`` with
1-based columns; in strict mode a failed line is dropped from the output
and processing continues.
"""

import argparse
import os
import sys
from typing import BinaryIO, TextIO

from .errors import ConversionError, LexError
from .pipeline import SCHEME_NAMES, Scheme, convert_line
from .tables import dump_mapping_tsv


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route through run() for a clean exit 2
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="uast",
        description="Convert Sanskrit text between uast, uast-io, iast, and devanagari.",
    )
    parser.add_argument("-f", "--from", dest="src", choices=SCHEME_NAMES, help="input scheme")
    parser.add_argument("-t", "--to", dest="dst", choices=SCHEME_NAMES, help="output scheme")
    parser.add_argument("-i", dest="infile", metavar="FILE", help="input file (default stdin)")
    parser.add_argument("-o", dest="outfile", metavar="FILE", help="output file (default stdout)")
    parser.add_argument(
        "--lenient",
        action="store_true",
        help="pass unconvertible slices through instead of failing",
    )
    parser.add_argument(
        "--dump-tables",
        action="store_true",
        help="print the diacritic replacement chart as TSV and exit",
    )
    return parser


def _convert_stream(
    src: Scheme,
    dst: Scheme,
    lenient: bool,
    infile: BinaryIO,
    outfile: BinaryIO,
    errfile: TextIO,
) -> int:
    failed = False
    consumed = 0
    line_no = 0
    for raw in infile:
        line_no += 1
        body = raw[:-1] if raw.endswith(b"\n") else raw
        try:
            line = body.decode("utf-8")
        except UnicodeDecodeError as e:
            print(f"invalid UTF-8 at byte {consumed + e.start}", file=errfile)
            return 1
        try:
            out = convert_line(line, src, dst, lenient=lenient)
        except LexError as e:
            failed = True
            print(ConversionError(line_no, e.offset, e.slice, e.reason), file=errfile)
        else:
            outfile.write(out.encode("utf-8"))
            if raw.endswith(b"\n"):
                outfile.write(b"\n")
        consumed += len(raw)
    outfile.flush()
    return 1 if failed else 0


def run(
    argv: list[str],
    infile: BinaryIO,
    outfile: BinaryIO,
    errfile: TextIO,
) -> int:
    """Parse arguments and convert infile to outfile line by line."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"{parser.prog}: error: {e}", file=errfile)
        return 2
    except SystemExit as e:  # --help
        return int(e.code or 0)

    if args.dump_tables:
        outfile.write(dump_mapping_tsv().encode("utf-8"))
        outfile.flush()
        return 0
    if not args.src or not args.dst:
        print(f"{parser.prog}: error: -f/--from and -t/--to are required", file=errfile)
        return 2

    src = Scheme(args.src)
    dst = Scheme(args.dst)
    try:
        fin = open(args.infile, "rb") if args.infile else infile
    except OSError as e:
        print(f"{parser.prog}: error: {e}", file=errfile)
        return 1
    try:
        fout = open(args.outfile, "wb") if args.outfile else outfile
    except OSError as e:
        if fin is not infile:
            fin.close()
        print(f"{parser.prog}: error: {e}", file=errfile)
        return 1
    try:
        return _convert_stream(src, dst, args.lenient, fin, fout, errfile)
    except BrokenPipeError:
        return 1  # downstream reader went away mid-stream
    except OSError as e:
        print(f"{parser.prog}: error: {e}", file=errfile)
        return 1
    finally:
        if fin is not infile:
            fin.close()
        if fout is not outfile:
            try:
                fout.close()
            except OSError:
                pass


def main() -> None:
    code = run(sys.argv[1:], sys.stdin.buffer, sys.stdout.buffer, sys.stderr)
    try:
        sys.stdout.flush()
    except BrokenPipeError:
        # keep interpreter shutdown from flushing to the dead pipe again
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 1
    sys.exit(code)
