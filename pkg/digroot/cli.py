"""Command-line front end: extract square and cube roots, render tableaux, count operations, verify."""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from digroot.complexity import compare
from digroot.engine import OpCounters, RootKind, RootResult, extract_root
from digroot.errors import MalformedNumberError
from digroot.natural import DecimalNatural
from digroot.oracle import DifferentialVerifier
from digroot.tableau import render_text
from digroot.utils.utils_config import get_setting
from digroot.utils.utils_io import get_logger

logger = get_logger()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MALFORMED = 2
EXIT_MISMATCH = 3

COMMAND_KINDS = {"sqrt": RootKind.SQUARE, "cbrt": RootKind.CUBE}

# `verify --random` given without a count
RANDOM_COUNT_FROM_SETTINGS = -1


class UsageError(Exception):
    """Raised instead of argparse's own exit so that usage problems map to exit code 1."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="digroot", description="Digit-by-digit square and cube root extraction.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, kind in COMMAND_KINDS.items():
        root_parser = subparsers.add_parser(name, help=f"Floor {'square' if kind is RootKind.SQUARE else 'cube'} root.")
        root_parser.add_argument("number", type=str, help="Bare decimal number (digits 0-9 only).")
        root_parser.add_argument("--tableau", action="store_true", help="Print the worked long-form layout.")
        root_parser.add_argument("--unicode", action="store_true",
                                 help="Mark places with combining overline/circumflex instead of an ASCII line.")
        root_parser.add_argument("--trace", action="store_true", help="Print every recorded engine event.")
        root_parser.add_argument("--count-ops", dest="count_ops", action="store_true",
                                 help="Print predicted versus measured operation counts.")
        root_parser.add_argument("--json", action="store_true", help="Print one JSON envelope with the requested parts.")

    verify_parser = subparsers.add_parser("verify", help="Differential check of the engine against the oracle.")
    verify_parser.add_argument("--k", type=int, choices=[2, 3], required=True, help="Root exponent.")
    mode = verify_parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--max", type=str, help="Check every value in [0, max].")
    mode.add_argument("--random", type=_non_negative_int, nargs="?", const=RANDOM_COUNT_FROM_SETTINGS,
                      help="Check this many random values (default: random_count from settings.toml).")
    verify_parser.add_argument("--digits", type=_positive_int, default=None,
                               help="Maximum digit count of random values.")
    verify_parser.add_argument("--seed", type=int, default=None, help="Seed for random values.")
    verify_parser.add_argument("--threads", type=_positive_int, default=None, help="Number of worker processes.")
    verify_parser.add_argument("--batch-size", dest="batch_size", type=_positive_int, default=None,
                               help="Values per worker batch.")
    return parser


def json_serial(obj: Any) -> Any:
    """JSON serializer for the value types of this package; numbers travel as decimal strings."""
    if isinstance(obj, (DecimalNatural, Fraction)):
        return str(obj)
    if isinstance(obj, OpCounters):
        return obj.as_dict()
    raise TypeError("Type %s not serializable" % type(obj))


def format_root_line(result: RootResult) -> str:
    """'<root>' for exact powers, '<root> r <remainder>' otherwise."""
    if result.remainder.is_zero():
        return str(result.root)
    return f"{result.root} r {result.remainder}"


def build_envelope(
    result: RootResult,
    trace: bool = False,
    count_ops: bool = False,
    tableau: Optional[str] = None,
) -> Dict[str, Any]:
    """Machine-readable view of one extraction with a fixed key order."""
    envelope: Dict[str, Any] = {
        "input": str(result.x),
        "k": result.k,
        "root": str(result.root),
        "remainder": str(result.remainder),
        "iterations": result.iterations,
        "adjustments": result.adjustments,
    }
    if trace:
        envelope["trace"] = [event.to_dict() for event in result.trace]
    if count_ops:
        report = compare(result)
        envelope["counters"] = report.measured.as_dict()
        envelope["predicted"] = report.predicted.as_dict()
    if tableau is not None:
        envelope["tableau"] = tableau
    return envelope


def _run_extraction(args: argparse.Namespace) -> int:
    kind = COMMAND_KINDS[args.command]
    try:
        x = DecimalNatural.from_decimal_string(args.number)
    except MalformedNumberError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED

    result = extract_root(x, kind)
    logger.info(f"{kind.label}({x}) = {format_root_line(result)} in {result.iterations} iterations.")
    tableau = render_text(result, unicode_markers=args.unicode) if args.tableau else None

    if args.json:
        envelope = build_envelope(result, trace=args.trace, count_ops=args.count_ops, tableau=tableau)
        print(json.dumps(envelope, indent=4, default=json_serial))
        return EXIT_OK

    print(format_root_line(result))
    if tableau is not None:
        print(tableau)
    if args.trace:
        for event in result.trace:
            print(event.describe())
    if args.count_ops:
        print(compare(result).describe())
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    verifier = DifferentialVerifier(args.k, threads=args.threads, batch_size=args.batch_size)
    if args.max is not None:
        try:
            upper = DecimalNatural.from_decimal_string(args.max)
        except MalformedNumberError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_MALFORMED
        report = verifier.verify_range(0, upper)
    else:
        count = args.random
        if count == RANDOM_COUNT_FROM_SETTINGS:
            count = int(get_setting("verify", "random_count", 1000))
        digits = args.digits if args.digits is not None else int(get_setting("verify", "random_digits", 60))
        report = verifier.verify_random(count, digits, seed=args.seed)

    if report.success:
        print(report.describe())
        return EXIT_OK
    print(report.describe(), file=sys.stderr)
    return EXIT_MISMATCH


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse `argv` (defaults to the process arguments) and execute one subcommand. Returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version exit through argparse
        return int(e.code or 0)

    if args.command == "verify":
        return _run_verify(args)
    return _run_extraction(args)


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
