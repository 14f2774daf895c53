"""Command-line verifier.

    kocom verify <suite> [options]

Suites: cocycles, so3-homology, char-classes, surface-ko, all.  Options:
--k-range/--n-range as inclusive lo..hi pairs, --surface as
sphere | genus:<g> | rp:<n>, --degree-cap for the characteristic algebra,
and --out for the structured report.  Exit code 0 when every check passes,
1 when any fails, 2 for bad arguments.
"""

from __future__ import annotations

import argparse
import re
import sys
import time

from .report import VerificationReport
from .suites import SUITES, run_suite
from .surfaces import Surface


def parse_range(text: str) -> tuple:
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_surface(text: str) -> Surface:
    try:
        return Surface.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kocom",
        description="exact verification suites for commutative-cocycle "
        "invariants, component homology, characteristic classes, and "
        "surface K-theory rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a verification suite")
    # Let bare range tokens like -5..5 through the option scanner.
    verify._negative_number_matcher = re.compile(r"^-\d")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument(
        "--k-range",
        type=parse_range,
        default=(-5, 5),
        metavar="LO..HI",
        help="cocycle index range (default -5..5)",
    )
    verify.add_argument(
        "--n-range",
        type=parse_range,
        default=(-5, 5),
        metavar="LO..HI",
        help="power range (default -5..5)",
    )
    verify.add_argument(
        "--surface",
        type=parse_surface,
        default=None,
        metavar="SEL",
        help="restrict surface checks: sphere | genus:<g> | rp:<n>",
    )
    verify.add_argument(
        "--degree-cap",
        type=int,
        default=6,
        metavar="D",
        help="degree cap for the characteristic algebra (default 6)",
    )
    verify.add_argument(
        "--out", default=None, metavar="PATH", help="write the structured report here"
    )
    return parser


def run_verify(args: argparse.Namespace) -> int:
    if args.degree_cap < 4:
        print("error: --degree-cap must be at least 4", file=sys.stderr)
        return 2
    options = {
        "k_range": args.k_range,
        "n_range": args.n_range,
        "degree_cap": args.degree_cap,
        "surface": args.surface,
    }
    started = time.perf_counter()
    report: VerificationReport = run_suite(args.suite, options)
    report.elapsed_seconds = time.perf_counter() - started
    for line in report.text_lines():
        print(line)
    print(f"elapsed: {report.elapsed_seconds:.3f}s")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    return 0 if report.all_passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return run_verify(args)
    parser.error(f"unknown command {args.command!r}")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
