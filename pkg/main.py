#!/usr/bin/env python3
"""
etabench
A small dependent type checker with two conversion-checking backends,
benchmark program generators and a timing harness
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from src.bench.generators import FAMILIES, SUITE_DEFAULTS, SuiteSpec, generate
from src.bench.harness import BenchConfig, format_summary, run_bench, summarize, write_csv
from src.data.diagnostics import ParseError
from src.data.source_parser import SourceParser
from src.elab.backend import Backend
from src.elab.elaborator import Elaborator
from src.elab.errors import TypeCheckError
from src.conv.base import ConvOptions
from src.utils.config import Settings
from src.utils.errors import BenchError
from src.utils.logger import setup_logger

EXIT_OK = 0
EXIT_TYPE_ERROR = 1
EXIT_USAGE = 2

BACKEND_CHOICES = {
    "syntactic": (Backend.SYNTACTIC,),
    "typed": (Backend.TYPED,),
    "both": (Backend.SYNTACTIC, Backend.TYPED),
}


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must not be negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etabench",
        description="Compare syntax-directed and type-directed conversion checking")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log more (-v info, -vv debug) on standard error")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="type-check a .ett file")
    check.add_argument("file", type=Path)
    check.add_argument("--backend", choices=[b.value for b in Backend], default=Backend.TYPED.value)
    check.add_argument("--no-speculate", action="store_true",
                       help="typed backend: unfold equal heads instead of comparing spines first")
    check.add_argument("--no-sigma-unit-eta", action="store_true",
                       help="typed backend: only the function eta rule")

    bench = commands.add_parser("bench", help="time both backends on a generated suite")
    bench.add_argument("--suite", choices=FAMILIES, required=True)
    bench.add_argument("--size", type=positive_int)
    bench.add_argument("--trials", type=positive_int, default=10)
    bench.add_argument("--backends", choices=sorted(BACKEND_CHOICES), default="both")
    bench.add_argument("--seed", type=int)
    bench.add_argument("--out", type=Path, help="CSV output file")
    bench.add_argument("--warmup", type=non_negative_int, default=0)
    bench.add_argument("--no-speculate", action="store_true",
                       help="typed backend: unfold equal heads instead of comparing spines first")
    bench.add_argument("--force-first", action="store_true",
                       help="syntactic backend: unfold equal heads instead of comparing spines first")
    bench.add_argument("--no-sigma-unit-eta", action="store_true",
                       help="typed backend: only the function eta rule")

    gen = commands.add_parser("gen", help="write a generated suite to a file")
    gen.add_argument("--suite", choices=FAMILIES, required=True)
    gen.add_argument("--size", type=positive_int, required=True)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", type=Path, required=True)
    return parser


def suite_spec(args) -> SuiteSpec:
    defaults = SUITE_DEFAULTS[args.suite]
    size = args.size if args.size is not None else defaults["size"]
    seed = args.seed if args.seed is not None else defaults["seed"]
    return SuiteSpec(args.suite, size, seed)


def cmd_check(args, logger: logging.Logger) -> int:
    source_parser = SourceParser()
    try:
        source, program = source_parser.parse_file(args.file)
    except ParseError as e:
        text = args.file.read_text(encoding="utf-8")
        print(e.format(text, str(args.file)), file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, ValueError, UnicodeDecodeError) as e:
        print(f"etabench: {e}", file=sys.stderr)
        return EXIT_USAGE

    backend = Backend.parse(args.backend)
    options = ConvOptions(speculate=not args.no_speculate, sigma_unit_eta=not args.no_sigma_unit_eta)
    try:
        result = Elaborator(backend, options).check_program(program)
    except TypeCheckError as e:
        print(e.format(source, str(args.file)), file=sys.stderr)
        return EXIT_TYPE_ERROR

    logger.info(f"{args.file}: {result.conversions} conversion checks")
    print(f"ok: {len(result)} definitions ({backend.value}, {result.unfolds} unfolds)")
    return EXIT_OK


def cmd_bench(args, logger: logging.Logger) -> int:
    spec = suite_spec(args)
    config = BenchConfig(
        trials=args.trials,
        backends=BACKEND_CHOICES[args.backends],
        warmup=args.warmup,
        speculate=not args.no_speculate,
        force_first=args.force_first,
        sigma_unit_eta=not args.no_sigma_unit_eta,
    )
    try:
        records = run_bench(spec.family, spec.size, generate(spec), config)
    except BenchError as e:
        logger.error(f"Benchmark failed: {e}")
        return EXIT_TYPE_ERROR

    if args.out is not None:
        write_csv(records, args.out)
        logger.info(f"Wrote {len(records)} rows to {args.out}")
    print(format_summary(summarize(records)))
    return EXIT_OK


def cmd_gen(args, logger: logging.Logger) -> int:
    spec = suite_spec(args)
    text = generate(spec)
    try:
        args.out.write_bytes(text.encode("utf-8"))
    except OSError as e:
        logger.error(f"Cannot write {args.out}: {e}")
        return EXIT_TYPE_ERROR
    logger.info(f"Wrote {spec.label} to {args.out}")
    return EXIT_OK


COMMANDS = {"check": cmd_check, "bench": cmd_bench, "gen": cmd_gen}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    settings = Settings.from_env()
    level = settings.log_level
    if args.verbose == 1:
        level = min(level, logging.INFO)
    elif args.verbose >= 2:
        level = logging.DEBUG
    logger = setup_logger(level=level, log_dir=settings.log_dir, color=settings.color)
    settings.apply_recursion_limit()

    try:
        return COMMANDS[args.command](args, logger)
    except BenchError as e:
        print(f"etabench: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
