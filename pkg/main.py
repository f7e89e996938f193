"""
Godeaux Certification CLI
Verifies the Campedelli and Oort-Peters double planes and manages curve assets
"""

import argparse
import asyncio
import sys
import time
from typing import Optional, Sequence

from pydantic import ValidationError

from algebra.hom import PrimeSearchError, TowerEmbeddingError, embed_tower, find_good_prime
from configs.logger import StructuredLogger
from configs.settings import RunConfig, Settings, configure_logging, load_settings
from services.verifier import EXAMPLES, UnknownCheckError, build_registry, run_checks, select_checks
from storage.assets import AssetError, AssetStore
from storage.reports import ReportStore

import startup

logger = StructuredLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def parse_branches(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(b) for b in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Branch bits look like 1,0,1, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="godeaux", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run the verification checks")
    verify.add_argument("--example", choices=[*EXAMPLES, "both"], default="both")
    verify.add_argument("--check", action="append", default=[], help="Run only this check (repeatable)")
    verify.add_argument("--prime", type=int, help="Prime for the tower embedding")
    verify.add_argument("--branches", type=parse_branches, help="Branch bits, e.g. 1,0,1")
    verify.add_argument("--report", choices=["text", "structured"], default="text")
    verify.add_argument("--output", help="Write the structured report to this path")

    assets = commands.add_parser("assets", help="Inspect the curve assets")
    assets.add_argument("action", choices=["list", "validate"])
    return parser


def embedding_error(config: RunConfig, settings: Settings) -> Optional[str]:
    """Why the requested prime cannot carry the tower, or None."""
    if "campedelli" not in config.examples:
        return None
    prime = config.prime or settings.prime
    try:
        embed_tower(prime, config.branches or settings.branches)
        return None
    except TowerEmbeddingError as e:
        try:
            hint = f"; the next good prime is {find_good_prime(prime + 1, settings.prime_search_cap)}"
        except PrimeSearchError:
            hint = ""
        return f"{e}{hint}"


def verify(config: RunConfig, settings: Settings) -> int:
    problem = embedding_error(config, settings)
    if problem:
        logger.error(f"Embedding failed: {problem}")
        print(f"❌ {problem}", file=sys.stderr)
        return EXIT_INPUT
    store = startup.check_assets(settings)
    registry = build_registry(settings, config.examples, config.prime, config.branches)
    specs = select_checks(registry, config.checks)

    start_time = time.time()
    resolved = config.resolved(settings)
    report = asyncio.run(run_checks(specs, resolved, store, settings.max_workers))
    logger.info("Run completed", passed=report.passed, total_ms=round((time.time() - start_time) * 1000, 2))

    if config.report == "structured":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.render_text())
    if config.output:
        ReportStore(settings.report_dir).write(report, config.output)
    for failure in report.failures:
        print(f"❌ {failure.example}:{failure.name} failed ({failure.anchor})", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def assets_command(action: str, settings: Settings) -> int:
    store = AssetStore(settings.asset_dir)
    if action == "list":
        for row in store.describe():
            print(f"{row['name']:<24} {row['ring']:<12} degree {row['degree']}")
        return EXIT_OK
    results = store.validate_all()
    for name, canonical in results.items():
        print(f"{'✅' if canonical else '❌'} {name}")
    missing = store.missing()
    for name in missing:
        print(f"❌ {name}: missing")
    return EXIT_OK if all(results.values()) and not missing else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging(settings.log_level)

    try:
        if args.command == "assets":
            return assets_command(args.action, settings)
        config = RunConfig(
            example=args.example,
            prime=args.prime,
            branches=args.branches,
            checks=args.check,
            report=args.report,
            output=args.output,
        )
        return verify(config, settings)
    except (ValidationError, UnknownCheckError, AssetError) as e:
        logger.error(f"Invalid input: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
