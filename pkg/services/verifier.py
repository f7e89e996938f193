"""
Verification runner: selects checks from the registry, runs them on worker
threads and assembles the report in registry order.
"""

import asyncio
import time
import traceback
from typing import Optional, Sequence

from configs.logger import StructuredLogger, check_id_var
from configs.settings import Settings

from storage.assets import AssetStore
from storage.reports import CheckOutcome, CheckRecord, VerificationReport, digest

from .campedelli import CampedelliPipeline
from .oort_peters import OortPetersPipeline
from .pipeline import CheckSpec

logger = StructuredLogger(__name__)

EXAMPLES = ("campedelli", "oort-peters")


class UnknownCheckError(ValueError):
    """A --check name that no selected example provides."""


def build_registry(
    settings: Settings,
    examples: Sequence[str] = EXAMPLES,
    prime: Optional[int] = None,
    branches: Optional[Sequence[int]] = None,
) -> list[CheckSpec]:
    """Every check of the selected examples, in report order."""
    assets = AssetStore(settings.asset_dir)
    registry: list[CheckSpec] = []
    if "campedelli" in examples:
        pipeline = CampedelliPipeline(
            assets,
            prime=prime or settings.prime,
            branches=branches or settings.branches,
            method=settings.groebner_method,
            depth=settings.noether_depth,
        )
        registry.extend(pipeline.checks())
    if "oort-peters" in examples:
        pipeline = OortPetersPipeline(assets, settings.op_prime, settings.groebner_method, settings.noether_depth)
        registry.extend(pipeline.checks())
    return registry


def select_checks(registry: Sequence[CheckSpec], names: Optional[Sequence[str]] = None) -> list[CheckSpec]:
    if not names:
        return list(registry)
    known = {spec.name for spec in registry}
    unknown = [name for name in names if name not in known]
    if unknown:
        raise UnknownCheckError(f"Unknown checks: {', '.join(unknown)}; available: {', '.join(sorted(known))}")
    wanted = set(names)
    return [spec for spec in registry if spec.name in wanted]


def _inputs_digest(spec: CheckSpec, config: dict, assets: AssetStore) -> str:
    texts = []
    for name in spec.assets:
        path = assets.path(name)
        texts.append(path.read_text() if path.exists() else None)
    return digest(spec.example, spec.name, config, texts)


def run_check(spec: CheckSpec, config: dict, assets: AssetStore) -> CheckRecord:
    """Run one check; exceptions become failed records."""
    token = check_id_var.set(f"{spec.example}:{spec.name}")
    start = time.time()
    logger.info("Check started", anchor=spec.anchor)
    try:
        outcome = spec.run()
        if not isinstance(outcome, CheckOutcome):
            raise TypeError(f"Check {spec.name} returned {type(outcome).__name__}")
        record = CheckRecord(
            name=spec.name,
            example=spec.example,
            anchor=spec.anchor,
            verdict=outcome.verdict,
            witness=outcome.witness,
        )
    except Exception as e:
        logger.error(f"Check failed with {type(e).__name__}: {e}\n{traceback.format_exc()}")
        record = CheckRecord(
            name=spec.name,
            example=spec.example,
            anchor=spec.anchor,
            verdict=False,
            witness={"error_type": type(e).__name__},
            error=str(e),
        )
    record.wall_ms = (time.time() - start) * 1000
    record.inputs_digest = _inputs_digest(spec, config, assets)
    logger.info("Check finished", verdict=record.verdict, wall_ms=round(record.wall_ms, 2))
    check_id_var.reset(token)
    return record


async def run_checks(
    specs: Sequence[CheckSpec], config: dict, assets: AssetStore, max_workers: int = 4
) -> VerificationReport:
    """Checks run concurrently on threads; records keep the order of specs."""
    semaphore = asyncio.Semaphore(max_workers)

    async def bounded(spec: CheckSpec) -> CheckRecord:
        async with semaphore:
            return await asyncio.to_thread(run_check, spec, config, assets)

    process_start = time.time()
    results = await asyncio.gather(*(bounded(spec) for spec in specs), return_exceptions=True)
    records = []
    for spec, result in zip(specs, results):
        if isinstance(result, BaseException):
            logger.error(f"Worker error in {spec.name}: {result}")
            result = CheckRecord(
                name=spec.name,
                example=spec.example,
                anchor=spec.anchor,
                verdict=False,
                witness={"error_type": type(result).__name__},
                error=str(result),
            )
        records.append(result)
    report = VerificationReport(config=config, checks=records)
    logger.info(
        "Verification completed",
        checks=len(records),
        failures=len(report.failures),
        total_ms=round((time.time() - process_start) * 1000, 2),
    )
    return report
