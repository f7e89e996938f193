"""
Shared plumbing for the example pipelines: memoised intermediate results
and the check descriptors the verifier schedules.
"""

import logging
import threading
import time
from dataclasses import dataclass
from typing import Any, Callable

from storage.reports import CheckOutcome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    example: str
    anchor: str
    run: Callable[[], CheckOutcome]
    assets: tuple = ()
    slow: bool = False


class Pipeline:
    """Intermediate results are built once, even when checks ask for them from several threads."""

    example = ""

    def __init__(self):
        self._cache: dict[str, Any] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def memo(self, key: str, build: Callable[[], Any]) -> Any:
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._cache:
                stage_start = time.time()
                self._cache[key] = build()
                logger.info(f"{self.example}: stage {key} ready - {(time.time() - stage_start) * 1000:.2f}ms")
            return self._cache[key]

    def checks(self) -> list[CheckSpec]:
        raise NotImplementedError
