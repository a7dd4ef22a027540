# Throughput measurement.

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from .config import BenchConfig
from .context import context_class
from .unified import Mode, unified_digest

logger = logging.getLogger(__name__)

TIMER_RESOLUTION = time.get_clock_info("perf_counter").resolution


@dataclass
class BenchResult:
    algorithm: str
    unified: bool
    payload_bytes: int
    reps: int
    seconds: float
    digest: bytes

    @property
    def mb_per_s(self) -> float:
        # Never below one timer tick, so the rate stays finite.
        seconds = max(self.seconds, TIMER_RESOLUTION)
        return self.payload_bytes * self.reps / 1e6 / seconds

    def line(self) -> str:
        return f"{self.algorithm} {self.mb_per_s:.3f}"


def random_payload(size: int, seed: int = 0) -> bytes:
    return np.random.default_rng(seed).bytes(size)


def _hasher(algorithm: str, unified: bool):
    if unified:
        mode = Mode(algorithm)
        return lambda data: unified_digest(mode, data)
    cls = context_class(algorithm)
    return lambda data: cls(data).finalize()


def measure(algorithm: str, config: Optional[BenchConfig] = None, unified: bool = False) -> BenchResult:
    config = (config or BenchConfig()).validate()
    hasher = _hasher(algorithm, unified)
    payload = random_payload(config.payload_bytes, config.seed)
    logger.info(
        "bench %s%s: %d bytes x %d reps",
        algorithm, " (unified)" if unified else "", config.payload_bytes, config.reps,
    )

    digest = b""
    elapsed = 0.0
    for _ in range(config.reps):
        t0 = time.perf_counter()
        digest = hasher(payload)
        elapsed += time.perf_counter() - t0

    result = BenchResult(
        algorithm=algorithm,
        unified=unified,
        payload_bytes=config.payload_bytes,
        reps=config.reps,
        seconds=elapsed,
        digest=digest,
    )
    logger.info("bench %s: %.3f s total, %.3f MB/s", algorithm, elapsed, result.mb_per_s)
    return result


def bench_table(results: Iterable[BenchResult]) -> pd.DataFrame:
    # Side-by-side comparison; ordering is reported, never asserted.
    df = pd.DataFrame(
        [
            {
                "algorithm": r.algorithm,
                "unified": r.unified,
                "payload_bytes": r.payload_bytes,
                "reps": r.reps,
                "seconds": r.seconds,
                "mb_per_s": r.mb_per_s,
            }
            for r in results
        ]
    )
    if df.empty:
        return df
    return df.sort_values("mb_per_s", ascending=False).reset_index(drop=True)
