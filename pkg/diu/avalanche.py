# Avalanche statistics: Hamming distance between digests of messages one bit apart.

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import AvalancheConfig
from .context import context_class


@dataclass(frozen=True)
class AvalancheResult:
    algorithm: str
    trials: int
    digest_bits: int
    mean: float
    std: float
    min: int
    max: int

    @property
    def expected(self) -> float:
        return self.digest_bits / 2

    def within(self, tolerance: float) -> bool:
        return abs(self.mean - self.expected) <= tolerance


def hamming_distance(a: bytes, b: bytes) -> int:
    diff = np.bitwise_xor(np.frombuffer(a, dtype=np.uint8), np.frombuffer(b, dtype=np.uint8))
    return int(np.unpackbits(diff).sum())


def avalanche(algorithm: str, config: Optional[AvalancheConfig] = None) -> AvalancheResult:
    config = (config or AvalancheConfig()).validate()
    cls = context_class(algorithm)
    rng = np.random.default_rng(config.seed)
    n_bits = config.message_bytes * 8

    distances = np.empty(config.trials, dtype=np.int64)
    for i in range(config.trials):
        message = rng.integers(0, 256, size=config.message_bytes, dtype=np.uint8)
        flipped = message.copy()
        bit = int(rng.integers(n_bits))
        flipped[bit // 8] ^= np.uint8(1 << (bit % 8))
        distances[i] = hamming_distance(
            cls(message.tobytes()).finalize(),
            cls(flipped.tobytes()).finalize(),
        )

    return AvalancheResult(
        algorithm=cls.name,
        trials=config.trials,
        digest_bits=cls.digest_size * 8,
        mean=float(distances.mean()),
        std=float(distances.std()),
        min=int(distances.min()),
        max=int(distances.max()),
    )
