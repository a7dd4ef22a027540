# Known-answer vectors and the self-test runner.
#
# File format, one record per line:
#   <alg>,<message-hex>,<digest-hex>
# '#' starts a comment line; an empty message is an empty hex field.

from __future__ import annotations

import binascii
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .context import digest
from .errors import DigestLengthMismatch, VectorParseError
from .unified import unified_digest

logger = logging.getLogger(__name__)

DIGEST_SIZES = {"md5": 16, "sha1": 20, "sha192": 24}
UNIFIED_ALGORITHMS = ("md5", "sha192")
DEFAULT_VECTORS = Path(__file__).parent / "data" / "vectors.txt"


@dataclass(frozen=True)
class TestVector:
    __test__ = False

    algorithm: str
    message: bytes
    digest: bytes
    source: str = "<vectors>"
    line: int = 0

    @property
    def name(self) -> str:
        return f"{self.algorithm} {self.source}:{self.line} ({len(self.message)} bytes)"

    def to_record(self) -> str:
        return f"{self.algorithm},{self.message.hex()},{self.digest.hex()}"


@dataclass
class SelftestFailure:
    vector: TestVector
    mismatches: dict = field(default_factory=dict)  # path -> digest produced

    def format(self) -> str:
        got = " ".join(f"{path}={value.hex()}" for path, value in self.mismatches.items())
        return f"FAIL {self.vector.name} expected={self.vector.digest.hex()} {got}"


@dataclass
class SelftestReport:
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self) -> list[str]:
        out = [f.format() for f in self.failures]
        out.append(f"passed={self.passed} failed={self.failed}")
        return out


def _decode_hex(text: str, what: str, source: str, line: int) -> bytes:
    try:
        return binascii.unhexlify(text)
    except (binascii.Error, ValueError):
        raise VectorParseError(f"{what} is not valid hex", source, line) from None


def parse_vectors(text: str, source: str = "<vectors>") -> list[TestVector]:
    vectors = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise VectorParseError(f"expected 3 comma-separated fields, got {len(parts)}", source, lineno)
        alg, msg_hex, digest_hex = parts
        alg = alg.lower()
        if alg not in DIGEST_SIZES:
            raise VectorParseError(f"unknown algorithm {alg!r}", source, lineno)
        message = _decode_hex(msg_hex, "message", source, lineno)
        expected = _decode_hex(digest_hex, "digest", source, lineno)
        if len(expected) != DIGEST_SIZES[alg]:
            raise DigestLengthMismatch(
                f"{alg} digest must be {DIGEST_SIZES[alg]} bytes, got {len(expected)}", source, lineno
            )
        key = (alg, message)
        if key in seen:
            raise VectorParseError(f"duplicate {alg} vector for a {len(message)}-byte message", source, lineno)
        seen.add(key)
        vectors.append(TestVector(alg, message, expected, source, lineno))
    return vectors


def load_vectors(source: Optional[Union[str, Path]] = None) -> list[TestVector]:
    path = Path(source) if source is not None else DEFAULT_VECTORS
    text = path.read_text(encoding="utf-8")
    vectors = parse_vectors(text, source=path.name)
    logger.info("loaded %d vectors from %s", len(vectors), path)
    return vectors


def check_vector(vector: TestVector) -> Optional[SelftestFailure]:
    mismatches = {}
    standalone = digest(vector.algorithm, vector.message)
    if standalone != vector.digest:
        mismatches["standalone"] = standalone
    if vector.algorithm in UNIFIED_ALGORITHMS:
        unified = unified_digest(vector.algorithm, vector.message)
        if unified != vector.digest:
            mismatches["unified"] = unified
    if mismatches:
        return SelftestFailure(vector, mismatches)
    return None


def run_selftest(vectors: Iterable[TestVector]) -> SelftestReport:
    report = SelftestReport()
    for vector in vectors:
        failure = check_vector(vector)
        if failure is None:
            report.passed += 1
        else:
            report.failed += 1
            report.failures.append(failure)
            logger.warning("self-test mismatch: %s", failure.format())
    logger.info("self-test: %d passed, %d failed", report.passed, report.failed)
    return report
