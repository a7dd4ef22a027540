import math

import pytest

from diu.bench import BenchResult, bench_table, measure, random_payload
from diu.config import AvalancheConfig, BenchConfig
from diu.context import digest
from diu.errors import ConfigError
from diu.unified import unified_digest

SMALL = BenchConfig(payload_bytes=4096, reps=2)


def test_random_payload_is_seeded():
    assert random_payload(100, 7) == random_payload(100, 7)
    assert random_payload(100, 7) != random_payload(100, 8)
    assert len(random_payload(100)) == 100


@pytest.mark.parametrize("alg", ["md5", "sha1", "sha192"])
def test_measure_standalone(alg):
    result = measure(alg, SMALL)
    assert result.digest == digest(alg, random_payload(4096, 0))
    assert result.mb_per_s > 0
    assert result.line().startswith(f"{alg} ")


@pytest.mark.parametrize("alg", ["md5", "sha192"])
def test_measure_unified(alg):
    result = measure(alg, SMALL, unified=True)
    assert result.unified
    assert result.digest == unified_digest(alg, random_payload(4096, 0))


def test_measure_unified_rejects_sha1():
    with pytest.raises(ValueError):
        measure("sha1", SMALL, unified=True)


@pytest.mark.parametrize(
    "config",
    [BenchConfig(payload_bytes=0), BenchConfig(reps=0), AvalancheConfig(trials=0), AvalancheConfig(message_bytes=0)],
)
def test_config_validation(config):
    with pytest.raises(ConfigError):
        config.validate()


def test_result_line_format():
    result = BenchResult("md5", False, payload_bytes=2_000_000, reps=1, seconds=1.0, digest=b"")
    assert result.mb_per_s == pytest.approx(2.0)
    assert result.line() == "md5 2.000"


def test_bench_table_sorted():
    results = [
        BenchResult("md5", False, 1_000_000, 1, 1.0, b""),
        BenchResult("sha192", False, 1_000_000, 1, 0.5, b""),
    ]
    df = bench_table(results)
    assert list(df["algorithm"]) == ["sha192", "md5"]
    assert bench_table([]).empty


def test_zero_elapsed_stays_finite():
    result = BenchResult("md5", False, payload_bytes=64, reps=1, seconds=0.0, digest=b"")
    assert math.isfinite(result.mb_per_s)
    assert result.mb_per_s > 0
    assert "inf" not in result.line()
