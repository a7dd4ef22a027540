# Command-line interface: diu {hash,selftest,bench,trace,report}.

from __future__ import annotations

import argparse
import binascii
import logging
import sys
from typing import BinaryIO, Optional, Sequence

from . import __version__
from .bench import measure, random_payload
from .config import BenchConfig
from .context import ALGORITHMS, digest, new
from .errors import DiuError
from .resources import resource_report
from .unified import unified_digest, trace_message
from .vectors import load_vectors, run_selftest

logger = logging.getLogger("diu")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CHUNK = 1 << 16
UNIFIED_ALGORITHMS = ("md5", "sha192")
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT, force=True)


def _open_input(path: str) -> BinaryIO:
    if path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def _read_all(path: str) -> bytes:
    stream = _open_input(path)
    try:
        return stream.read()
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()


def _hash_stream(alg: str, path: str) -> bytes:
    ctx = new(alg)
    stream = _open_input(path)
    try:
        while True:
            chunk = stream.read(CHUNK)
            if not chunk:
                break
            ctx.update(chunk)
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()
    return ctx.finalize()


def cmd_hash(args) -> int:
    if args.unified and args.alg not in UNIFIED_ALGORITHMS:
        logger.error("--unified supports md5 and sha192 only, not %s", args.alg)
        return EXIT_USAGE
    if args.unified:
        result = unified_digest(args.alg, _read_all(args.input))
    else:
        result = _hash_stream(args.alg, args.input)
    if args.tagged:
        name = "stdin" if args.input == "-" else args.input
        print(f"{args.alg}({name})= {result.hex()}")
    else:
        print(result.hex())
    return EXIT_OK


def cmd_selftest(args) -> int:
    vectors = load_vectors(args.vectors)
    report = run_selftest(vectors)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bench(args) -> int:
    if args.unified and args.alg not in UNIFIED_ALGORITHMS:
        logger.error("--unified supports md5 and sha192 only, not %s", args.alg)
        return EXIT_USAGE
    config = BenchConfig(payload_bytes=args.bytes, reps=args.reps)
    result = measure(args.alg, config, unified=args.unified)
    print(result.line())
    if args.verify:
        expected = digest(args.alg, random_payload(config.payload_bytes, config.seed))
        print(result.digest.hex())
        if expected != result.digest:
            logger.error("bench digest %s differs from one-shot %s", result.digest.hex(), expected.hex())
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_trace(args) -> int:
    try:
        message = binascii.unhexlify(args.message)
    except (binascii.Error, ValueError):
        logger.error("--message must be an even-length hex string")
        return EXIT_USAGE
    traces, _ = trace_message(args.alg, message, args.block)
    for entry in traces:
        print(entry.format())
    return EXIT_OK


def cmd_report(args) -> int:
    report = resource_report()
    for line in report.lines():
        print(line)
    return EXIT_OK if report.unified_saves_units() else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diu",
        description="Data-integrity unit: MD5, SHA-1 and SHA-192 digests and a unified MD5/SHA-192 datapath model.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr (-vv for debug)")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("hash", help="print the digest of a file or stdin")
    p.add_argument("--alg", required=True, choices=ALGORITHMS)
    p.add_argument("--unified", action="store_true", help="run through the unified datapath (md5, sha192)")
    p.add_argument("--tagged", action="store_true", help="print <alg>(<file>)= <hex>")
    p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
    p.set_defaults(func=cmd_hash)

    p = sub.add_parser("selftest", help="check the known-answer vectors")
    p.add_argument("--vectors", default=None, help="vector file (default: the shipped set)")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="measure hashing throughput in MB/s")
    p.add_argument("--alg", required=True, choices=ALGORITHMS)
    p.add_argument("--bytes", type=int, default=BenchConfig.payload_bytes)
    p.add_argument("--reps", type=int, default=BenchConfig.reps)
    p.add_argument("--unified", action="store_true")
    p.add_argument("--verify", action="store_true", help="also print the payload digest and check it")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="dump per-step registers of one block")
    p.add_argument("--alg", required=True, choices=UNIFIED_ALGORITHMS)
    p.add_argument("--message", default="", help="message as hex")
    p.add_argument("--block", type=int, default=0, help="block index in the padded message")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("report", help="print the functional-unit resource model")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (DiuError, OSError, ValueError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
