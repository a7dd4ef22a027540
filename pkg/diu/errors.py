# Exceptions.

from __future__ import annotations

from typing import Optional


class DiuError(Exception):
    # Base for every error raised by the package.
    pass


class LengthOverflow(DiuError):
    # Message bit count would reach 2^64.

    def __init__(self, bit_length: int):
        super().__init__(f"message length {bit_length} bits does not fit the 64-bit length field")
        self.bit_length = bit_length


class UseAfterFinalize(DiuError):

    def __init__(self, name: str):
        super().__init__(f"{name} context already finalized")
        self.name = name


class ArityMismatch(DiuError):

    def __init__(self, mode: str, expected: int, got: int):
        super().__init__(f"{mode} mode takes a {expected}-word chaining state, got {got}")
        self.mode = mode
        self.expected = expected
        self.got = got


class BlockExhausted(DiuError):

    def __init__(self, mode: str, steps: int):
        super().__init__(f"{mode} block already ran all {steps} steps")
        self.mode = mode
        self.steps = steps


class CoreBusy(DiuError):
    # load_block while a block is still in flight.
    pass


class TableIntegrityError(DiuError):
    pass


class ConfigError(DiuError):
    pass


class VectorError(DiuError):
    # Vector file problem, located by source and line.

    def __init__(self, message: str, source: str = "<vectors>", line: Optional[int] = None):
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


class VectorParseError(VectorError):
    pass


class DigestLengthMismatch(VectorError):
    pass
