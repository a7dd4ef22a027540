# Streaming Merkle-Damgard contexts.

from __future__ import annotations

import copy as _copy
from typing import Sequence

from .errors import LengthOverflow, UseAfterFinalize
from .words import BLOCK_BYTES, MAX_BIT_LENGTH, LengthEncoding, Word, padding_for, serialize_digest


class HashContext:
    # Chaining state + partial-block buffer + message byte counter.
    # Subclasses set name, digest_size, iv, encoding and implement _compress.

    name: str = ""
    digest_size: int = 0
    block_size: int = BLOCK_BYTES
    iv: tuple[Word, ...] = ()
    encoding: LengthEncoding = LengthEncoding.BIG_ENDIAN_64

    def __init__(self, data: bytes = b""):
        self._state: tuple[Word, ...] = tuple(self.iv)
        self._buffer = bytearray()
        self._byte_count = 0
        self._finalized = False
        if data:
            self.update(data)

    @classmethod
    def _compress(cls, state: Sequence[Word], block: bytes) -> tuple[Word, ...]:
        raise NotImplementedError("Subclass HashContext and implement _compress()")

    @property
    def finalized(self) -> bool:
        return self._finalized

    @property
    def byte_count(self) -> int:
        return self._byte_count

    @property
    def state(self) -> tuple[Word, ...]:
        return self._state

    def update(self, data: bytes) -> "HashContext":
        if self._finalized:
            raise UseAfterFinalize(self.name)
        data = memoryview(data).cast("B")
        total_bits = (self._byte_count + len(data)) * 8
        if total_bits >= MAX_BIT_LENGTH:
            raise LengthOverflow(total_bits)
        self._byte_count += len(data)

        offset = 0
        if self._buffer:
            take = min(BLOCK_BYTES - len(self._buffer), len(data))
            self._buffer += data[:take]
            offset = take
            if len(self._buffer) < BLOCK_BYTES:
                return self
            self._state = self._compress(self._state, bytes(self._buffer))
            self._buffer.clear()

        state = self._state
        end = offset + (len(data) - offset) // BLOCK_BYTES * BLOCK_BYTES
        for i in range(offset, end, BLOCK_BYTES):
            state = self._compress(state, bytes(data[i : i + BLOCK_BYTES]))
        self._state = state
        self._buffer += data[end:]
        return self

    def finalize(self) -> bytes:
        if self._finalized:
            raise UseAfterFinalize(self.name)
        self._finalized = True
        tail = bytes(self._buffer) + padding_for(self._byte_count, self.encoding)
        state = self._state
        for i in range(0, len(tail), BLOCK_BYTES):
            state = self._compress(state, tail[i : i + BLOCK_BYTES])
        self._state = state
        self._buffer.clear()
        return serialize_digest(state, self.encoding.byteorder)

    def hexdigest(self) -> str:
        return self.finalize().hex()

    def copy(self) -> "HashContext":
        return _copy.deepcopy(self)

    def __repr__(self) -> str:
        status = "finalized" if self._finalized else f"{self._byte_count} bytes"
        return f"<{type(self).__name__} {status}>"


ALGORITHMS = ("md5", "sha1", "sha192")


def context_class(name: str) -> type[HashContext]:
    from .md5 import Md5Context
    from .sha import Sha1Context, Sha192Context

    classes = {"md5": Md5Context, "sha1": Sha1Context, "sha192": Sha192Context}
    try:
        return classes[name.lower()]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; expected one of {', '.join(ALGORITHMS)}") from None


def new(name: str, data: bytes = b"") -> HashContext:
    # hashlib-style constructor.
    return context_class(name)(data)


def digest(name: str, data: bytes) -> bytes:
    return new(name, data).finalize()
