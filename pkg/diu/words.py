# 32-bit word primitives, padding and block/digest serialization.

from __future__ import annotations

import struct
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import LengthOverflow

MASK32 = 0xFFFFFFFF
BLOCK_BYTES = 64
WORDS_PER_BLOCK = 16
MAX_BIT_LENGTH = 1 << 64

# Words are plain ints kept in [0, 2^32).
Word = int

_WORD_FORMAT = {"little": "<16I", "big": ">16I"}


class LengthEncoding(Enum):
    # Byte order of the trailing 64-bit length field.

    LITTLE_ENDIAN_64 = "little"  # MD5
    BIG_ENDIAN_64 = "big"  # SHA family

    @property
    def byteorder(self) -> str:
        return self.value


def rotl(x: Word, n: int) -> Word:
    # Circular left shift, S_n.
    if not 0 <= n <= 31:
        raise ValueError(f"rotation count {n} outside 0..31")
    x &= MASK32
    return ((x << n) | (x >> (32 - n))) & MASK32


def add32(terms: Iterable[Word]) -> Word:
    total = None
    for t in terms:
        total = t if total is None else total + t
    if total is None:
        raise ValueError("add32 needs at least one term")
    return total & MASK32


def padding_for(byte_length: int, enc: LengthEncoding) -> bytes:
    # 0x80, minimal zero run, then the 64-bit bit count.
    bit_length = byte_length * 8
    if bit_length >= MAX_BIT_LENGTH:
        raise LengthOverflow(bit_length)
    zeros = (55 - byte_length) % BLOCK_BYTES
    return b"\x80" + b"\x00" * zeros + bit_length.to_bytes(8, enc.byteorder)


def pad_message(
    message: bytes,
    bit_length: Optional[int] = None,
    enc: LengthEncoding = LengthEncoding.BIG_ENDIAN_64,
) -> list[bytes]:
    # Merkle-Damgard padding, split into 64-byte blocks.
    message = bytes(memoryview(message))
    if bit_length is None:
        bit_length = len(message) * 8
    if bit_length >= MAX_BIT_LENGTH:
        raise LengthOverflow(bit_length)
    if bit_length != len(message) * 8:
        raise ValueError(
            f"bit_length {bit_length} does not match a {len(message)}-byte message; "
            "only whole-byte messages are supported"
        )
    padded = message + padding_for(len(message), enc)
    return [padded[i : i + BLOCK_BYTES] for i in range(0, len(padded), BLOCK_BYTES)]


def words_from_block(block: bytes, order: str) -> tuple[Word, ...]:
    if len(block) != BLOCK_BYTES:
        raise ValueError(f"block must be {BLOCK_BYTES} bytes, got {len(block)}")
    return struct.unpack(_WORD_FORMAT[order], block)


def block_from_words(words: Sequence[Word], order: str) -> bytes:
    if len(words) != WORDS_PER_BLOCK:
        raise ValueError(f"a block holds {WORDS_PER_BLOCK} words, got {len(words)}")
    return struct.pack(_WORD_FORMAT[order], *words)


def serialize_digest(state: Sequence[Word], order: str) -> bytes:
    if len(state) not in (4, 5, 6):
        raise ValueError(f"chaining state must hold 4, 5 or 6 words, got {len(state)}")
    prefix = "<" if order == "little" else ">"
    return struct.pack(f"{prefix}{len(state)}I", *state)


def state_from_digest(digest: bytes, order: str) -> tuple[Word, ...]:
    # Inverse of serialize_digest.
    if len(digest) not in (16, 20, 24):
        raise ValueError(f"digest must be 16, 20 or 24 bytes, got {len(digest)}")
    prefix = "<" if order == "little" else ">"
    return struct.unpack(f"{prefix}{len(digest) // 4}I", digest)


def band_spans(start: int, stop: int, width: int) -> Iterator[tuple[int, int, int]]:
    # (band, lo, hi) for each fixed-width band overlapping steps [start, stop).
    for band in range(start // width, -(-stop // width)):
        lo = max(start, band * width)
        hi = min(stop, band * width + width)
        if lo < hi:
            yield band, lo, hi
