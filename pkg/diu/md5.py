# MD5: auxiliary functions, sine T-table, word permutations, step and compression.

from __future__ import annotations

import logging
import math
from typing import NamedTuple, Sequence

from .context import HashContext
from .errors import TableIntegrityError
from .words import MASK32, LengthEncoding, Word, band_spans, rotl, words_from_block

logger = logging.getLogger(__name__)

STEPS = 64
ROUNDS = 4

# Low-order bytes first: A=01 23 45 67, B=89 ab cd ef, C=fe dc ba 98, D=76 54 32 10.
IV = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476)

# Four shift amounts per round, cycling every four steps.
ROUND_SHIFTS = (
    (7, 12, 17, 22),
    (5, 9, 14, 20),
    (4, 11, 16, 23),
    (6, 10, 15, 21),
)

# floor(2^32 * |sin(i)|), i = 1..64
FROZEN_T_TABLE = (
    0xD76AA478, 0xE8C7B756, 0x242070DB, 0xC1BDCEEE, 0xF57C0FAF, 0x4787C62A, 0xA8304613, 0xFD469501,
    0x698098D8, 0x8B44F7AF, 0xFFFF5BB1, 0x895CD7BE, 0x6B901122, 0xFD987193, 0xA679438E, 0x49B40821,
    0xF61E2562, 0xC040B340, 0x265E5A51, 0xE9B6C7AA, 0xD62F105D, 0x02441453, 0xD8A1E681, 0xE7D3FBC8,
    0x21E1CDE6, 0xC33707D6, 0xF4D50D87, 0x455A14ED, 0xA9E3E905, 0xFCEFA3F8, 0x676F02D9, 0x8D2A4C8A,
    0xFFFA3942, 0x8771F681, 0x6D9D6122, 0xFDE5380C, 0xA4BEEA44, 0x4BDECFA9, 0xF6BB4B60, 0xBEBFBC70,
    0x289B7EC6, 0xEAA127FA, 0xD4EF3085, 0x04881D05, 0xD9D4D039, 0xE6DB99E5, 0x1FA27CF8, 0xC4AC5665,
    0xF4292244, 0x432AFF97, 0xAB9423A7, 0xFC93A039, 0x655B59C3, 0x8F0CCC92, 0xFFEFF47D, 0x85845DD1,
    0x6FA87E4F, 0xFE2CE6E0, 0xA3014314, 0x4E0811A1, 0xF7537E82, 0xBD3AF235, 0x2AD7D2BB, 0xEB86D391,
)


class Md5State(NamedTuple):
    # Registers A, B, C, D.

    a: Word
    b: Word
    c: Word
    d: Word


class Md5Schedule(NamedTuple):
    # Per-step constants for all 64 steps.

    t_table: tuple[Word, ...]
    shifts: tuple[int, ...]
    msg_index: tuple[int, ...]

    def step(self, i: int) -> tuple[int, int, Word, int]:
        # (round, message index, T, shift) for step i.
        return i // 16 + 1, self.msg_index[i], self.t_table[i], self.shifts[i]


def md5_aux(round: int, x: Word, y: Word, z: Word) -> Word:
    if round == 1:
        return ((x & y) | (~x & z)) & MASK32
    if round == 2:
        return ((x & z) | (y & ~z)) & MASK32
    if round == 3:
        return x ^ y ^ z
    if round == 4:
        return (y ^ (x | (~z & MASK32))) & MASK32
    raise ValueError(f"MD5 round {round} outside 1..4")


def t_entry(i: int) -> Word:
    if not 1 <= i <= 64:
        raise ValueError(f"T-table index {i} outside 1..64")
    return int(abs(math.sin(i)) * 2**32) & MASK32


def md5_msg_index(round: int, step: int) -> int:
    if not 0 <= step <= 15:
        raise ValueError(f"step {step} outside 0..15")
    if round == 1:
        return step
    if round == 2:
        return (1 + 5 * step) % 16
    if round == 3:
        return (5 + 3 * step) % 16
    if round == 4:
        return (7 * step) % 16
    raise ValueError(f"MD5 round {round} outside 1..4")


def _build_schedule() -> Md5Schedule:
    computed = tuple(t_entry(i) for i in range(1, STEPS + 1))
    mismatched = [i + 1 for i, (a, b) in enumerate(zip(computed, FROZEN_T_TABLE)) if a != b]
    if mismatched:
        raise TableIntegrityError(f"sine-derived T entries {mismatched} disagree with the frozen table")
    logger.debug("MD5 T-table verified against frozen constants")
    shifts = tuple(ROUND_SHIFTS[i // 16][i % 4] for i in range(STEPS))
    msg_index = tuple(md5_msg_index(i // 16 + 1, i % 16) for i in range(STEPS))
    return Md5Schedule(t_table=computed, shifts=shifts, msg_index=msg_index)


SCHEDULE = _build_schedule()
T_TABLE = SCHEDULE.t_table


# (message index, T, shift) per step
_PLAN = tuple(zip(SCHEDULE.msg_index, SCHEDULE.t_table, SCHEDULE.shifts))


def md5_step(state: Sequence[Word], x: Word, t: Word, s: int, round: int) -> Md5State:
    a, b, c, d = state
    summed = (a + md5_aux(round, b, c, d) + x + t) & MASK32
    return Md5State(d, (b + rotl(summed, s)) & MASK32, b, c)


def md5_rounds(state: Sequence[Word], x: Sequence[Word], start: int = 0, stop: int = STEPS) -> Md5State:
    # Steps [start, stop) over registers A..D, no chaining addition.
    if not 0 <= start <= stop <= STEPS:
        raise ValueError(f"step range {start}..{stop} outside 0..{STEPS}")
    a, b, c, d = state
    for band, lo, hi in band_spans(start, stop, 16):
        if band == 0:
            for idx, t, s in _PLAN[lo:hi]:
                v = (a + ((b & c) | (~b & d)) + x[idx] + t) & MASK32
                a, b, c, d = d, (b + ((v << s) | (v >> (32 - s)))) & MASK32, b, c
        elif band == 1:
            for idx, t, s in _PLAN[lo:hi]:
                v = (a + ((b & d) | (c & ~d)) + x[idx] + t) & MASK32
                a, b, c, d = d, (b + ((v << s) | (v >> (32 - s)))) & MASK32, b, c
        elif band == 2:
            for idx, t, s in _PLAN[lo:hi]:
                v = (a + (b ^ c ^ d) + x[idx] + t) & MASK32
                a, b, c, d = d, (b + ((v << s) | (v >> (32 - s)))) & MASK32, b, c
        else:
            for idx, t, s in _PLAN[lo:hi]:
                v = (a + (c ^ (b | (~d & MASK32))) + x[idx] + t) & MASK32
                a, b, c, d = d, (b + ((v << s) | (v >> (32 - s)))) & MASK32, b, c
    return Md5State(a, b, c, d)


def md5_compress(cv: Sequence[Word], block: bytes) -> Md5State:
    a, b, c, d = md5_rounds(cv, words_from_block(block, "little"))
    return Md5State(
        (cv[0] + a) & MASK32,
        (cv[1] + b) & MASK32,
        (cv[2] + c) & MASK32,
        (cv[3] + d) & MASK32,
    )


class Md5Context(HashContext):

    name = "md5"
    digest_size = 16
    iv = IV
    encoding = LengthEncoding.LITTLE_ENDIAN_64

    @classmethod
    def _compress(cls, state, block):
        return md5_compress(state, block)


def md5_init() -> Md5Context:
    return Md5Context()


def md5_update(ctx: Md5Context, data: bytes) -> Md5Context:
    return ctx.update(data)


def md5_finalize(ctx: Md5Context) -> bytes:
    return ctx.finalize()


def md5_digest(data: bytes) -> bytes:
    return Md5Context(data).finalize()
