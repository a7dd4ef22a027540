# SHA-1 and SHA-192: shared f_t, K_t and message schedule.

from __future__ import annotations

from typing import NamedTuple, Sequence

from .context import HashContext
from .words import MASK32, LengthEncoding, Word, band_spans, rotl, words_from_block

STEPS = 80

K_BANDS = (0x5A827999, 0x6ED9EBA1, 0x8F1BBCDC, 0xCA62C1D6)

SHA1_IV = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0)
SHA192_IV = SHA1_IV + (0xF9B2D834,)


class Sha1State(NamedTuple):
    h0: Word
    h1: Word
    h2: Word
    h3: Word
    h4: Word


class Sha192State(NamedTuple):
    h0: Word
    h1: Word
    h2: Word
    h3: Word
    h4: Word
    h5: Word


class Sha192Registers(NamedTuple):
    # Working variables A..F.

    a: Word
    b: Word
    c: Word
    d: Word
    e: Word
    f: Word


class ShaRoundParams(NamedTuple):
    # f_t selector name and K_t for one step.

    function: str
    k: Word

    @classmethod
    def for_step(cls, t: int) -> "ShaRoundParams":
        _check_step(t)
        return cls(_F_NAMES[t // 20], K_BANDS[t // 20])


_F_NAMES = ("ch", "parity", "maj", "parity")


def _check_step(t: int):
    if not 0 <= t < STEPS:
        raise ValueError(f"step {t} outside 0..79")


def sha_k(t: int) -> Word:
    _check_step(t)
    return K_BANDS[t // 20]


def sha_f(t: int, b: Word, c: Word, d: Word) -> Word:
    _check_step(t)
    if t <= 19:
        return (b & c) | (~b & d & MASK32)
    if t <= 39 or t >= 60:
        return b ^ c ^ d
    return (b & c) | (b & d) | (c & d)


def expand_schedule(block_words: Sequence[Word]) -> tuple[Word, ...]:
    if len(block_words) != 16:
        raise ValueError(f"schedule expansion takes 16 words, got {len(block_words)}")
    w = list(block_words)
    for t in range(16, STEPS):
        v = w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16]
        w.append(((v << 1) | (v >> 31)) & MASK32)
    return tuple(w)


def _check_range(start: int, stop: int):
    if not 0 <= start <= stop <= STEPS:
        raise ValueError(f"step range {start}..{stop} outside 0..{STEPS}")


def sha1_rounds(regs: Sequence[Word], w: Sequence[Word], start: int = 0, stop: int = STEPS) -> Sha1State:
    # Steps [start, stop) over A..E with an expanded schedule, no chaining addition.
    _check_range(start, stop)
    a, b, c, d, e = regs
    for band, lo, hi in band_spans(start, stop, 20):
        k = K_BANDS[band]
        if band == 0:
            for wt in w[lo:hi]:
                temp = (((a << 5) | (a >> 27)) + ((b & c) | (~b & d)) + e + wt + k) & MASK32
                a, b, c, d, e = temp, a, ((b << 30) | (b >> 2)) & MASK32, c, d
        elif band == 2:
            for wt in w[lo:hi]:
                temp = (((a << 5) | (a >> 27)) + ((b & c) | (d & (b | c))) + e + wt + k) & MASK32
                a, b, c, d, e = temp, a, ((b << 30) | (b >> 2)) & MASK32, c, d
        else:
            for wt in w[lo:hi]:
                temp = (((a << 5) | (a >> 27)) + (b ^ c ^ d) + e + wt + k) & MASK32
                a, b, c, d, e = temp, a, ((b << 30) | (b >> 2)) & MASK32, c, d
    return Sha1State(a, b, c, d, e)


def sha1_compress(cv: Sequence[Word], block: bytes) -> Sha1State:
    out = sha1_rounds(cv, expand_schedule(words_from_block(block, "big")))
    return Sha1State(*((h + v) & MASK32 for h, v in zip(cv, out)))


def sha192_step(regs: Sequence[Word], w: Word, k: Word, t: int) -> Sha192Registers:
    # All right-hand sides read the incoming registers.
    a, b, c, d, e, f = regs
    temp1 = (rotl(a, 5) + sha_f(t, b, c, d) + e + w + k) & MASK32
    temp2 = (temp1 + a + f) & MASK32
    return Sha192Registers(temp2, rotl(a, 15), rotl(b, 30), c, d, temp1)


def sha192_rounds(regs: Sequence[Word], w: Sequence[Word], start: int = 0, stop: int = STEPS) -> Sha192Registers:
    # Steps [start, stop) over A..F with an expanded schedule, no chaining addition.
    _check_range(start, stop)
    a, b, c, d, e, f = regs
    for band, lo, hi in band_spans(start, stop, 20):
        k = K_BANDS[band]
        if band == 0:
            for wt in w[lo:hi]:
                t1 = (((a << 5) | (a >> 27)) + ((b & c) | (~b & d)) + e + wt + k) & MASK32
                a, b, c, d, e, f = (
                    (t1 + a + f) & MASK32, ((a << 15) | (a >> 17)) & MASK32,
                    ((b << 30) | (b >> 2)) & MASK32, c, d, t1,
                )
        elif band == 2:
            for wt in w[lo:hi]:
                t1 = (((a << 5) | (a >> 27)) + ((b & c) | (d & (b | c))) + e + wt + k) & MASK32
                a, b, c, d, e, f = (
                    (t1 + a + f) & MASK32, ((a << 15) | (a >> 17)) & MASK32,
                    ((b << 30) | (b >> 2)) & MASK32, c, d, t1,
                )
        else:
            for wt in w[lo:hi]:
                t1 = (((a << 5) | (a >> 27)) + (b ^ c ^ d) + e + wt + k) & MASK32
                a, b, c, d, e, f = (
                    (t1 + a + f) & MASK32, ((a << 15) | (a >> 17)) & MASK32,
                    ((b << 30) | (b >> 2)) & MASK32, c, d, t1,
                )
    return Sha192Registers(a, b, c, d, e, f)


def sha192_compress(cv: Sequence[Word], block: bytes) -> Sha192State:
    out = sha192_rounds(cv, expand_schedule(words_from_block(block, "big")))
    return Sha192State(*((h + v) & MASK32 for h, v in zip(cv, out)))


class Sha1Context(HashContext):

    name = "sha1"
    digest_size = 20
    iv = SHA1_IV
    encoding = LengthEncoding.BIG_ENDIAN_64

    @classmethod
    def _compress(cls, state, block):
        return sha1_compress(state, block)


class Sha192Context(HashContext):

    name = "sha192"
    digest_size = 24
    iv = SHA192_IV
    encoding = LengthEncoding.BIG_ENDIAN_64

    @classmethod
    def _compress(cls, state, block):
        return sha192_compress(state, block)


def sha1_init() -> Sha1Context:
    return Sha1Context()


def sha1_update(ctx: Sha1Context, data: bytes) -> Sha1Context:
    return ctx.update(data)


def sha1_finalize(ctx: Sha1Context) -> bytes:
    return ctx.finalize()


def sha1_digest(data: bytes) -> bytes:
    return Sha1Context(data).finalize()


def sha192_init() -> Sha192Context:
    return Sha192Context()


def sha192_update(ctx: Sha192Context, data: bytes) -> Sha192Context:
    return ctx.update(data)


def sha192_finalize(ctx: Sha192Context) -> bytes:
    return ctx.finalize()


def sha192_digest(data: bytes) -> bytes:
    return Sha192Context(data).finalize()
