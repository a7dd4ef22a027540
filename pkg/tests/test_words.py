import pytest

from diu.errors import LengthOverflow
from diu.words import (
    MASK32,
    LengthEncoding,
    add32,
    band_spans,
    block_from_words,
    pad_message,
    padding_for,
    rotl,
    serialize_digest,
    state_from_digest,
    words_from_block,
)

from conftest import random_words


@pytest.mark.parametrize(
    "x, n, expected",
    [
        (0x00000001, 0, 0x00000001),
        (0x80000000, 1, 0x00000001),
        (0x12345678, 8, 0x34567812),
        (0xFFFFFFFF, 31, 0xFFFFFFFF),
    ],
)
def test_rotl_cases(x, n, expected):
    assert rotl(x, n) == expected


@pytest.mark.parametrize("n", [-1, 32, 40])
def test_rotl_rejects_out_of_range_count(n):
    with pytest.raises(ValueError):
        rotl(1, n)


def test_rotl_inverse_and_popcount(rng):
    for _ in range(1000):
        x = rng.getrandbits(32)
        n = rng.randrange(32)
        r = rotl(x, n)
        assert rotl(r, (32 - n) % 32) == x
        assert bin(r).count("1") == bin(x).count("1")


@pytest.mark.parametrize(
    "terms, expected",
    [
        ([0x00000000, 0xDEADBEEF], 0xDEADBEEF),
        ([0xFFFFFFFF, 0x00000001], 0x00000000),
        ([0x7FFFFFFF, 0x7FFFFFFF, 0x00000002], 0x00000000),
        ([0x12345678], 0x12345678),
    ],
)
def test_add32_cases(terms, expected):
    assert add32(terms) == expected


def test_add32_order_independent(rng):
    for _ in range(200):
        terms = list(random_words(rng, 5))
        shuffled = terms[:]
        rng.shuffle(shuffled)
        assert add32(terms) == add32(shuffled) == sum(terms) & MASK32


def test_add32_needs_a_term():
    with pytest.raises(ValueError):
        add32([])


def test_pad_empty_message():
    blocks = pad_message(b"", enc=LengthEncoding.BIG_ENDIAN_64)
    assert blocks == [b"\x80" + b"\x00" * 63]


def test_pad_55_and_56_byte_boundary():
    assert len(pad_message(b"x" * 55)) == 1
    assert len(pad_message(b"x" * 56)) == 2


def test_pad_md5_length_field_is_little_endian():
    (block,) = pad_message(b"abc", enc=LengthEncoding.LITTLE_ENDIAN_64)
    assert block[-8:] == bytes([0x18, 0, 0, 0, 0, 0, 0, 0])


def test_pad_sha_length_field_is_big_endian():
    (block,) = pad_message(b"abc", enc=LengthEncoding.BIG_ENDIAN_64)
    assert block[-8:] == bytes([0, 0, 0, 0, 0, 0, 0, 0x18])


@pytest.mark.parametrize("enc", list(LengthEncoding))
def test_pad_properties(enc):
    for n in range(0, 201):
        message = bytes(i & 0xFF for i in range(n))
        blocks = pad_message(message, n * 8, enc)
        padded = b"".join(blocks)
        assert all(len(b) == 64 for b in blocks)
        assert len(padded) % 64 == 0
        assert len(blocks) == -(-(n + 9) // 64)
        assert padded[:n] == message
        assert padded[n] == 0x80
        assert set(padded[n + 1 : -8]) <= {0}
        assert int.from_bytes(padded[-8:], enc.byteorder) == n * 8


def test_pad_rejects_mismatched_bit_length():
    with pytest.raises(ValueError):
        pad_message(b"abc", 23)


def test_pad_length_overflow():
    with pytest.raises(LengthOverflow):
        pad_message(b"", 1 << 64)
    with pytest.raises(LengthOverflow):
        padding_for(1 << 61, LengthEncoding.BIG_ENDIAN_64)


def test_words_from_block_byte_order():
    block = bytes([1, 0, 0, 0]) + b"\x00" * 60
    assert words_from_block(block, "little")[0] == 0x00000001
    assert words_from_block(block, "big")[0] == 0x01000000


def test_words_from_block_rejects_short_block():
    with pytest.raises(ValueError):
        words_from_block(b"\x00" * 63, "big")


@pytest.mark.parametrize("order", ["little", "big"])
def test_block_word_round_trip(rng, order):
    for _ in range(1000):
        words = random_words(rng, 16)
        assert words_from_block(block_from_words(words, order), order) == words


def test_serialize_digest_byte_order():
    md5_state = (0x01234567, 0, 0, 0)
    sha_state = (0x67452301, 0, 0, 0, 0)
    assert serialize_digest(md5_state, "little")[:4] == bytes([0x67, 0x45, 0x23, 0x01])
    assert serialize_digest(sha_state, "big")[:4] == bytes([0x67, 0x45, 0x23, 0x01])


@pytest.mark.parametrize("arity", [4, 5, 6])
def test_serialize_digest_length(rng, arity):
    state = random_words(rng, arity)
    out = serialize_digest(state, "big")
    assert len(out) == 4 * arity
    assert state_from_digest(out, "big") == state


def test_serialize_digest_rejects_bad_arity():
    with pytest.raises(ValueError):
        serialize_digest((1, 2, 3), "big")


@pytest.mark.parametrize(
    "start, stop, width, expected",
    [
        (0, 80, 20, [(0, 0, 20), (1, 20, 40), (2, 40, 60), (3, 60, 80)]),
        (19, 21, 20, [(0, 19, 20), (1, 20, 21)]),
        (5, 6, 16, [(0, 5, 6)]),
        (64, 64, 16, []),
        (30, 64, 16, [(1, 30, 32), (2, 32, 48), (3, 48, 64)]),
    ],
)
def test_band_spans(start, stop, width, expected):
    assert list(band_spans(start, stop, width)) == expected


@pytest.mark.parametrize("message", [5, "abc", None])
def test_pad_rejects_non_buffers(message):
    with pytest.raises(TypeError):
        pad_message(message)
