import pytest

from diu.errors import ArityMismatch, BlockExhausted, CoreBusy
from diu.md5 import IV as MD5_IV
from diu.md5 import SCHEDULE, md5_compress, md5_digest, md5_step
from diu.sha import SHA192_IV, expand_schedule, sha192_compress, sha192_digest, sha192_step, sha_k
from diu.unified import LANES, PARKED, Mode, StepTrace, UnifiedCore, trace_message, unified_digest
from diu.words import MASK32, state_from_digest, words_from_block

from conftest import random_block, random_message, random_words

STANDALONE = {Mode.MD5: (md5_compress, md5_digest), Mode.SHA192: (sha192_compress, sha192_digest)}


@pytest.mark.parametrize(
    "mode, steps, arity, byteorder",
    [(Mode.MD5, 64, 4, "little"), (Mode.SHA192, 80, 6, "big")],
)
def test_mode_properties(mode, steps, arity, byteorder):
    assert mode.steps == steps
    assert mode.arity == arity
    assert mode.byteorder == byteorder
    assert len(mode.iv) == arity


def test_mode_from_string():
    assert UnifiedCore("md5").mode is Mode.MD5
    with pytest.raises(ValueError):
        Mode("sha1")


def test_md5_mode_parks_lanes_a_and_f(rng):
    core = UnifiedCore(Mode.MD5).load_block(MD5_IV, random_block(rng))
    assert core.regs == (PARKED,) + MD5_IV + (PARKED,)
    for _ in range(64):
        trace = core.step()
        assert trace.regs[0] == PARKED
        assert trace.regs[5] == PARKED


@pytest.mark.parametrize("mode", list(Mode))
def test_trace_length_and_exhaustion(rng, mode):
    core = UnifiedCore(mode).load_block(mode.iv, random_block(rng))
    traces, _ = core.trace_block()
    assert len(traces) == mode.steps
    assert [t.step for t in traces] == list(range(mode.steps))
    with pytest.raises(BlockExhausted):
        core.step()
    with pytest.raises(BlockExhausted):
        core.run_block()


def test_step_before_load():
    with pytest.raises(BlockExhausted):
        UnifiedCore(Mode.SHA192).step()


@pytest.mark.parametrize("mode, wrong", [(Mode.MD5, 6), (Mode.SHA192, 4), (Mode.SHA192, 5)])
def test_arity_mismatch(mode, wrong):
    with pytest.raises(ArityMismatch):
        UnifiedCore(mode).load_block((0,) * wrong, b"\x00" * 64)


def test_mode_switch_mid_block_is_refused(rng):
    core = UnifiedCore(Mode.SHA192).load_block(SHA192_IV, random_block(rng))
    core.step()
    assert core.busy
    assert core.steps_remaining == 79
    with pytest.raises(CoreBusy):
        core.select(Mode.MD5)
    with pytest.raises(CoreBusy):
        core.load_block(SHA192_IV, random_block(rng))
    core.run_block()
    assert not core.busy
    core.select(Mode.MD5)
    assert core.mode is Mode.MD5
    assert core.steps_remaining == 0


@pytest.mark.parametrize("mode", list(Mode))
def test_run_block_matches_standalone_compression(rng, mode):
    compress, _ = STANDALONE[mode]
    core = UnifiedCore(mode)
    for _ in range(10_000):
        cv = random_words(rng, mode.arity)
        block = random_block(rng)
        core.load_block(cv, block)
        assert core.run_block() == tuple(compress(cv, block))


def test_md5_lanes_follow_md5_step(rng):
    for _ in range(20):
        cv = random_words(rng, 4)
        block = random_block(rng)
        x = words_from_block(block, "little")
        core = UnifiedCore(Mode.MD5).load_block(cv, block)
        state = cv
        for i in range(64):
            rnd, idx, t, s = SCHEDULE.step(i)
            state = md5_step(state, x[idx], t, s, rnd)
            assert core.step().regs[1:5] == tuple(state)


def test_sha192_lanes_follow_sha192_step(rng):
    for _ in range(20):
        cv = random_words(rng, 6)
        block = random_block(rng)
        w = expand_schedule(words_from_block(block, "big"))
        core = UnifiedCore(Mode.SHA192).load_block(cv, block)
        regs = cv
        for t in range(80):
            regs = sha192_step(regs, w[t], sha_k(t), t)
            assert core.step().regs == tuple(regs)


def test_sha192_first_step_from_iv():
    core = UnifiedCore(Mode.SHA192).load_block(SHA192_IV, b"\x00" * 64)
    assert core.step().regs == (0x00AC93E8, 0x9180B3A2, 0x7BF36AE2, 0x98BADCFE, 0x10325476, 0x9FB498B3)


@pytest.mark.parametrize(
    "mode, message, expected",
    [
        ("md5", b"", "d41d8cd98f00b204e9800998ecf8427e"),
        ("md5", b"abc", "900150983cd24fb0d6963f7d28e17f72"),
        ("sha192", b"", "3decc0bf73d424c70118692b42e60e903d9d344e934e598f"),
        ("sha192", b"abc", "499d0b3e779ef9645a03fef910492e571ccc0f0f9a95371e"),
    ],
)
def test_unified_digest_known_answers(mode, message, expected):
    assert unified_digest(mode, message).hex() == expected


@pytest.mark.parametrize("mode", list(Mode))
def test_unified_digest_matches_standalone(rng, mode):
    _, standalone = STANDALONE[mode]
    for _ in range(200):
        message = random_message(rng, 300)
        assert unified_digest(mode, message) == standalone(message)


@pytest.mark.slow
@pytest.mark.parametrize("mode", list(Mode))
def test_unified_fuzz(rng, mode):
    _, standalone = STANDALONE[mode]
    for _ in range(10_000):
        message = random_message(rng, 2048)
        assert unified_digest(mode, message) == standalone(message)


def test_interleaved_modes_share_one_core(rng):
    core = UnifiedCore(Mode.MD5)
    for _ in range(50):
        mode = rng.choice(list(Mode))
        compress, _ = STANDALONE[mode]
        cv = random_words(rng, mode.arity)
        block = random_block(rng)
        core.select(mode).load_block(cv, block)
        assert core.run_block() == tuple(compress(cv, block))


@pytest.mark.parametrize("mode, lanes", [(Mode.MD5, slice(1, 5)), (Mode.SHA192, slice(0, 6))])
def test_trace_final_regs_plus_iv_is_digest(mode, lanes):
    traces, chaining = trace_message(mode, b"", 0)
    final = traces[-1].regs[lanes]
    state = tuple((h + v) & MASK32 for h, v in zip(mode.iv, final))
    assert state == chaining
    assert state == state_from_digest(unified_digest(mode, b""), mode.byteorder)


def test_trace_message_second_block():
    traces, chaining = trace_message("sha192", b"a" * 56, 1)
    assert len(traces) == 80
    assert chaining == state_from_digest(sha192_digest(b"a" * 56), "big")


@pytest.mark.parametrize("block", [-1, 1])
def test_trace_message_block_out_of_range(block):
    with pytest.raises(ValueError):
        trace_message("md5", b"abc", block)


def test_step_trace_format():
    trace = StepTrace(step=3, mode=Mode.SHA192, regs=(1, 2, 3, 4, 5, 0xFFFFFFFF))
    assert trace.format() == "t=3 A=00000001 B=00000002 C=00000003 D=00000004 E=00000005 F=ffffffff"
    assert str(trace) == trace.format()
    assert LANES == "ABCDEF"


@pytest.mark.parametrize("mode", list(Mode))
def test_run_block_after_partial_steps(rng, mode):
    compress, _ = STANDALONE[mode]
    for stepped in (0, 1, 15, 16, 20, mode.steps - 1, mode.steps):
        cv = random_words(rng, mode.arity)
        block = random_block(rng)
        core = UnifiedCore(mode).load_block(cv, block)
        for _ in range(stepped):
            core.step()
        assert core.run_block() == tuple(compress(cv, block))
        assert core.counter == mode.steps
        assert not core.busy


@pytest.mark.parametrize("t", range(80))
def test_sha192_lanes_use_shared_round_function_and_constant(rng, t):
    # Drive the core to step t, then check that single step against sha192_step.
    block = random_block(rng)
    w = expand_schedule(words_from_block(block, "big"))
    core = UnifiedCore(Mode.SHA192).load_block(random_words(rng, 6), block)
    for _ in range(t):
        core.step()
    before = core.regs
    assert core.step().regs == tuple(sha192_step(before, w[t], sha_k(t), t))
