# Unified MD5 / SHA-192 datapath with a mode select line.
#
# Six 32-bit lanes A..F. SHA-192 uses all six; MD5 maps its A, B, C, D onto
# lanes B, C, D, E and holds A and F parked at zero.

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence, Union

from . import md5 as _md5
from . import sha as _sha
from .errors import ArityMismatch, BlockExhausted, CoreBusy
from .words import MASK32, LengthEncoding, Word, band_spans, pad_message, serialize_digest, words_from_block

LANES = "ABCDEF"
PARKED = 0


class Mode(Enum):
    MD5 = "md5"
    SHA192 = "sha192"

    @property
    def steps(self) -> int:
        return _md5.STEPS if self is Mode.MD5 else _sha.STEPS

    @property
    def arity(self) -> int:
        return 4 if self is Mode.MD5 else 6

    @property
    def encoding(self) -> LengthEncoding:
        if self is Mode.MD5:
            return LengthEncoding.LITTLE_ENDIAN_64
        return LengthEncoding.BIG_ENDIAN_64

    @property
    def byteorder(self) -> str:
        return self.encoding.byteorder

    @property
    def iv(self) -> tuple[Word, ...]:
        return _md5.IV if self is Mode.MD5 else _sha.SHA192_IV


ModeLike = Union[Mode, str]

# (message index, T, shift) per MD5 step
_MD5_STEPS = tuple(_md5.SCHEDULE.step(i)[1:] for i in range(_md5.STEPS))


@dataclass(frozen=True)
class StepTrace:
    # Registers after one step.

    step: int
    mode: Mode
    regs: tuple[Word, ...]

    def format(self) -> str:
        cols = " ".join(f"{lane}={value:08x}" for lane, value in zip(LANES, self.regs))
        return f"t={self.step} {cols}"

    def __str__(self) -> str:
        return self.format()


def _md5_lanes(regs: Sequence[Word], start: int, stop: int, x: Sequence[Word]) -> tuple[Word, ...]:
    # MD5 steps [start, stop) on lanes B..E; the round select picks F.
    _, a, b, c, d, _ = regs
    for round, lo, hi in band_spans(start, stop, 16):
        for index, t, s in _MD5_STEPS[lo:hi]:
            if round == 0:
                fn = (b & c) | (~b & d)
            elif round == 1:
                fn = (b & d) | (c & ~d)
            elif round == 2:
                fn = b ^ c ^ d
            else:
                fn = c ^ (b | (~d & MASK32))
            v = (a + fn + x[index] + t) & MASK32
            a, b, c, d = d, (b + ((v << s) | (v >> (32 - s)))) & MASK32, b, c
    return (PARKED, a, b, c, d, PARKED)


def _sha192_lanes(regs: Sequence[Word], start: int, stop: int, w: Sequence[Word]) -> tuple[Word, ...]:
    # SHA-192 steps [start, stop) on lanes A..F; the band select picks f_t and K_t.
    a, b, c, d, e, f = regs
    for band, lo, hi in band_spans(start, stop, 20):
        k = _sha.K_BANDS[band]
        for wt in w[lo:hi]:
            if band == 0:
                fn = (b & c) | (~b & d)
            elif band == 2:
                fn = (b & c) | (d & (b | c))
            else:
                fn = b ^ c ^ d
            temp1 = (((a << 5) | (a >> 27)) + fn + e + wt + k) & MASK32
            a, b, c, d, e, f = (
                (temp1 + a + f) & MASK32,
                ((a << 15) | (a >> 17)) & MASK32,
                ((b << 30) | (b >> 2)) & MASK32,
                c,
                d,
                temp1,
            )
    return (a, b, c, d, e, f)


@dataclass
class UnifiedCore:
    # One register file, one set of functional units, two modes.

    mode: Mode = Mode.SHA192
    regs: tuple[Word, ...] = (0,) * 6
    counter: int = 0
    chaining: tuple[Word, ...] = ()
    block_words: tuple[Word, ...] = ()
    _schedule: tuple[Word, ...] = field(default=(), repr=False)
    _loaded: bool = field(default=False, repr=False)

    def __post_init__(self):
        self.mode = Mode(self.mode)

    @property
    def busy(self) -> bool:
        return self._loaded and 0 < self.counter < self.mode.steps

    @property
    def steps_remaining(self) -> int:
        return self.mode.steps - self.counter if self._loaded else 0

    def select(self, mode: ModeLike) -> "UnifiedCore":
        # Drive the select line; only between blocks.
        if self.busy:
            raise CoreBusy(f"cannot switch mode at step {self.counter} of a {self.mode.value} block")
        self.mode = Mode(mode)
        self.regs = (0,) * 6
        self.counter = 0
        self.chaining = ()
        self.block_words = ()
        self._schedule = ()
        self._loaded = False
        return self

    def load_block(self, cv: Sequence[Word], block: bytes) -> "UnifiedCore":
        if self.busy:
            raise CoreBusy(f"{self.mode.value} block in flight at step {self.counter}")
        if len(cv) != self.mode.arity:
            raise ArityMismatch(self.mode.value, self.mode.arity, len(cv))
        words = words_from_block(block, self.mode.byteorder)
        self.chaining = tuple(v & MASK32 for v in cv)
        self.block_words = words
        if self.mode is Mode.MD5:
            self.regs = (PARKED,) + self.chaining + (PARKED,)
            self._schedule = words
        else:
            self.regs = self.chaining
            self._schedule = _sha.expand_schedule(words)
        self.counter = 0
        self._loaded = True
        return self

    def _advance(self, stop: int):
        # Run the lanes up to step stop, writing regs and counter back once.
        if not self._loaded or self.counter >= self.mode.steps:
            raise BlockExhausted(self.mode.value, self.mode.steps)
        lanes = _md5_lanes if self.mode is Mode.MD5 else _sha192_lanes
        self.regs = lanes(self.regs, self.counter, stop, self._schedule)
        self.counter = stop

    def step(self) -> StepTrace:
        self._advance(self.counter + 1)
        return StepTrace(step=self.counter - 1, mode=self.mode, regs=self.regs)

    def _finish(self) -> tuple[Word, ...]:
        if self.mode is Mode.MD5:
            live = self.regs[1:5]
        else:
            live = self.regs
        result = tuple((h + v) & MASK32 for h, v in zip(self.chaining, live))
        self.chaining = result
        self._loaded = False
        return result

    def run_block(self) -> tuple[Word, ...]:
        # Remaining steps, then the chaining addition.
        if not self._loaded:
            raise BlockExhausted(self.mode.value, self.mode.steps)
        if self.counter < self.mode.steps:
            self._advance(self.mode.steps)
        return self._finish()

    def trace_block(self) -> tuple[list[StepTrace], tuple[Word, ...]]:
        if not self._loaded:
            raise BlockExhausted(self.mode.value, self.mode.steps)
        traces = []
        while self.counter < self.mode.steps:
            traces.append(self.step())
        return traces, self._finish()


def unified_digest(mode: ModeLike, message: bytes) -> bytes:
    mode = Mode(mode)
    core = UnifiedCore(mode)
    state = mode.iv
    for block in pad_message(message, enc=mode.encoding):
        core.load_block(state, block)
        state = core.run_block()
    return serialize_digest(state, mode.byteorder)


def trace_message(mode: ModeLike, message: bytes, block_index: int) -> tuple[list[StepTrace], tuple[Word, ...]]:
    # Per-step trace of one block of the padded message.
    mode = Mode(mode)
    blocks = pad_message(message, enc=mode.encoding)
    if not 0 <= block_index < len(blocks):
        raise ValueError(f"block {block_index} outside 0..{len(blocks) - 1} of the padded message")
    core = UnifiedCore(mode)
    state = mode.iv
    for block in blocks[:block_index]:
        core.load_block(state, block)
        state = core.run_block()
    core.load_block(state, blocks[block_index])
    return core.trace_block()
