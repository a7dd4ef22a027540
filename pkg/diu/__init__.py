__version__ = "0.1.0"

from .errors import (
    DiuError,
    LengthOverflow,
    UseAfterFinalize,
    ArityMismatch,
    BlockExhausted,
    CoreBusy,
    TableIntegrityError,
    ConfigError,
    VectorError,
    VectorParseError,
    DigestLengthMismatch,
)
from .config import (
    BenchConfig, AvalancheConfig, RenderConfig, ChartTheme,
    DARK_THEME, LIGHT_THEME,
)
from .words import (
    MASK32,
    LengthEncoding,
    rotl,
    add32,
    pad_message,
    words_from_block,
    block_from_words,
    serialize_digest,
)
from .context import HashContext, ALGORITHMS, new, digest
from .md5 import (
    Md5State,
    Md5Context,
    md5_aux,
    t_entry,
    md5_msg_index,
    md5_step,
    md5_rounds,
    md5_compress,
    md5_init,
    md5_update,
    md5_finalize,
    md5_digest,
)
from .sha import (
    Sha1State,
    Sha192State,
    Sha192Registers,
    ShaRoundParams,
    Sha1Context,
    Sha192Context,
    sha_f,
    sha_k,
    expand_schedule,
    sha1_rounds,
    sha1_compress,
    sha192_step,
    sha192_rounds,
    sha192_compress,
    sha1_init,
    sha1_update,
    sha1_finalize,
    sha1_digest,
    sha192_init,
    sha192_update,
    sha192_finalize,
    sha192_digest,
)
from .unified import Mode, UnifiedCore, StepTrace, unified_digest, trace_message
from .resources import ResourceRow, ResourceReport, resource_report
from .vectors import TestVector, SelftestReport, load_vectors, parse_vectors, run_selftest
from .bench import BenchResult, measure, bench_table
from .avalanche import AvalancheResult, avalanche, hamming_distance

__all__ = [
    "DiuError", "LengthOverflow", "UseAfterFinalize", "ArityMismatch",
    "BlockExhausted", "CoreBusy", "TableIntegrityError", "ConfigError",
    "VectorError", "VectorParseError", "DigestLengthMismatch",
    "BenchConfig", "AvalancheConfig", "RenderConfig", "ChartTheme",
    "DARK_THEME", "LIGHT_THEME",
    "MASK32", "LengthEncoding", "rotl", "add32", "pad_message",
    "words_from_block", "block_from_words", "serialize_digest",
    "HashContext", "ALGORITHMS", "new", "digest",
    "Md5State", "Md5Context", "md5_aux", "t_entry", "md5_msg_index",
    "md5_step", "md5_rounds", "md5_compress", "md5_init", "md5_update", "md5_finalize", "md5_digest",
    "Sha1State", "Sha192State", "Sha192Registers", "ShaRoundParams",
    "Sha1Context", "Sha192Context", "sha_f", "sha_k", "expand_schedule",
    "sha1_rounds", "sha1_compress", "sha192_step", "sha192_rounds", "sha192_compress",
    "sha1_init", "sha1_update", "sha1_finalize", "sha1_digest",
    "sha192_init", "sha192_update", "sha192_finalize", "sha192_digest",
    "Mode", "UnifiedCore", "StepTrace", "unified_digest", "trace_message",
    "ResourceRow", "ResourceReport", "resource_report",
    "TestVector", "SelftestReport", "load_vectors", "parse_vectors", "run_selftest",
    "BenchResult", "measure", "bench_table",
    "AvalancheResult", "avalanche", "hamming_distance",
]
