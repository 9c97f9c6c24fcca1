"""wstego: wavelet-domain steganography for mono WAV audio.

Hides an (externally encrypted) byte payload in the first three decimal
digits of selected wavelet coefficients. Placement is governed by a
stego-key of per-subband start offsets and alphanumeric passwords; the
payload is recovered exactly from the stego audio plus the key.
"""

from .codec import MAX_PAYLOAD_BYTES, decode_payload, encode_payload
from .dwt import (
    DEFAULT_WAVELET,
    WAVELET_NAMES,
    Decomposition,
    WaveletSpec,
    bookkeeping,
    dwt_level,
    get_wavelet,
    idwt_level,
    subband_ranges,
    wavedec,
    waverec,
)
from .errors import (
    BadLevelReferenceError,
    CapacityExceededError,
    ChunkOutOfRangeError,
    DuplicateSubbandError,
    EmptySignalError,
    InconsistentBookkeepingError,
    IntegrityError,
    InvalidKeyCharacterError,
    InvalidWaveletError,
    KeySyntaxError,
    LengthMismatchError,
    NotRiffError,
    OddLengthError,
    PayloadTooLongError,
    PositionOutOfSubbandError,
    RateMismatchError,
    SelfCheckFailedError,
    SignalTooShortError,
    StegoError,
    TooManyLevelsError,
    TruncatedFileError,
    UnknownWaveletError,
    UnsupportedChannelCountError,
    UnsupportedFormatError,
    ZeroReferenceError,
)
from .key import (
    KEY_MAGIC,
    PASSWORD_ALPHABET,
    EmbeddingPlan,
    KeyEntry,
    StegoKey,
    capacity_bytes,
    generate_key,
    parse_key,
    plan_positions,
    serialize_key,
    step_of,
)
from .metrics import DistortionReport, snr_db
from .stego import EmbedReport, embed, embed_chunk, extract, extract_chunk
from .wavio import FLOAT32, FLOAT64, PCM16, AudioSignal, WavFormat, read_wav, write_wav

__version__ = "0.1.0"

__all__ = [
    "AudioSignal",
    "BadLevelReferenceError",
    "CapacityExceededError",
    "ChunkOutOfRangeError",
    "DEFAULT_WAVELET",
    "Decomposition",
    "DistortionReport",
    "DuplicateSubbandError",
    "EmbedReport",
    "EmbeddingPlan",
    "EmptySignalError",
    "FLOAT32",
    "FLOAT64",
    "InconsistentBookkeepingError",
    "IntegrityError",
    "InvalidKeyCharacterError",
    "InvalidWaveletError",
    "KEY_MAGIC",
    "KeyEntry",
    "KeySyntaxError",
    "LengthMismatchError",
    "MAX_PAYLOAD_BYTES",
    "NotRiffError",
    "OddLengthError",
    "PASSWORD_ALPHABET",
    "PCM16",
    "PayloadTooLongError",
    "PositionOutOfSubbandError",
    "RateMismatchError",
    "SelfCheckFailedError",
    "SignalTooShortError",
    "StegoError",
    "StegoKey",
    "TooManyLevelsError",
    "TruncatedFileError",
    "UnknownWaveletError",
    "UnsupportedChannelCountError",
    "UnsupportedFormatError",
    "WAVELET_NAMES",
    "WaveletSpec",
    "WavFormat",
    "ZeroReferenceError",
    "bookkeeping",
    "capacity_bytes",
    "decode_payload",
    "dwt_level",
    "embed",
    "embed_chunk",
    "encode_payload",
    "extract",
    "extract_chunk",
    "generate_key",
    "get_wavelet",
    "idwt_level",
    "parse_key",
    "plan_positions",
    "read_wav",
    "serialize_key",
    "snr_db",
    "step_of",
    "subband_ranges",
    "wavedec",
    "waverec",
    "write_wav",
]
