"""Exception hierarchy for wstego.

Every domain failure raises a subclass of :class:`StegoError`. Each class
carries a stable ``code`` string used by the CLI for machine-parsable error
lines; the CLI maps classes to exit codes, the library never does.
"""

from __future__ import annotations


class StegoError(Exception):
    """Base class for all wstego domain errors."""

    code = "STEGO_ERROR"


# wavelet transform

class UnknownWaveletError(StegoError):
    """Wavelet name is not one of the built-in families."""

    code = "UNKNOWN_WAVELET"


class InvalidWaveletError(StegoError):
    """Filter taps violate the orthonormal scaling-filter invariants."""

    code = "INVALID_WAVELET"


class OddLengthError(StegoError):
    """Single-level analysis requires an even-length input."""

    code = "ODD_LENGTH"


class SignalTooShortError(StegoError):
    """Input is shorter than the filter tap count."""

    code = "SIGNAL_TOO_SHORT"


class LengthMismatchError(StegoError):
    """Paired vectors have different lengths."""

    code = "LENGTH_MISMATCH"


class TooManyLevelsError(StegoError):
    """Requested decomposition depth exceeds what the signal length allows."""

    code = "TOO_MANY_LEVELS"


class InconsistentBookkeepingError(StegoError):
    """Coefficient vector and bookkeeping lengths disagree."""

    code = "INCONSISTENT_BOOKKEEPING"


# WAV container

class NotRiffError(StegoError):
    """Bytes are not a RIFF/WAVE container (or violate fmt-before-data)."""

    code = "NOT_RIFF"


class UnsupportedChannelCountError(StegoError):
    """Only mono audio is supported."""

    code = "UNSUPPORTED_CHANNEL_COUNT"


class UnsupportedFormatError(StegoError):
    """Format code / bit depth combination is not supported."""

    code = "UNSUPPORTED_FORMAT"


class TruncatedFileError(StegoError):
    """File ends before a declared chunk or required chunk is complete."""

    code = "TRUNCATED_FILE"


class EmptySignalError(StegoError):
    """Refusing to write a WAV file with zero samples."""

    code = "EMPTY_SIGNAL"


# payload codec

class PayloadTooLongError(StegoError):
    """Payload exceeds the 65535-byte framing limit."""

    code = "PAYLOAD_TOO_LONG"


class IntegrityError(StegoError):
    """Chunk stream is not a valid framed payload.

    Signals a wrong key, wrong audio file, or damaged coefficient digits.
    """

    code = "INTEGRITY"


# stego key

class InvalidKeyCharacterError(StegoError):
    """Password characters must be alphanumeric ([0-9A-Za-z])."""

    code = "INVALID_KEY_CHARACTER"


class KeySyntaxError(StegoError):
    """Key file does not match the WSTEGO-KEY v1 grammar."""

    code = "KEY_SYNTAX"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class DuplicateSubbandError(StegoError):
    """Two key entries target the same subband."""

    code = "DUPLICATE_SUBBAND"


class BadLevelReferenceError(StegoError):
    """Entry references a subband that does not exist for the key's level count."""

    code = "BAD_LEVEL_REFERENCE"


class CapacityExceededError(StegoError):
    """More chunk slots requested than the key provides."""

    code = "CAPACITY_EXCEEDED"


class PositionOutOfSubbandError(StegoError):
    """A password-driven position falls outside its subband."""

    code = "POSITION_OUT_OF_SUBBAND"


# embed / extract

class ChunkOutOfRangeError(StegoError):
    """Chunk values occupy three decimal digits: 0..999."""

    code = "CHUNK_OUT_OF_RANGE"


class SelfCheckFailedError(StegoError):
    """Post-embed extraction did not reproduce the payload."""

    code = "SELF_CHECK_FAILED"


# metrics

class RateMismatchError(StegoError):
    """Signals have different sample rates."""

    code = "RATE_MISMATCH"


class ZeroReferenceError(StegoError):
    """SNR is undefined for an all-zero reference signal."""

    code = "ZERO_REFERENCE"
