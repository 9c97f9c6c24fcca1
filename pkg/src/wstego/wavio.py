"""Bit-exact RIFF/WAVE reading and writing for mono audio.

Supported sample formats: 16-bit integer PCM (format code 1) and 32/64-bit
IEEE float (format code 3). PCM samples are normalized by 1/32768 on read.
The fmt chunk must precede the data chunk; unknown chunks are skipped.
Files larger than 4 GiB are out of scope.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptySignalError,
    NotRiffError,
    TruncatedFileError,
    UnsupportedChannelCountError,
    UnsupportedFormatError,
)

PCM16 = "pcm16"
FLOAT32 = "float32"
FLOAT64 = "float64"

_FORMATS = {
    PCM16: (1, 16),
    FLOAT32: (3, 32),
    FLOAT64: (3, 64),
}
_NAMES = {v: k for k, v in _FORMATS.items()}

_PCM16_SCALE = 32768.0
_MAX_RIFF = 0xFFFFFFFF


@dataclass(frozen=True, eq=False)
class AudioSignal:
    """Mono audio as float64 samples, nominally in [-1, 1)."""

    samples: np.ndarray
    sample_rate: int
    source_format: str = FLOAT64

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError(f"samples must be 1-D (mono), got shape {arr.shape}")
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if self.source_format not in _FORMATS:
            raise ValueError(f"unknown source_format {self.source_format!r}")
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))

    def __len__(self) -> int:
        return self.samples.size


@dataclass(frozen=True)
class WavFormat:
    """Validated fmt-chunk parameters for writing."""

    format_code: int
    bits_per_sample: int
    sample_rate: int
    channels: int = 1

    def __post_init__(self):
        if self.channels != 1:
            raise UnsupportedChannelCountError(f"only mono supported, got {self.channels} channels")
        if (self.format_code, self.bits_per_sample) not in _NAMES:
            raise UnsupportedFormatError(
                f"unsupported format code {self.format_code} at {self.bits_per_sample} bits"
            )
        if self.sample_rate <= 0:
            raise UnsupportedFormatError(f"sample rate must be positive, got {self.sample_rate}")

    @property
    def name(self) -> str:
        return _NAMES[(self.format_code, self.bits_per_sample)]

    @classmethod
    def from_name(cls, name: str, sample_rate: int) -> "WavFormat":
        if name not in _FORMATS:
            raise UnsupportedFormatError(f"unknown sample format {name!r}")
        code, bits = _FORMATS[name]
        return cls(format_code=code, bits_per_sample=bits, sample_rate=sample_rate)


def read_wav(data: bytes) -> AudioSignal:
    """Parse a RIFF/WAVE byte string into a normalized mono signal."""
    if len(data) < 12 or data[0:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise NotRiffError("missing RIFF/WAVE signature")

    fmt = None
    pos = 12
    while pos + 8 <= len(data):
        cid = data[pos : pos + 4]
        size = struct.unpack_from("<I", data, pos + 4)[0]
        pos += 8
        if pos + size > len(data):
            raise TruncatedFileError(
                f"chunk {cid!r} declares {size} bytes but only {len(data) - pos} remain"
            )
        if cid == b"fmt ":
            if size < 16:
                raise TruncatedFileError(f"fmt chunk of {size} bytes is too small")
            fmt = struct.unpack_from("<HHIIHH", data, pos)
        elif cid == b"data":
            if fmt is None:
                raise NotRiffError("data chunk appears before fmt chunk")
            return _decode_samples(fmt, data[pos : pos + size])
        pos += size + (size & 1)
    raise TruncatedFileError("no fmt chunk found" if fmt is None else "no data chunk found")


def _decode_samples(fmt, payload: bytes) -> AudioSignal:
    format_code, channels, sample_rate, _byte_rate, _block_align, bits = fmt
    if channels != 1:
        raise UnsupportedChannelCountError(f"only mono supported, got {channels} channels")
    if (format_code, bits) not in _NAMES:
        raise UnsupportedFormatError(
            f"unsupported format code {format_code} at {bits} bits"
        )
    if sample_rate <= 0:
        raise UnsupportedFormatError("sample rate must be positive")
    width = bits // 8
    if len(payload) % width != 0:
        raise TruncatedFileError(
            f"data chunk of {len(payload)} bytes is not a multiple of the {width}-byte sample size"
        )
    name = _NAMES[(format_code, bits)]
    if name == PCM16:
        samples = np.frombuffer(payload, dtype="<i2").astype(np.float64) / _PCM16_SCALE
    elif name == FLOAT32:
        samples = np.frombuffer(payload, dtype="<f4").astype(np.float64)
    else:
        samples = np.frombuffer(payload, dtype="<f8").astype(np.float64)
    return AudioSignal(samples=samples, sample_rate=sample_rate, source_format=name)


def _encode_samples(sig: AudioSignal, fmt: WavFormat) -> bytes:
    if fmt.name == PCM16:
        clipped = np.clip(sig.samples, -1.0, 32767.0 / _PCM16_SCALE)
        ints = np.clip(np.rint(clipped * _PCM16_SCALE), -32768, 32767).astype("<i2")
        return ints.tobytes()
    if fmt.name == FLOAT32:
        return sig.samples.astype("<f4").tobytes()
    return sig.samples.astype("<f8").tobytes()


def write_wav(sig: AudioSignal, fmt: WavFormat) -> bytes:
    """Serialize to a minimal canonical RIFF/WAVE (fmt + data, little-endian)."""
    if len(sig) == 0:
        raise EmptySignalError("refusing to write a WAV with zero samples")
    payload = _encode_samples(sig, fmt)
    block_align = fmt.bits_per_sample // 8 * fmt.channels
    byte_rate = fmt.sample_rate * block_align
    riff_size = 4 + 8 + 16 + 8 + len(payload)
    if riff_size > _MAX_RIFF:
        raise UnsupportedFormatError("output would exceed the 4 GiB RIFF limit")
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF",
        riff_size,
        b"WAVE",
        b"fmt ",
        16,
        fmt.format_code,
        fmt.channels,
        fmt.sample_rate,
        byte_rate,
        block_align,
        fmt.bits_per_sample,
        b"data",
        len(payload),
    )
    return header + payload
