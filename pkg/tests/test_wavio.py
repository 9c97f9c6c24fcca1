"""WAV container tests: normalization fixed points, bit-exact round trips,
chunk handling, and the error taxonomy."""

import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wstego import (
    AudioSignal,
    EmptySignalError,
    NotRiffError,
    TruncatedFileError,
    UnsupportedChannelCountError,
    UnsupportedFormatError,
    WavFormat,
    read_wav,
    write_wav,
)


def raw_wav(format_code, channels, rate, bits, payload, pre_data_chunks=(), fmt_first=True):
    """Hand-rolled WAV bytes so tests control every header field."""
    block_align = bits // 8 * channels
    fmt = b"fmt " + struct.pack(
        "<IHHIIHH", 16, format_code, channels, rate, rate * block_align, block_align, bits
    )
    data = b"data" + struct.pack("<I", len(payload)) + payload
    middle = b"".join(pre_data_chunks)
    body = (fmt + middle + data) if fmt_first else (data + fmt)
    return b"RIFF" + struct.pack("<I", 4 + len(body)) + b"WAVE" + body


def chunk(cid: bytes, payload: bytes) -> bytes:
    pad = b"\x00" if len(payload) % 2 else b""
    return cid + struct.pack("<I", len(payload)) + payload + pad


class TestRead:
    def test_pcm16_normalization_fixed_points(self):
        payload = struct.pack("<4h", 32767, -32768, 0, 16384)
        sig = read_wav(raw_wav(1, 1, 8000, 16, payload))
        np.testing.assert_array_equal(
            sig.samples, [32767 / 32768, -1.0, 0.0, 0.5]
        )
        assert sig.samples[0] == 0.999969482421875
        assert sig.sample_rate == 8000
        assert sig.source_format == "pcm16"

    def test_float32_widened(self):
        payload = np.array([0.25, -0.5], dtype="<f4").tobytes()
        sig = read_wav(raw_wav(3, 1, 44100, 32, payload))
        np.testing.assert_array_equal(sig.samples, [0.25, -0.5])
        assert sig.source_format == "float32"

    def test_float64_verbatim(self):
        x = np.array([0.1, -0.7, 0.3333333333333333])
        sig = read_wav(raw_wav(3, 1, 16000, 64, x.astype("<f8").tobytes()))
        np.testing.assert_array_equal(sig.samples, x)

    def test_unknown_chunks_skipped(self):
        payload = struct.pack("<2h", 100, -100)
        extra = (chunk(b"LIST", b"INFOsomething"), chunk(b"junk", b"\x01\x02\x03"))
        sig = read_wav(raw_wav(1, 1, 8000, 16, payload, pre_data_chunks=extra))
        assert sig.samples.size == 2

    def test_stereo_rejected(self):
        payload = struct.pack("<4h", 1, 2, 3, 4)
        with pytest.raises(UnsupportedChannelCountError):
            read_wav(raw_wav(1, 2, 8000, 16, payload))

    def test_unsupported_format_code(self):
        with pytest.raises(UnsupportedFormatError):
            read_wav(raw_wav(2, 1, 8000, 16, b"\x00\x00"))

    def test_unsupported_bit_depths(self):
        with pytest.raises(UnsupportedFormatError):
            read_wav(raw_wav(1, 1, 8000, 8, b"\x00"))
        with pytest.raises(UnsupportedFormatError):
            read_wav(raw_wav(3, 1, 8000, 16, b"\x00\x00"))

    def test_not_riff(self):
        with pytest.raises(NotRiffError):
            read_wav(b"OggS" + b"\x00" * 40)
        with pytest.raises(NotRiffError):
            read_wav(b"RIFF\x00\x00\x00\x00AVI " + b"\x00" * 16)
        with pytest.raises(NotRiffError):
            read_wav(b"RI")

    def test_data_before_fmt(self):
        with pytest.raises(NotRiffError):
            read_wav(raw_wav(1, 1, 8000, 16, b"\x00\x00", fmt_first=False))

    def test_truncated_data_chunk(self):
        good = raw_wav(1, 1, 8000, 16, struct.pack("<4h", 1, 2, 3, 4))
        with pytest.raises(TruncatedFileError):
            read_wav(good[:-3])

    def test_partial_sample(self):
        # 3 bytes of 16-bit data: declared size not a sample multiple
        blob = raw_wav(1, 1, 8000, 16, b"\x00\x00\x00")
        with pytest.raises(TruncatedFileError):
            read_wav(blob)

    def test_missing_data_chunk(self):
        blob = raw_wav(1, 1, 8000, 16, b"")
        with pytest.raises(TruncatedFileError):
            read_wav(blob[: len(blob) - 8])

    def test_zero_sample_rate(self):
        with pytest.raises(UnsupportedFormatError):
            read_wav(raw_wav(1, 1, 0, 16, b"\x00\x00"))


class TestWrite:
    def test_pcm16_quantization(self):
        sig = AudioSignal(np.array([0.5, 1.0, -1.0, -2.0, 0.0]), 8000)
        blob = write_wav(sig, WavFormat.from_name("pcm16", 8000))
        stored = np.frombuffer(blob[-10:], dtype="<i2")
        np.testing.assert_array_equal(stored, [16384, 32767, -32768, -32768, 0])

    def test_float64_round_trip_bit_exact(self):
        x = np.random.default_rng(5).uniform(-1, 1, 777)
        sig = AudioSignal(x, 48000)
        back = read_wav(write_wav(sig, WavFormat.from_name("float64", 48000)))
        np.testing.assert_array_equal(back.samples, x)
        assert back.sample_rate == 48000

    def test_float32_error_bound(self):
        x = np.random.default_rng(6).uniform(-1, 1, 1000)
        back = read_wav(write_wav(AudioSignal(x, 8000), WavFormat.from_name("float32", 8000)))
        assert np.max(np.abs(back.samples - x)) <= 2.0**-24 * np.max(np.abs(x))

    def test_declared_sizes_match_actual(self):
        x = np.random.default_rng(7).uniform(-1, 1, 123)
        blob = write_wav(AudioSignal(x, 8000), WavFormat.from_name("float64", 8000))
        riff_size = struct.unpack_from("<I", blob, 4)[0]
        assert riff_size == len(blob) - 8
        data_size = struct.unpack_from("<I", blob, 40)[0]
        assert blob[36:40] == b"data"
        assert data_size == 123 * 8 == len(blob) - 44

    def test_empty_signal_refused(self):
        with pytest.raises(EmptySignalError):
            write_wav(AudioSignal(np.empty(0), 8000), WavFormat.from_name("pcm16", 8000))

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 2000))
    def test_float64_round_trip_property(self, seed, n):
        x = np.random.default_rng(seed).uniform(-4, 4, n)
        back = read_wav(write_wav(AudioSignal(x, 44100), WavFormat.from_name("float64", 44100)))
        np.testing.assert_array_equal(back.samples, x)


class TestTypes:
    def test_wav_format_validation(self):
        with pytest.raises(UnsupportedChannelCountError):
            WavFormat(format_code=1, bits_per_sample=16, sample_rate=8000, channels=2)
        with pytest.raises(UnsupportedFormatError):
            WavFormat(format_code=1, bits_per_sample=32, sample_rate=8000)
        with pytest.raises(UnsupportedFormatError):
            WavFormat.from_name("pcm24", 8000)
        with pytest.raises(UnsupportedFormatError):
            WavFormat.from_name("pcm16", 0)

    def test_audio_signal_validation(self):
        with pytest.raises(ValueError):
            AudioSignal(np.zeros((2, 4)), 8000)
        with pytest.raises(ValueError):
            AudioSignal(np.zeros(4), 0)
        with pytest.raises(ValueError):
            AudioSignal(np.zeros(4), 8000, source_format="mp3")

    def test_len(self):
        assert len(AudioSignal(np.zeros(5), 8000)) == 5
