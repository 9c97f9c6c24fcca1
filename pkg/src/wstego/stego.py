"""Embedding and extraction: chunks live in coefficient decimal digits.

A chunk d in [0, 999] replaces the fractional part of a coefficient with
(d + 0.5) / 1000, keeping sign and integer part. The first three decimal
digits of the magnitude then spell the chunk, and the 0.5 centering leaves
a symmetric +/- 5e-4 noise margin before a read returns the wrong value.
Every embed run re-extracts from the produced signal and fails loudly on
any mismatch, so margin violations can never surface later as silent
corruption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .codec import decode_payload, encode_payload
from .dwt import get_wavelet, wavedec, waverec
from .errors import ChunkOutOfRangeError, IntegrityError, SelfCheckFailedError, StegoError
from .key import StegoKey, capacity_bytes, plan_positions
from .wavio import FLOAT64, AudioSignal


@dataclass(frozen=True)
class EmbedReport:
    """What an embed run changed and how much signal energy it moved."""

    modified_count: int
    capacity_bytes: int
    payload_bytes: int
    coeff_l2_delta: float
    predicted_audio_l2_delta: float


def embed_chunk(coefficient: float, value: int) -> float:
    """Write ``value`` into the first three decimal digits of a coefficient.

    Returns sign(c) * (floor(|c|) + (value + 0.5) / 1000); the result moves
    by strictly less than 1. A sign of -0.0 counts as positive.
    """
    if not 0 <= value <= 999:
        raise ChunkOutOfRangeError(f"chunk value {value} outside 0..999")
    magnitude = math.floor(abs(coefficient)) + (value + 0.5) / 1000.0
    return -magnitude if coefficient < 0 else magnitude


def extract_chunk(coefficient: float) -> int:
    """Read the three leading decimal digits of the coefficient's fraction."""
    a = abs(coefficient)
    return min(max(int((a - math.floor(a)) * 1000.0), 0), 999)


def embed(cover: AudioSignal, key: StegoKey, payload: bytes) -> tuple[AudioSignal, EmbedReport]:
    """Hide ``payload`` in ``cover`` at the key's positions.

    Pipeline: decompose, frame the payload into chunks, resolve positions,
    rewrite those coefficients, reconstruct (re-attaching any untransformed
    tail), then self-verify by running :func:`extract` on the result.
    """
    w = get_wavelet(key.wavelet)
    d = wavedec(cover.samples, w, key.levels)
    chunks = encode_payload(payload)
    cap = capacity_bytes(key, d.lengths)
    plan = plan_positions(key, d.lengths, len(chunks))
    coeffs = d.coeffs.copy()
    for pos, value in zip(plan.positions, chunks):
        coeffs[pos] = embed_chunk(coeffs[pos], value)
    delta = float(np.linalg.norm(coeffs - d.coeffs))
    samples = waverec(replace(d, coeffs=coeffs), w)
    stego = AudioSignal(samples=samples, sample_rate=cover.sample_rate, source_format=FLOAT64)

    try:
        recovered = extract(stego, key)
    except StegoError as exc:
        raise SelfCheckFailedError(f"post-embed extraction failed: {exc}") from exc
    if recovered != payload:
        raise SelfCheckFailedError(
            "post-embed extraction returned different bytes; numerical margin violated"
        )

    report = EmbedReport(
        modified_count=len(chunks),
        capacity_bytes=cap,
        payload_bytes=len(payload),
        coeff_l2_delta=delta,
        predicted_audio_l2_delta=delta,
    )
    return stego, report


def extract(stego: AudioSignal, key: StegoKey) -> bytes:
    """Recover the payload from a stego signal using the same key.

    Reads the 2-chunk length header from the first entry's first slots,
    plans positions for the full stream, then decodes it. Raises
    :class:`IntegrityError` for anything that is not a valid stream (wrong
    key, wrong file, damaged digits).
    """
    w = get_wavelet(key.wavelet)
    d = wavedec(stego.samples, w, key.levels)
    header = plan_positions(key, d.lengths, 2)
    hi, lo = (extract_chunk(d.coeffs[p]) for p in header.positions)
    if hi > 255 or lo > 255:
        raise IntegrityError(f"header chunks ({hi}, {lo}) outside 0..255")
    n = (hi << 8) | lo
    plan = plan_positions(key, d.lengths, n + 2)
    return decode_payload(extract_chunk(d.coeffs[p]) for p in plan.positions)
