"""Framing between byte payloads and the 3-digit chunk stream.

One chunk is an integer in [0, 999], the value written into three decimal
digits of a coefficient. Valid streams only ever contain values <= 255: a
2-chunk big-endian byte-length header followed by one chunk per payload
byte. Values 256..999 are impossible in a well-formed stream, which is what
lets :func:`decode_payload` detect wrong keys and damaged audio.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import IntegrityError, PayloadTooLongError

MAX_PAYLOAD_BYTES = 0xFFFF
HEADER_CHUNKS = 2


def encode_payload(payload: bytes) -> list[int]:
    """Frame ``payload`` as chunks: [len >> 8, len & 255, *payload]."""
    n = len(payload)
    if n > MAX_PAYLOAD_BYTES:
        raise PayloadTooLongError(f"payload of {n} bytes exceeds the {MAX_PAYLOAD_BYTES}-byte limit")
    return [n >> 8, n & 0xFF, *payload]


def _next_chunk(it: Iterator[int], what: str) -> int:
    try:
        value = int(next(it))
    except StopIteration:
        raise IntegrityError(f"chunk stream ended while reading {what}") from None
    if not 0 <= value <= 255:
        raise IntegrityError(f"{what} chunk {value} is outside 0..255")
    return value


def decode_payload(chunks: Iterable[int]) -> bytes:
    """Read the length header, then exactly that many body chunks.

    Raises :class:`IntegrityError` when a chunk exceeds 255 or the stream is
    shorter than the header claims; both signal a wrong key, the wrong audio
    file, or corrupted coefficient digits.
    """
    it = iter(chunks)
    hi = _next_chunk(it, "header")
    lo = _next_chunk(it, "header")
    n = (hi << 8) | lo
    return bytes(_next_chunk(it, f"body[{i}]") for i in range(n))
