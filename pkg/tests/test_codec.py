"""Payload framing tests."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wstego import (
    MAX_PAYLOAD_BYTES,
    IntegrityError,
    PayloadTooLongError,
    decode_payload,
    encode_payload,
)


def test_single_byte():
    assert encode_payload(b"A") == [0, 1, 65]


def test_empty():
    assert encode_payload(b"") == [0, 0]


def test_two_bytes():
    assert encode_payload(b"Hi") == [0, 2, 72, 105]


def test_decode_examples():
    assert decode_payload([0, 1, 65]) == b"A"
    assert decode_payload([0, 0]) == b""


def test_chunk_above_255_rejected():
    with pytest.raises(IntegrityError):
        decode_payload([0, 1, 467])


def test_negative_chunk_rejected():
    with pytest.raises(IntegrityError):
        decode_payload([0, 1, -3])


def test_header_longer_than_stream():
    with pytest.raises(IntegrityError):
        decode_payload([0, 5, 65, 66])


def test_short_header():
    with pytest.raises(IntegrityError):
        decode_payload([0])
    with pytest.raises(IntegrityError):
        decode_payload([])


def test_header_chunk_above_255():
    with pytest.raises(IntegrityError):
        decode_payload([300, 0])


def test_extra_chunks_ignored():
    assert decode_payload([0, 1, 65, 999, 999]) == b"A"


def test_max_length_round_trip():
    payload = (bytes(range(256)) * 256)[:-1]
    assert len(payload) == MAX_PAYLOAD_BYTES
    chunks = encode_payload(payload)
    assert len(chunks) == MAX_PAYLOAD_BYTES + 2
    assert chunks[0] == 255 and chunks[1] == 255
    assert decode_payload(chunks) == payload


def test_payload_too_long():
    with pytest.raises(PayloadTooLongError):
        encode_payload(bytes(MAX_PAYLOAD_BYTES + 1))


@settings(max_examples=200, deadline=None)
@given(payload=st.binary(max_size=2000))
def test_round_trip(payload):
    chunks = encode_payload(payload)
    assert len(chunks) == len(payload) + 2
    assert all(0 <= c <= 255 for c in chunks)
    assert decode_payload(chunks) == payload


@settings(max_examples=100, deadline=None)
@given(payload=st.binary(max_size=200))
def test_decode_consumes_lazily(payload):
    # decoding reads exactly header + declared length, nothing more
    chunks = iter(encode_payload(payload) + [777])
    assert decode_payload(chunks) == payload
    assert next(chunks) == 777
