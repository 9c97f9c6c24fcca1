"""Command-line front end: embed, extract, capacity, keygen, inspect.

Exit codes: 0 success, 1 usage or unexpected error, 2 capacity/fit errors,
3 key errors, 4 I/O or format errors, 5 embed self-check failure,
6 extraction integrity failure. Every domain error prints one line to
stderr of the form ``ERROR code=<CODE> message="..."``. Successful embed,
extract and inspect runs print a final machine-readable line starting with
``RESULT `` holding space-separated key=value pairs.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .dwt import WAVELET_NAMES, bookkeeping
from .errors import (
    BadLevelReferenceError,
    CapacityExceededError,
    DuplicateSubbandError,
    IntegrityError,
    InvalidKeyCharacterError,
    InvalidWaveletError,
    KeySyntaxError,
    PayloadTooLongError,
    PositionOutOfSubbandError,
    SelfCheckFailedError,
    StegoError,
    TooManyLevelsError,
    UnknownWaveletError,
    ZeroReferenceError,
)
from .key import capacity_bytes, generate_key, parse_key, serialize_key
from .metrics import snr_db
from .stego import embed, extract
from .wavio import FLOAT32, FLOAT64, WavFormat, read_wav, write_wav

_KEY_ERRORS = (
    KeySyntaxError,
    UnknownWaveletError,
    InvalidWaveletError,
    DuplicateSubbandError,
    BadLevelReferenceError,
    InvalidKeyCharacterError,
)
_CAPACITY_ERRORS = (
    CapacityExceededError,
    PositionOutOfSubbandError,
    PayloadTooLongError,
    TooManyLevelsError,
)


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, IntegrityError):
        return 6
    if isinstance(exc, SelfCheckFailedError):
        return 5
    if isinstance(exc, _KEY_ERRORS):
        return 3
    if isinstance(exc, _CAPACITY_ERRORS):
        return 2
    return 4


def _error_line(code: str, message: str) -> str:
    clean = " ".join(str(message).split()).replace('"', "'")
    return f'ERROR code={code} message="{clean}"'


class _Parser(argparse.ArgumentParser):
    # keep exit code 2 reserved for capacity errors; usage problems exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(_error_line("USAGE", message), file=sys.stderr)
        raise SystemExit(1)


def _read_cover(path: str):
    return read_wav(Path(path).read_bytes())


def _read_key(path: str):
    try:
        text = Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise KeySyntaxError(f"key file is not valid UTF-8: {exc}") from exc
    return parse_key(text)


def _fmt_float(value: float) -> str:
    return repr(float(value))


def cmd_embed(args) -> int:
    cover = _read_cover(args.cover)
    key = _read_key(args.key)
    payload = Path(args.message).read_bytes()
    stego, report = embed(cover, key, payload)
    try:
        snr = snr_db(cover, stego).snr_db
    except ZeroReferenceError:
        snr = float("nan")
    fmt = WavFormat.from_name(args.format, cover.sample_rate)
    Path(args.out).write_bytes(write_wav(stego, fmt))
    print(f"capacity: {report.capacity_bytes} bytes")
    print(f"payload: {report.payload_bytes} bytes")
    print(f"modified coefficients: {report.modified_count}")
    print(f"coefficient L2 delta: {report.coeff_l2_delta:.6e}")
    print(f"snr vs cover: {snr:.2f} dB")
    print(f"wrote stego: {args.out} ({args.format}, {stego.sample_rate} Hz, {len(stego)} samples)")
    print(
        "RESULT command=embed"
        f" capacity_bytes={report.capacity_bytes}"
        f" payload_bytes={report.payload_bytes}"
        f" modified_coeffs={report.modified_count}"
        f" coeff_l2_delta={_fmt_float(report.coeff_l2_delta)}"
        f" predicted_audio_l2_delta={_fmt_float(report.predicted_audio_l2_delta)}"
        f" snr_db={_fmt_float(snr)}"
        f" stego_format={args.format}"
        f" out={args.out}"
    )
    return 0


def cmd_extract(args) -> int:
    stego = _read_cover(args.stego)
    key = _read_key(args.key)
    payload = extract(stego, key)
    Path(args.out).write_bytes(payload)
    print(f"recovered {len(payload)} bytes to {args.out}")
    print(f"RESULT command=extract payload_bytes={len(payload)} out={args.out}")
    return 0


def cmd_capacity(args) -> int:
    cover = _read_cover(args.cover)
    key = _read_key(args.key)
    lengths = bookkeeping(len(cover), key.levels)
    print(capacity_bytes(key, lengths))
    return 0


def cmd_keygen(args) -> int:
    if not 1 <= args.levels <= 10:
        print(_error_line("BAD_LEVELS", f"levels must be in 1..10, got {args.levels}"), file=sys.stderr)
        return 3
    rng = random.Random(args.seed)
    key = generate_key(rng, args.wavelet, args.levels, args.entry)
    text = serialize_key(key)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        total = sum(len(e.password) + 1 for e in key.entries)
        print(f"wrote key: {args.out} ({len(key.entries)} entries, {max(0, total - 2)} payload bytes"
              " on the nominal 8 kHz cover)")
        print(f"RESULT command=keygen entries={len(key.entries)} out={args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_inspect(args) -> int:
    cover = _read_cover(args.cover)
    stego = _read_cover(args.stego)
    report = snr_db(cover, stego)
    print(f"snr: {report.snr_db:.2f} dB" if report.snr_db != float("inf") else "snr: inf dB")
    print(f"max abs diff: {report.max_abs_diff:.6e}")
    print(f"rms diff: {report.rms_diff:.6e}")
    print(f"samples compared: {report.samples_compared}")
    print(
        "RESULT command=inspect"
        f" snr_db={_fmt_float(report.snr_db)}"
        f" max_abs_diff={_fmt_float(report.max_abs_diff)}"
        f" rms_diff={_fmt_float(report.rms_diff)}"
        f" samples_compared={report.samples_compared}"
    )
    return 0


def _entry_request(text: str) -> tuple[str, int]:
    subband, eq, length = text.partition("=")
    if not eq or not length.isdigit() or int(length) < 1:
        raise argparse.ArgumentTypeError(
            f"expected SUBBAND=PASSWORD_LENGTH (e.g. D1=16), got {text!r}"
        )
    return subband, int(length)


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wstego", description="Wavelet-domain steganography for mono WAV audio.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="hide a message file inside a cover WAV")
    p.add_argument("--cover", required=True, help="cover WAV (mono; pcm16/float32/float64)")
    p.add_argument("--key", required=True, help="stego-key file")
    p.add_argument("--message", required=True, help="payload file (opaque bytes; encrypt beforehand)")
    p.add_argument("--out", required=True, help="output stego WAV path")
    p.add_argument(
        "--format",
        choices=[FLOAT64, FLOAT32],
        default=FLOAT64,
        help="stego sample format (16-bit PCM would destroy the embedded digits)",
    )
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover the message from a stego WAV")
    p.add_argument("--stego", required=True, help="stego WAV produced by embed")
    p.add_argument("--key", required=True, help="stego-key file")
    p.add_argument("--out", required=True, help="where to write the recovered bytes")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("capacity", help="print payload capacity in bytes for a (cover, key) pair")
    p.add_argument("--cover", required=True)
    p.add_argument("--key", required=True)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("keygen", help="generate a random stego-key file")
    p.add_argument("--wavelet", default="db4", help=f"one of: {', '.join(WAVELET_NAMES)}")
    p.add_argument("--levels", type=int, default=3, help="decomposition depth (1..10)")
    p.add_argument(
        "--entry",
        action="append",
        required=True,
        type=_entry_request,
        metavar="SUBBAND=LEN",
        help="subband and password length, e.g. D1=16; repeatable",
    )
    p.add_argument("--seed", type=_nonneg_int, default=None, help="RNG seed for reproducible keys")
    p.add_argument("--out", help="key file path (prints to stdout when omitted)")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("inspect", help="report cover-vs-stego distortion")
    p.add_argument("--cover", required=True)
    p.add_argument("--stego", required=True)
    p.set_defaults(func=cmd_inspect)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StegoError as exc:
        print(_error_line(exc.code, str(exc)), file=sys.stderr)
        return _exit_code(exc)
    except OSError as exc:
        print(_error_line("IO_ERROR", str(exc)), file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
