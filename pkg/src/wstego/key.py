"""Stego-key model: where chunks go inside a decomposition.

A key names a wavelet, a level count, and one entry per target subband.
Each entry is (subband, start offset, alphanumeric password). The password
drives placement: the first slot sits at ``start`` and every character
advances the cursor by its step value (rank in 0-9A-Za-z, plus one), so an
entry with a k-character password offers k+1 chunk slots. Entries are
filled greedily in key order; the 2-chunk length header therefore always
lands in the first entry's first two slots.

Key file format (UTF-8, line oriented, ``#`` starts a comment)::

    WSTEGO-KEY v1
    wavelet: db4
    levels: 3
    entry: level=D3 start=11 password=x7Qm2
    entry: level=D1 start=40 password=Tx90ab1C

Subband labels are ``A`` (approximation at the deepest level) or ``D1``
through ``DJ``. Start offsets are subband-local, so a key is portable
across covers of different lengths.
"""

from __future__ import annotations

import random
import re
import string
from dataclasses import dataclass

from .dwt import bookkeeping, get_wavelet, subband_ranges
from .errors import (
    BadLevelReferenceError,
    CapacityExceededError,
    DuplicateSubbandError,
    InvalidKeyCharacterError,
    KeySyntaxError,
    PositionOutOfSubbandError,
)

KEY_MAGIC = "WSTEGO-KEY v1"
KEY_VERSION = "v1"

PASSWORD_ALPHABET = string.digits + string.ascii_uppercase + string.ascii_lowercase
_STEP = {c: i + 1 for i, c in enumerate(PASSWORD_ALPHABET)}

_SUBBAND_RE = re.compile(r"^(A|D[1-9][0-9]*)$")
_PASSWORD_RE = re.compile(r"^[0-9A-Za-z]+$")


def step_of(c: str) -> int:
    """Stride contributed by one password character: 1 for '0' up to 62 for 'z'."""
    step = _STEP.get(c)
    if step is None or len(c) != 1:
        raise InvalidKeyCharacterError(f"password characters must be [0-9A-Za-z], got {c!r}")
    return step


@dataclass(frozen=True)
class KeyEntry:
    subband: str
    start: int
    password: str

    def __post_init__(self):
        if not _SUBBAND_RE.match(self.subband):
            raise BadLevelReferenceError(f"unknown subband label {self.subband!r}")
        if self.start < 0:
            raise ValueError(f"start offset must be >= 0, got {self.start}")
        if not self.password or not _PASSWORD_RE.match(self.password):
            raise InvalidKeyCharacterError(
                f"password must be a non-empty alphanumeric string, got {self.password!r}"
            )

    def offsets(self) -> list[int]:
        """Subband-local slot offsets: start, then one step per character."""
        offs = [self.start]
        for c in self.password:
            offs.append(offs[-1] + _STEP[c])
        return offs

    @property
    def slots(self) -> int:
        return len(self.password) + 1


@dataclass(frozen=True)
class StegoKey:
    wavelet: str
    levels: int
    entries: tuple[KeyEntry, ...]
    version: str = KEY_VERSION

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        get_wavelet(self.wavelet)
        if self.levels < 1:
            raise ValueError(f"levels must be >= 1, got {self.levels}")
        if not self.entries:
            raise KeySyntaxError("key must contain at least one entry")
        seen = set()
        for e in self.entries:
            if e.subband in seen:
                raise DuplicateSubbandError(f"subband {e.subband} appears twice")
            seen.add(e.subband)
            if e.subband != "A" and int(e.subband[1:]) > self.levels:
                raise BadLevelReferenceError(
                    f"entry references {e.subband} but key has levels: {self.levels}"
                )


@dataclass(frozen=True)
class EmbeddingPlan:
    """Resolved global coefficient indices, in embedding order."""

    positions: tuple[int, ...]
    per_entry_counts: tuple[int, ...]


def _entry_chains(key: StegoKey, lengths) -> list[tuple[KeyEntry, int, list[int]]]:
    # Validates every entry's full chain against the subband bounds, whether
    # or not the chunks at hand reach it; keeps plan/capacity consistent.
    if len(lengths) - 2 != key.levels:
        raise BadLevelReferenceError(
            f"key declares levels: {key.levels} but bookkeeping has {len(lengths) - 2}"
        )
    ranges = subband_ranges(lengths)
    chains = []
    for e in key.entries:
        if e.subband not in ranges:
            raise BadLevelReferenceError(
                f"entry references {e.subband} but decomposition has {len(lengths) - 2} levels"
            )
        base, stop = ranges[e.subband]
        sub_len = stop - base
        offs = e.offsets()
        if offs[-1] >= sub_len or e.start >= sub_len:
            raise PositionOutOfSubbandError(
                f"entry {e.subband}: offset {max(offs)} outside subband of length {sub_len}"
            )
        chains.append((e, base, offs))
    return chains


def plan_positions(key: StegoKey, lengths, chunks_needed: int) -> EmbeddingPlan:
    """Allocate ``chunks_needed`` slots greedily in key order.

    ``lengths`` is the decomposition bookkeeping vector. Positions are
    global indices into the flat coefficient vector.
    """
    if chunks_needed < 0:
        raise ValueError("chunks_needed must be >= 0")
    chains = _entry_chains(key, lengths)
    total = sum(len(offs) for _, _, offs in chains)
    if chunks_needed > total:
        raise CapacityExceededError(
            f"need {chunks_needed} chunk slots but key offers {total}"
        )
    positions: list[int] = []
    counts: list[int] = []
    remaining = chunks_needed
    for _, base, offs in chains:
        take = min(remaining, len(offs))
        positions.extend(base + o for o in offs[:take])
        counts.append(take)
        remaining -= take
    return EmbeddingPlan(positions=tuple(positions), per_entry_counts=tuple(counts))


def capacity_bytes(key: StegoKey, lengths) -> int:
    """Payload bytes this (key, cover) pair can carry: slots minus the header."""
    chains = _entry_chains(key, lengths)
    total = sum(len(offs) for _, _, offs in chains)
    return max(0, total - 2)


def parse_key(text: str) -> StegoKey:
    """Parse the WSTEGO-KEY v1 text format; see the module docstring."""
    wavelet: str | None = None
    levels: int | None = None
    entries: list[KeyEntry] = []
    saw_magic = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if not saw_magic:
            if line.strip() != KEY_MAGIC:
                raise KeySyntaxError(f"expected header {KEY_MAGIC!r}", lineno, 1)
            saw_magic = True
            continue
        stripped = line.strip()
        if stripped.startswith("wavelet:"):
            if wavelet is not None:
                raise KeySyntaxError("duplicate wavelet directive", lineno, 1)
            wavelet = stripped[len("wavelet:") :].strip()
            if not wavelet:
                raise KeySyntaxError("empty wavelet name", lineno, len(line) + 1)
        elif stripped.startswith("levels:"):
            if levels is not None:
                raise KeySyntaxError("duplicate levels directive", lineno, 1)
            value = stripped[len("levels:") :].strip()
            if not value.isdigit() or int(value) < 1:
                raise KeySyntaxError(
                    f"levels must be a positive integer, got {value!r}",
                    lineno,
                    line.find(value) + 1 if value else len(line) + 1,
                )
            levels = int(value)
        elif stripped.startswith("entry:"):
            entries.append(_parse_entry(stripped[len("entry:") :], raw, lineno))
        else:
            raise KeySyntaxError(f"unrecognized line {stripped!r}", lineno, 1)
    if not saw_magic:
        raise KeySyntaxError(f"missing {KEY_MAGIC!r} header")
    if wavelet is None:
        raise KeySyntaxError("missing wavelet directive")
    if levels is None:
        raise KeySyntaxError("missing levels directive")
    if not entries:
        raise KeySyntaxError("key must contain at least one entry")
    get_wavelet(wavelet)
    return StegoKey(wavelet=wavelet, levels=levels, entries=tuple(entries))


_ENTRY_RE = re.compile(
    r"^\s*level=(?P<level>\S+)\s+start=(?P<start>\S+)\s+password=(?P<password>\S+)\s*$"
)


def _parse_entry(body: str, raw_line: str, lineno: int) -> KeyEntry:
    m = _ENTRY_RE.match(body)
    if not m:
        raise KeySyntaxError(
            "entry must be 'entry: level=<A|D1..DJ> start=<int> password=<alnum>'", lineno, 1
        )

    def col(field: str, token: str) -> int:
        found = raw_line.find(f"{field}={token}")
        return found + len(field) + 2 if found >= 0 else 1

    level = m.group("level")
    if not _SUBBAND_RE.match(level):
        raise KeySyntaxError(f"bad subband label {level!r}", lineno, col("level", level))
    start_tok = m.group("start")
    if not start_tok.isdigit():
        raise KeySyntaxError(
            f"start must be a non-negative integer, got {start_tok!r}",
            lineno,
            col("start", start_tok),
        )
    password = m.group("password")
    bad = _first_bad_char(password)
    if bad is not None:
        raise KeySyntaxError(
            f"password character {password[bad]!r} is not alphanumeric",
            lineno,
            col("password", password) + bad,
        )
    return KeyEntry(subband=level, start=int(start_tok), password=password)


def _first_bad_char(password: str) -> int | None:
    for i, c in enumerate(password):
        if c not in _STEP:
            return i
    return None


def serialize_key(key: StegoKey) -> str:
    """Canonical text form; ``parse_key(serialize_key(k)) == k``."""
    lines = [KEY_MAGIC, f"wavelet: {key.wavelet}", f"levels: {key.levels}"]
    lines.extend(
        f"entry: level={e.subband} start={e.start} password={e.password}" for e in key.entries
    )
    return "\n".join(lines) + "\n"


NOMINAL_COVER_SAMPLES = 8000  # 1 second at 8 kHz


def generate_key(
    rng: random.Random,
    wavelet: str,
    levels: int,
    requests: list[tuple[str, int]],
    cover_samples: int = NOMINAL_COVER_SAMPLES,
) -> StegoKey:
    """Draw a random key whose entries fit a cover of ``cover_samples``.

    ``requests`` lists (subband, password_length) pairs. Start offsets are
    drawn from the first half of each subband, then clamped so that even the
    largest password strides stay inside it.
    """
    get_wavelet(wavelet)
    lengths = bookkeeping(cover_samples, levels)
    ranges = subband_ranges(lengths)
    entries = []
    for subband, pw_len in requests:
        if subband not in ranges:
            raise BadLevelReferenceError(
                f"subband {subband} does not exist with levels: {levels}"
            )
        if pw_len < 1:
            raise ValueError(f"password length must be >= 1, got {pw_len}")
        base, stop = ranges[subband]
        sub_len = stop - base
        if pw_len + 1 > sub_len:
            raise CapacityExceededError(
                f"password of {pw_len} characters cannot fit subband {subband} "
                f"({sub_len} coefficients) of a {cover_samples}-sample cover"
            )
        start = rng.randrange(max(1, sub_len // 2))
        start = min(start, sub_len - 1 - pw_len)
        max_step = min(len(PASSWORD_ALPHABET), max(1, (sub_len - 1 - start) // pw_len))
        password = "".join(rng.choice(PASSWORD_ALPHABET[:max_step]) for _ in range(pw_len))
        entries.append(KeyEntry(subband=subband, start=start, password=password))
    return StegoKey(wavelet=wavelet, levels=levels, entries=tuple(entries))
