"""Shared builders for the test suite."""

from __future__ import annotations

import random
import subprocess
import sys

import numpy as np

from wstego import AudioSignal, StegoKey, bookkeeping, generate_key, subband_ranges

WAVELETS = ("haar", "db2", "db4")


def make_cover(np_rng: np.random.Generator, n: int, rate: int = 8000) -> AudioSignal:
    return AudioSignal(samples=np_rng.uniform(-1.0, 1.0, n), sample_rate=rate)


def random_key(
    rng: random.Random,
    cover_len: int,
    wavelet: str | None = None,
    levels: int | None = None,
    n_entries: int | None = None,
    pw_range: tuple[int, int] = (4, 40),
) -> StegoKey:
    """Draw a valid random key whose entries fit a cover of ``cover_len``."""
    wavelet = wavelet or rng.choice(WAVELETS)
    levels = levels or rng.randint(1, 4)
    ranges = subband_ranges(bookkeeping(cover_len, levels))
    labels = [lab for lab, (a, b) in ranges.items() if (b - a) > pw_range[0]]
    rng.shuffle(labels)
    n = n_entries or rng.randint(1, min(3, len(labels)))
    requests = []
    for lab in labels[:n]:
        a, b = ranges[lab]
        max_len = min(pw_range[1], (b - a) - 1)
        requests.append((lab, rng.randint(pw_range[0], max(pw_range[0], max_len))))
    return generate_key(rng, wavelet, levels, requests, cover_samples=cover_len)


def run_cli(*args, cwd=None) -> tuple[int, str, str]:
    proc = subprocess.run(
        [sys.executable, "-m", "wstego", *map(str, args)],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
    return proc.returncode, proc.stdout, proc.stderr


def result_fields(stdout: str) -> dict[str, str]:
    """Parse the final machine-readable RESULT line into a dict."""
    lines = [ln for ln in stdout.splitlines() if ln.startswith("RESULT ")]
    assert lines, f"no RESULT line in output:\n{stdout}"
    fields = {}
    for token in lines[-1][len("RESULT ") :].split():
        k, _, v = token.partition("=")
        fields[k] = v
    return fields
