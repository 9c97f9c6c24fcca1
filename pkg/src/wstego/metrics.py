"""Cover-versus-stego distortion measurements."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError, RateMismatchError, ZeroReferenceError
from .wavio import AudioSignal


@dataclass(frozen=True)
class DistortionReport:
    snr_db: float  # math.inf when the signals are identical
    max_abs_diff: float
    rms_diff: float
    samples_compared: int


def snr_db(reference: AudioSignal, test: AudioSignal) -> DistortionReport:
    """Signal-to-noise ratio of ``test`` against ``reference``, in dB."""
    if len(reference) != len(test):
        raise LengthMismatchError(
            f"signal lengths differ: {len(reference)} vs {len(test)}"
        )
    if reference.sample_rate != test.sample_rate:
        raise RateMismatchError(
            f"sample rates differ: {reference.sample_rate} vs {test.sample_rate}"
        )
    ref = reference.samples
    diff = ref - test.samples
    signal_energy = float(np.dot(ref, ref))
    if signal_energy == 0.0:
        raise ZeroReferenceError("reference signal is all zeros; SNR undefined")
    noise_energy = float(np.dot(diff, diff))
    snr = math.inf if noise_energy == 0.0 else 10.0 * math.log10(signal_energy / noise_energy)
    return DistortionReport(
        snr_db=snr,
        max_abs_diff=float(np.max(np.abs(diff))) if diff.size else 0.0,
        rms_diff=math.sqrt(noise_energy / diff.size) if diff.size else 0.0,
        samples_compared=int(diff.size),
    )
