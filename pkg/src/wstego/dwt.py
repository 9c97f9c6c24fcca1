"""Multilevel orthonormal discrete wavelet transform with periodized boundaries.

Conventions (normative for interoperability):

* Analysis of an even-length block ``x`` of length ``N`` with scaling filter
  ``g`` and quadrature mirror ``h[m] = (-1)^m * g[T-1-m]``::

      approx[k] = sum_m g[m] * x[(2k + m) mod N]
      detail[k] = sum_m h[m] * x[(2k + m) mod N]

  Periodization keeps the map exactly orthonormal for every even ``N``, so
  synthesis is the transpose and Parseval holds to round-off.

* A ``levels``-deep decomposition transforms only the dyadic prefix of length
  ``floor(n / 2^levels) * 2^levels``; the remaining tail samples ride along
  untouched and are re-attached by :func:`waverec`.

* Coefficient layout is one flat vector ``[A_J | D_J | D_{J-1} | ... | D_1]``
  with bookkeeping ``lengths = (len(A_J), len(D_J), ..., len(D_1), n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InconsistentBookkeepingError,
    InvalidWaveletError,
    LengthMismatchError,
    OddLengthError,
    SignalTooShortError,
    TooManyLevelsError,
    UnknownWaveletError,
)

_SQRT2 = float(np.sqrt(2.0))
_FILTER_TOL = 1e-10

# Scaling filters, lowest index first. haar and db2 have closed forms; the
# db4 taps are the minimum-phase spectral factorization rounded once to
# doubles (they reproduce Daubechies' 12-digit table and pass the
# orthonormality checks below with ~1e-16 residuals).
_DB4_TAPS = (
    0.2303778133088965,
    0.7148465705529157,
    0.6308807679298589,
    -0.027983769416859854,
    -0.18703481171909309,
    0.030841381835560764,
    0.0328830116668852,
    -0.010597401785069032,
)


@dataclass(frozen=True)
class WaveletSpec:
    """An orthonormal scaling filter; validated on construction."""

    name: str
    lowpass: np.ndarray

    def __post_init__(self):
        taps = np.asarray(self.lowpass, dtype=np.float64)
        object.__setattr__(self, "lowpass", taps)
        t = taps.size
        if t < 2 or t % 2 != 0:
            raise InvalidWaveletError(f"{self.name}: tap count must be even and >= 2, got {t}")
        if abs(taps.sum() - _SQRT2) > _FILTER_TOL:
            raise InvalidWaveletError(f"{self.name}: taps must sum to sqrt(2)")
        if abs(np.dot(taps, taps) - 1.0) > _FILTER_TOL:
            raise InvalidWaveletError(f"{self.name}: taps must have unit energy")
        for k in range(1, t // 2):
            if abs(np.dot(taps[: t - 2 * k], taps[2 * k :])) > _FILTER_TOL:
                raise InvalidWaveletError(f"{self.name}: even-shift orthogonality fails at lag {2 * k}")

    @property
    def highpass(self) -> np.ndarray:
        """Quadrature mirror filter h[m] = (-1)^m * g[T-1-m]."""
        g = self.lowpass
        signs = np.where(np.arange(g.size) % 2 == 0, 1.0, -1.0)
        return signs * g[::-1]


def _builtin_specs() -> dict[str, WaveletSpec]:
    s3 = np.sqrt(3.0)
    haar = WaveletSpec("haar", np.array([1.0, 1.0]) / _SQRT2)
    db2 = WaveletSpec("db2", np.array([1.0 + s3, 3.0 + s3, 3.0 - s3, 1.0 - s3]) / (4.0 * _SQRT2))
    db4 = WaveletSpec("db4", np.array(_DB4_TAPS))
    return {"haar": haar, "db1": haar, "db2": db2, "db4": db4}


_BUILTINS = _builtin_specs()

DEFAULT_WAVELET = "db4"
WAVELET_NAMES = ("haar", "db2", "db4")


def get_wavelet(name: str | WaveletSpec) -> WaveletSpec:
    """Look up a built-in wavelet by name ("haar"/"db1", "db2", "db4")."""
    if isinstance(name, WaveletSpec):
        return name
    try:
        return _BUILTINS[name]
    except KeyError:
        raise UnknownWaveletError(
            f"unknown wavelet {name!r}; built-ins: {', '.join(WAVELET_NAMES)}"
        ) from None


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Flat coefficient vector plus the bookkeeping needed to invert it.

    ``lengths`` is ``(len(A_J), len(D_J), ..., len(D_1), n)`` where ``n`` is
    the original signal length. ``tail`` holds the untransformed samples
    beyond the dyadic prefix (empty when ``n`` is a multiple of ``2^levels``).
    """

    coeffs: np.ndarray
    lengths: tuple[int, ...]
    wavelet: str
    levels: int
    tail: np.ndarray = field(default_factory=lambda: np.empty(0))

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=np.float64))
        object.__setattr__(self, "lengths", tuple(int(v) for v in self.lengths))
        object.__setattr__(self, "tail", np.asarray(self.tail, dtype=np.float64))


def _as_signal(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D sample vector, got shape {arr.shape}")
    return arr


def _analysis_step(x: np.ndarray, g: np.ndarray, h: np.ndarray):
    # Periodized polyphase correlation; exact for any even N (including N < T,
    # where the cyclic extension wraps more than once).
    n = x.size
    t = g.size
    ext = np.resize(x, n + t - 1)
    approx = np.zeros(n // 2)
    detail = np.zeros(n // 2)
    for m in range(t):
        seg = ext[m : m + n : 2]
        approx += g[m] * seg
        detail += h[m] * seg
    return approx, detail


def _synthesis_step(approx: np.ndarray, detail: np.ndarray, g: np.ndarray, h: np.ndarray):
    # Exact transpose of _analysis_step: scatter each coefficient back onto
    # the extended grid, then fold the wrapped region.
    n = 2 * approx.size
    t = g.size
    out_ext = np.zeros(n + t - 1)
    for m in range(t):
        out_ext[m : m + n : 2] += g[m] * approx + h[m] * detail
    out = out_ext[:n].copy()
    if t > 1:
        np.add.at(out, np.arange(n, n + t - 1) % n, out_ext[n:])
    return out


def dwt_level(x, wavelet: str | WaveletSpec):
    """One analysis step: split ``x`` into (approx, detail), each half length.

    Requires an even length of at least the filter tap count.
    """
    w = get_wavelet(wavelet)
    arr = _as_signal(x)
    if arr.size % 2 != 0:
        raise OddLengthError(f"signal length {arr.size} is odd")
    if arr.size < w.lowpass.size:
        raise SignalTooShortError(
            f"signal length {arr.size} < {w.lowpass.size} taps of {w.name}"
        )
    return _analysis_step(arr, w.lowpass, w.highpass)


def idwt_level(approx, detail, wavelet: str | WaveletSpec) -> np.ndarray:
    """Inverse of :func:`dwt_level`; exact adjoint of the analysis step."""
    w = get_wavelet(wavelet)
    a = _as_signal(approx)
    d = _as_signal(detail)
    if a.size != d.size:
        raise LengthMismatchError(f"approx length {a.size} != detail length {d.size}")
    if a.size == 0:
        raise LengthMismatchError("approx and detail must hold at least one coefficient")
    return _synthesis_step(a, d, w.lowpass, w.highpass)


def bookkeeping(n: int, levels: int) -> tuple[int, ...]:
    """Subband lengths for a signal of length ``n`` at the given depth."""
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if n <= 0 or 2**levels > n:
        raise TooManyLevelsError(f"cannot take {levels} levels of a length-{n} signal")
    m = (n >> levels) << levels
    out = [m >> levels, m >> levels]
    for j in range(levels - 1, 0, -1):
        out.append(m >> j)
    out.append(n)
    return tuple(out)


def wavedec(x, wavelet: str | WaveletSpec, levels: int) -> Decomposition:
    """Multilevel analysis of the dyadic prefix of ``x``.

    Produces the flat coefficient vector ``[A_J | D_J | ... | D_1]`` and its
    bookkeeping; samples past the dyadic prefix are kept verbatim in ``tail``.
    """
    w = get_wavelet(wavelet)
    arr = _as_signal(x)
    lengths = bookkeeping(arr.size, levels)
    m = sum(lengths[:-1])
    cur = arr[:m]
    details = []
    for _ in range(levels):
        cur, det = _analysis_step(cur, w.lowpass, w.highpass)
        details.append(det)
    coeffs = np.concatenate([cur] + details[::-1])
    return Decomposition(
        coeffs=coeffs,
        lengths=lengths,
        wavelet=w.name,
        levels=levels,
        tail=arr[m:].copy(),
    )


def _validate_decomposition(d: Decomposition) -> None:
    L = d.lengths
    j = len(L) - 2
    if j < 1 or j != d.levels:
        raise InconsistentBookkeepingError(
            f"lengths vector implies {j} levels but decomposition says {d.levels}"
        )
    if any(v < 1 for v in L[:-1]):
        raise InconsistentBookkeepingError("subband lengths must be positive")
    if L[0] != L[1]:
        raise InconsistentBookkeepingError(
            f"approximation and deepest detail lengths differ: {L[0]} vs {L[1]}"
        )
    for k in range(1, j):
        if L[k + 1] != 2 * L[k]:
            raise InconsistentBookkeepingError(
                f"subband lengths do not halve per level: lengths[{k + 1}]={L[k + 1]} "
                f"vs 2*lengths[{k}]={2 * L[k]}"
            )
    m = sum(L[:-1])
    if d.coeffs.size != m:
        raise InconsistentBookkeepingError(
            f"coefficient vector has {d.coeffs.size} entries but lengths sum to {m}"
        )
    tail = L[-1] - m
    if tail < 0 or tail >= 2**j:
        raise InconsistentBookkeepingError(
            f"original length {L[-1]} inconsistent with transformed prefix {m}"
        )
    if d.tail.size != tail:
        raise InconsistentBookkeepingError(
            f"tail holds {d.tail.size} samples, bookkeeping implies {tail}"
        )


def waverec(d: Decomposition, wavelet: str | WaveletSpec | None = None) -> np.ndarray:
    """Invert :func:`wavedec`; output length is the last bookkeeping entry."""
    w = get_wavelet(wavelet if wavelet is not None else d.wavelet)
    _validate_decomposition(d)
    L = d.lengths
    cur = d.coeffs[: L[0]]
    pos = L[0]
    for k in range(1, d.levels + 1):
        det = d.coeffs[pos : pos + L[k]]
        cur = _synthesis_step(cur, det, w.lowpass, w.highpass)
        pos += L[k]
    if d.tail.size:
        return np.concatenate([cur, d.tail])
    return cur


def subband_ranges(lengths: tuple[int, ...] | list[int]) -> dict[str, tuple[int, int]]:
    """Map subband labels ("A", "D1".."DJ") to half-open index ranges in C."""
    L = tuple(int(v) for v in lengths)
    j = len(L) - 2
    if j < 1:
        raise InconsistentBookkeepingError(f"bookkeeping vector too short: {L}")
    ranges: dict[str, tuple[int, int]] = {"A": (0, L[0])}
    pos = L[0]
    for i, level in enumerate(range(j, 0, -1), start=1):
        ranges[f"D{level}"] = (pos, pos + L[i])
        pos += L[i]
    return ranges
