"""Horizontal sub-pixel image translation: the sampling schemes used to
build disparity hypotheses.

All methods translate content by +delta along x, i.e. out(x) = in(x - delta):
nearest rounds delta to whole columns, bilinear blends the two straddling
columns, phase_shift multiplies each row's spectrum by exp(-2i*pi*k*delta/W)
and discards the imaginary part of the inverse transform. nearest/bilinear
edge-clamp at the borders; phase_shift wraps periodically.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..geomcore.types import ImageF

__all__ = ["shift_subpixel", "SHIFT_METHODS"]

SHIFT_METHODS = ("nearest", "bilinear", "phase_shift")


def _shift_nearest(a: np.ndarray, delta: float) -> np.ndarray:
    w = a.shape[1]
    k = int(np.floor(delta + 0.5))
    idx = np.clip(np.arange(w) - k, 0, w - 1)
    return a[:, idx]


def _shift_bilinear(a: np.ndarray, delta: float) -> np.ndarray:
    w = a.shape[1]
    pos = np.arange(w) - delta
    i0 = np.floor(pos).astype(np.int64)
    frac = pos - i0
    lo = np.clip(i0, 0, w - 1)
    hi = np.clip(i0 + 1, 0, w - 1)
    return (1.0 - frac) * a[:, lo] + frac * a[:, hi]


def _shift_phase(a: np.ndarray, delta: float) -> np.ndarray:
    w = a.shape[1]
    freq = np.fft.fftfreq(w)
    factor = np.exp(-2j * np.pi * freq * delta)
    return np.fft.ifft(np.fft.fft(a, axis=1) * factor[None, :], axis=1).real


_DISPATCH = {
    "nearest": _shift_nearest,
    "bilinear": _shift_bilinear,
    "phase_shift": _shift_phase,
}


def shift_subpixel(img: ImageF, delta: float, method: str) -> ImageF:
    """Translate image content by delta pixels along +x."""
    if method not in _DISPATCH:
        raise DomainError(f"shift_subpixel: unknown method {method!r}")
    if not np.isfinite(delta):
        raise DomainError("shift_subpixel: delta must be finite")
    if abs(delta) >= img.width / 2:
        raise DomainError("shift_subpixel: |delta| must be < width/2")
    fn = _DISPATCH[method]
    if img.channels == 1:
        return ImageF(fn(img.data, float(delta)))
    out = np.stack([fn(img.data[:, :, c], float(delta)) for c in range(img.channels)], axis=2)
    return ImageF(out)
