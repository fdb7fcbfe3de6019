"""Decoding captured pattern stacks: gray bands and wrapped phase."""

from __future__ import annotations

import numpy as np

from ..errors import InsufficientShots, ShapeError
from ..geomcore.types import ImageF
from .patterns import gray_decode_int

__all__ = ["decode_gray", "decode_phase", "DEFAULT_CONTRAST_TAU", "DEFAULT_AMP_TAU"]

# thresholds as fractions of the [0, 1] pattern dynamic range
DEFAULT_CONTRAST_TAU = 0.02
DEFAULT_AMP_TAU = 0.02


def _stack(images, what):
    arrs = [im.data if isinstance(im, ImageF) else np.asarray(im, dtype=np.float64) for im in images]
    shape = arrs[0].shape
    for a in arrs:
        if a.shape != shape or a.ndim != 2:
            raise ShapeError(f"{what}: images must share one single-channel shape")
    return np.stack(arrs, axis=0)


def decode_gray(codes, inverses, tau_contrast: float = DEFAULT_CONTRAST_TAU):
    """Per-pixel band index from inverse gray code.

    bit_i = [code_i > inverse_i]; a pixel is confident only if every bit
    pair differs by at least tau_contrast. Returns (band, confidence).
    """
    c = _stack(codes, "decode_gray")
    i = _stack(inverses, "decode_gray")
    if c.shape != i.shape:
        raise ShapeError("decode_gray: need one inverse per code image")
    bits = c > i
    conf = np.all(np.abs(c - i) >= tau_contrast, axis=0)
    n = c.shape[0]
    gray = np.zeros(c.shape[1:], dtype=np.int64)
    for b in range(n):  # MSB first
        gray = (gray << 1) | bits[b].astype(np.int64)
    band = gray_decode_int(gray)
    return band, conf


def decode_phase(shots, tau_amp: float = DEFAULT_AMP_TAU):
    """Wrapped phase in [0, 2*pi) and modulation amplitude from K shots.

    phi = atan2(sum I_k sin(2*pi*k/K), sum I_k cos(2*pi*k/K)); the K-step
    estimator rejects any per-pixel DC offset. Pixels with amplitude below
    tau_amp carry no usable phase (mask them downstream).
    """
    arr = _stack(shots, "decode_phase")
    k = arr.shape[0]
    if k < 3:
        raise InsufficientShots(f"decode_phase: need >= 3 shots, got {k}")
    ang = 2.0 * np.pi * np.arange(k) / k
    s = np.tensordot(np.sin(ang), arr, axes=(0, 0))
    c = np.tensordot(np.cos(ang), arr, axes=(0, 0))
    phi = np.mod(np.arctan2(s, c), 2.0 * np.pi)
    amplitude = 2.0 / k * np.hypot(s, c)
    return phi, amplitude
