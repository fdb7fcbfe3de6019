"""Numpy fallback for the compiled gather kernel.

Mirrors ``_core.pyx`` operation for operation: identical tap sets, centroid
placement and clamping, so both backends agree to floating-point roundoff.
The vectorization sweeps the union tap grid once to count taps and once to
accumulate samples, instead of looping per pixel.
"""

from __future__ import annotations

import numpy as np

__all__ = ["halfdisc_gather"]


def halfdisc_gather(src, disp, side, out, row0, row1):
    """Defocus gather with a signed half-disc kernel, rows [row0, row1).

    Per output pixel with disparity d: kernel radius r = |d| (identity when
    r < 0.5); integer taps (u, v) satisfy u^2 + v^2 <= r^2 and u*h <= 0 with
    h = side*sign(d); the tap set is positioned so its discrete centroid
    sits at -side*d/2, which makes the rendered content shift by +side*d/2.
    Sample rows clamp vertically; columns are edge-clamped bilinear reads.
    """
    h_img, w_img = src.shape
    ys = np.arange(row0, row1)
    d = disp[row0:row1]
    r = np.abs(d)
    active = r >= 0.5
    out[row0:row1] = src[row0:row1]
    if not np.any(active):
        return
    r2 = r * r
    hsign = side * np.sign(d)
    rmax = int(np.floor(np.sqrt(r2.max())))

    # pass 1: tap count and tap-u sum per pixel
    n = np.zeros(d.shape, dtype=np.int64)
    sum_u = np.zeros(d.shape, dtype=np.int64)
    for v in range(-rmax, rmax + 1):
        vv = v * v
        for u in range(-rmax, rmax + 1):
            tap = active & (u * u + vv <= r2) & (u * hsign <= 0)
            n += tap
            sum_u += u * tap

    nf = np.where(n > 0, n, 1).astype(np.float64)
    ubar = sum_u / nf
    # gather center at -side*d/2, shifted so the discrete centroid lands there
    base = np.arange(w_img)[None, :] + (-side * d / 2.0 - ubar)

    acc = np.zeros(d.shape)
    for v in range(-rmax, rmax + 1):
        vv = v * v
        yc = np.clip(ys + v, 0, h_img - 1)
        rows = src[yc]
        for u in range(-rmax, rmax + 1):
            tap = active & (u * u + vv <= r2) & (u * hsign <= 0)
            if not tap.any():
                continue
            x = base + u
            x0 = np.floor(x)
            fx = x - x0
            xi = x0.astype(np.int64)
            i0 = np.clip(xi, 0, w_img - 1)
            i1 = np.clip(xi + 1, 0, w_img - 1)
            ridx = np.arange(rows.shape[0])[:, None]
            s = (1.0 - fx) * rows[ridx, i0] + fx * rows[ridx, i1]
            acc += np.where(tap, s, 0.0)

    out[row0:row1] = np.where(active, acc / nf, src[row0:row1])
