"""Signed defocus disparity from depth."""

from __future__ import annotations

import numpy as np

from ..geomcore.types import DepthMap, DisparityMap
from .optics import OpticsConfig

__all__ = ["signed_blur"]


def signed_blur(depth: DepthMap, optics: OpticsConfig) -> DisparityMap:
    """Per-pixel defocus disparity d = blur_gain * (1/g - 1/Z) in pixels.

    Exactly zero on the focus plane; positive beyond it (repo convention),
    strictly monotone in Z for fixed optics. Invalid depth pixels stay
    invalid with d = 0.
    """
    g = optics.focus_distance
    z = depth.z
    d = np.zeros_like(z)
    m = depth.mask
    d[m] = optics.blur_gain * (1.0 / g - 1.0 / z[m])
    return DisparityMap(d, depth.mask)
