"""Soft-argmax disparity regression over the cost volume."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..geomcore.types import DisparityMap
from .cost import CostVolume

__all__ = ["regress_disparity"]


def regress_disparity(vol: CostVolume, temperature: float = 1.0) -> DisparityMap:
    """Expectation of the labels under a softmax over the scores.

    Scores are divided by the temperature first; the max score is subtracted
    per pixel before exponentiation, which makes the result invariant to a
    per-pixel additive constant and numerically safe. The regressed value
    always lies inside [d_min, d_max].
    """
    if not (temperature > 0 and np.isfinite(temperature)):
        raise DomainError("regress_disparity: temperature must be finite and > 0")
    s = vol.cost / temperature
    s = s - s.max(axis=2, keepdims=True)
    p = np.exp(s)
    p /= p.sum(axis=2, keepdims=True)
    d = p @ vol.labels.values
    return DisparityMap(d, vol.valid.copy())
