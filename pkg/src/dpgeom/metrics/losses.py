"""Training losses re-exposed as evaluation scores."""

from __future__ import annotations

import numpy as np

from ..errors import EmptyInput, ShapeError
from ..geomcore.types import DisparityMap, NormalMap
from .report import co_valid_values

__all__ = ["smooth_l1", "cosine_normal_loss"]


def smooth_l1(pred: DisparityMap, gt: DisparityMap) -> float:
    """Mean smooth-L1 of (gt - pred): 0.5 x^2 below |x| = 1, |x| - 0.5 above.

    Continuous and once-differentiable across the knee.
    """
    pv, gv = co_valid_values(pred, gt)
    x = np.abs(gv - pv)
    return float(np.mean(np.where(x < 1.0, 0.5 * x * x, x - 0.5)))


def cosine_normal_loss(pred: NormalMap, gt: NormalMap) -> float:
    """Mean (1 - N . Nhat) over co-valid pixels; 0 at equality, 2 antipodal."""
    if pred.n.shape != gt.n.shape:
        raise ShapeError("cosine_normal_loss: shape mismatch")
    m = pred.mask & gt.mask
    if not m.any():
        raise EmptyInput("cosine_normal_loss: no co-valid pixels")
    return float(np.mean(1.0 - (pred.n[m] * gt.n[m]).sum(axis=1)))
