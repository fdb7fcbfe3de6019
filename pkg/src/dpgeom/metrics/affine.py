"""Affine-invariant error: the residual after the best affine map of the
prediction onto the ground truth.

AIWE(p) = min over (a, b) of (sum |gt - (a*pred + b)|^p / count)^(1/p).
WMAE = AIWE(1), WRMSE = AIWE(2). The p=2 inner problem is ordinary least
squares; for p=1 no closed form exists, so the affine fit is found by
iteratively reweighted least squares (20 iterations, 1e-8 tolerance),
which the tests cross-check against a brute-force grid.
"""

from __future__ import annotations

import warnings

import numpy as np

from ..errors import DomainError, EmptyInput
from .report import co_valid_values

__all__ = ["aiwe", "affine_fit_l2", "affine_fit_l1"]

_IRLS_ITERS = 20
_IRLS_TOL = 1e-8


def affine_fit_l2(pred: np.ndarray, gt: np.ndarray) -> tuple[float, float]:
    """Least-squares (a, b) minimizing sum (gt - a*pred - b)^2."""
    pm = pred.mean()
    gm = gt.mean()
    var = ((pred - pm) ** 2).sum()
    if var == 0:
        warnings.warn("aiwe: constant prediction, affine scale unidentifiable (a = 0)")
        return 0.0, gm
    a = ((pred - pm) * (gt - gm)).sum() / var
    return float(a), float(gm - a * pm)


def affine_fit_l1(pred: np.ndarray, gt: np.ndarray) -> tuple[float, float]:
    """IRLS (a, b) approximately minimizing sum |gt - a*pred - b|."""
    if np.ptp(pred) == 0:
        warnings.warn("aiwe: constant prediction, affine scale unidentifiable (a = 0)")
        return 0.0, float(np.median(gt))
    a, b = affine_fit_l2(pred, gt)
    scale = max(1.0, float(np.abs(gt).max()))
    floor = 1e-10 * scale
    design = np.stack([pred, np.ones_like(pred)], axis=1)
    for _ in range(_IRLS_ITERS):
        r = np.abs(gt - (a * pred + b))
        w = 1.0 / np.maximum(r, floor)
        sw = np.sqrt(w)
        coef, *_ = np.linalg.lstsq(design * sw[:, None], gt * sw, rcond=None)
        a_new, b_new = float(coef[0]), float(coef[1])
        if abs(a_new - a) <= _IRLS_TOL * max(1.0, abs(a)) and abs(b_new - b) <= _IRLS_TOL * scale:
            a, b = a_new, b_new
            break
        a, b = a_new, b_new
    return a, b


def aiwe(pred, gt, p: int) -> float:
    """Affine-invariant weighted error over co-valid pixels; p in {1, 2}."""
    if p not in (1, 2):
        raise DomainError("aiwe: p must be 1 or 2")
    pv, gv = co_valid_values(pred, gt)
    if pv.size < 2:
        raise EmptyInput("aiwe: need at least 2 co-valid pixels")
    if p == 2:
        a, b = affine_fit_l2(pv, gv)
        r = gv - (a * pv + b)
        return float(np.sqrt(np.mean(r * r)))
    a, b = affine_fit_l1(pv, gv)
    return float(np.mean(np.abs(gv - (a * pv + b))))
