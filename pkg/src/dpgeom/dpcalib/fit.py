"""Weighted least-squares fit of the disparity/inverse-depth line."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateFit, DomainError, InconsistentOptics
from .model import DpCalibration

__all__ = ["CalibSample", "fit_affine"]


@dataclass(frozen=True)
class CalibSample:
    """One measured (inverse depth, disparity) pair with an optional weight."""

    inv_depth: float
    disparity: float
    weight: float = 1.0

    def __post_init__(self):
        if not (self.inv_depth > 0 and np.isfinite(self.inv_depth)):
            raise DomainError("CalibSample: inv_depth must be finite and > 0")
        if not np.isfinite(self.disparity):
            raise DomainError("CalibSample: disparity must be finite")
        if not (self.weight >= 0 and np.isfinite(self.weight)):
            raise DomainError("CalibSample: weight must be finite and >= 0")


def fit_affine(samples, f: float, N: float, pixel_pitch: float) -> DpCalibration:
    """Fit d = A + B * inv_depth by weighted least squares.

    Recovers the full parameter set: g = -B/A, L = f/N, and alpha from the
    slope. The weighted residual RMS is attached to the result. Raises
    DegenerateFit when the design is rank deficient (all inverse depths
    equal or all weights on one abscissa) and InconsistentOptics when the
    fitted focus distance is not a physical distance beyond the lens.
    """
    samples = list(samples)
    if len(samples) < 2:
        raise DegenerateFit("fit_affine: need at least 2 samples")
    x = np.array([s.inv_depth for s in samples])
    d = np.array([s.disparity for s in samples])
    w = np.array([s.weight for s in samples])
    if w.sum() <= 0:
        raise DegenerateFit("fit_affine: all weights are zero")
    xw = x[w > 0]
    if np.ptp(xw) == 0:
        raise DegenerateFit("fit_affine: all weighted inverse depths are equal")

    sw = np.sqrt(w)
    design = np.stack([sw, sw * x], axis=1)
    coef, _, rank, _ = np.linalg.lstsq(design, sw * d, rcond=None)
    if rank < 2:
        raise DegenerateFit("fit_affine: rank-deficient design")
    A, B = float(coef[0]), float(coef[1])
    if B == 0:
        raise DegenerateFit("fit_affine: zero slope (disparity carries no depth signal)")
    if A == 0:
        raise InconsistentOptics("fit_affine: zero bias puts the focus plane at infinity")
    g = -B / A
    if not np.isfinite(g) or g <= f:
        raise InconsistentOptics(f"fit_affine: fitted focus distance g = {g:.6g} <= f = {f:.6g}")

    L = f / N
    alpha = -B * pixel_pitch * (1.0 - f / g) / (L * f)
    resid = d - (A + B * x)
    rms = float(np.sqrt((w * resid**2).sum() / w.sum()))
    return DpCalibration(
        A=A, B=B, f=f, N=N, g=g, L=L, alpha=alpha, pixel_pitch=pixel_pitch, residual_rms=rms
    )
