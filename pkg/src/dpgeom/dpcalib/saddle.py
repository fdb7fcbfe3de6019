"""Sub-pixel saddle-point refinement by local quadratic surface fit.

Checkerboard-style calibration targets have intensity saddles at their
corners; fitting I(x, y) ~ quadratic over a window and solving for the
stationary point refines an integer corner guess to sub-pixel precision
while staying robust to defocus blur.
"""

from __future__ import annotations

import numpy as np

from ..errors import Diverged, DomainError, NotASaddle
from ..geomcore.types import ImageF

__all__ = ["refine_saddle"]


def refine_saddle(img: ImageF, initial, window: int) -> tuple[float, float]:
    """Refine (x, y) to the stationary point of a local quadratic fit.

    The window (odd, >= 5) is centered on the rounded initial position and
    must lie fully inside the image. Returns the stationary point only if
    the fitted Hessian is indefinite (a true saddle); a definite Hessian
    raises NotASaddle and a stationary point escaping the window raises
    Diverged.
    """
    if img.channels != 1:
        raise DomainError("refine_saddle: single-channel images only")
    if window < 5 or window % 2 == 0:
        raise DomainError("refine_saddle: window must be odd and >= 5")
    x0, y0 = float(initial[0]), float(initial[1])
    cx = int(np.floor(x0 + 0.5))
    cy = int(np.floor(y0 + 0.5))
    half = window // 2
    if cx - half < 0 or cy - half < 0 or cx + half >= img.width or cy + half >= img.height:
        raise DomainError("refine_saddle: window not fully inside the image")

    patch = img.data[cy - half : cy + half + 1, cx - half : cx + half + 1]
    yy, xx = np.mgrid[-half : half + 1, -half : half + 1].astype(np.float64)
    x = xx.ravel()
    y = yy.ravel()
    design = np.stack([np.ones_like(x), x, y, x * x, x * y, y * y], axis=1)
    c, *_ = np.linalg.lstsq(design, patch.ravel(), rcond=None)
    _, cx1, cy1, cxx, cxy, cyy = c

    hess = np.array([[2 * cxx, cxy], [cxy, 2 * cyy]])
    if np.linalg.det(hess) >= 0:
        raise NotASaddle("refine_saddle: fitted Hessian is not indefinite")
    sx, sy = np.linalg.solve(hess, [-cx1, -cy1])
    if abs(sx) > half or abs(sy) > half:
        raise Diverged("refine_saddle: stationary point outside the window")
    return (cx + float(sx), cy + float(sy))
