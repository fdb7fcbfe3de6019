"""Surface normals from depth via the local-plane assumption.

Each pixel's normal is the total-least-squares plane through the
back-projected valid points of its neighborhood: the eigenvector of the
local covariance with the smallest eigenvalue, oriented to the repo's
camera-facing convention (n_z > 0).
"""

from __future__ import annotations

import numpy as np
from scipy.ndimage import uniform_filter

from ..errors import DomainError
from ..geomcore.camera import PinholeCamera
from ..geomcore.types import DepthMap, NormalMap

__all__ = ["normals_from_depth"]


def _box_sum(a: np.ndarray, size: int) -> np.ndarray:
    # zero padding outside the image: windows shrink at the borders
    return uniform_filter(a, size=size, mode="constant", cval=0.0) * (size * size)


def normals_from_depth(depth: DepthMap, cam: PinholeCamera, neighborhood: int = 5) -> NormalMap:
    """Fit a plane through each pixel's back-projected neighbors.

    Pixels with fewer than 3 valid points in their window come back masked.
    """
    if neighborhood < 3 or neighborhood % 2 == 0:
        raise DomainError("normals_from_depth: neighborhood must be odd and >= 3")
    h, w = depth.z.shape
    v, u = np.mgrid[0:h, 0:w].astype(np.float64)
    m = depth.mask.astype(np.float64)
    z = np.where(depth.mask, depth.z, 0.0)
    x = (u - cam.cx) / cam.fx * z
    y = (v - cam.cy) / cam.fy * z
    coords = (x, y, z)

    n_pts = _box_sum(m, neighborhood)
    sums = [_box_sum(c * m, neighborhood) for c in coords]
    prods = {}
    for i in range(3):
        for j in range(i, 3):
            prods[(i, j)] = _box_sum(coords[i] * coords[j] * m, neighborhood)

    ok = depth.mask & (np.round(n_pts) >= 3)
    idx = np.nonzero(ok)
    n = n_pts[idx]
    mean = [s[idx] / n for s in sums]
    cov = np.empty((idx[0].size, 3, 3))
    for i in range(3):
        for j in range(i, 3):
            cij = prods[(i, j)][idx] / n - mean[i] * mean[j]
            cov[:, i, j] = cij
            cov[:, j, i] = cij

    _, vecs = np.linalg.eigh(cov)
    normal = vecs[:, :, 0]  # eigenvector of the smallest eigenvalue
    flip = normal[:, 2] < 0
    normal[flip] *= -1.0

    out = np.zeros((h, w, 3))
    out[:, :, 2] = 1.0
    out[idx[0], idx[1]] = normal
    return NormalMap(out, ok)
