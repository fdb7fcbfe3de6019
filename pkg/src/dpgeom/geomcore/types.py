"""Image and geometry containers shared by every pipeline stage.

Conventions (repo-wide): row-major arrays with the origin at the top-left
pixel, +x right, +y down, +z into the scene (right-handed camera frame).
Pixel centers sit at integer coordinates. Invalid pixels are carried by
explicit boolean masks, never by NaN sentinels. Depth is in meters,
disparity in pixels, normals are unit vectors stored so that n_z > 0 for a
camera-facing surface.

All containers validate at construction and are immutable afterwards, so
any instance may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError, ShapeError

__all__ = [
    "ImageF",
    "DepthMap",
    "DisparityMap",
    "NormalMap",
    "PointCloud",
    "UNIT_NORMAL_TOL",
]

# Tolerance on the norm of a stored surface normal.
UNIT_NORMAL_TOL = 1e-6


def _as_readonly(arr, dtype=np.float64):
    out = np.ascontiguousarray(arr, dtype=dtype)
    out.flags.writeable = False
    return out


def _check_mask(mask, shape, what):
    m = np.ascontiguousarray(mask, dtype=bool)
    if m.shape != shape:
        raise ShapeError(f"{what}: mask shape {m.shape} != data shape {shape}")
    m.flags.writeable = False
    return m


@dataclass(frozen=True, eq=False)
class ImageF:
    """Single- or three-channel float image, shape (H, W) or (H, W, 3)."""

    data: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.data, dtype=np.float64)
        if d.ndim == 2:
            pass
        elif d.ndim == 3 and d.shape[2] in (1, 3):
            if d.shape[2] == 1:
                d = d[:, :, 0]
        else:
            raise ShapeError(f"ImageF: expected (H,W) or (H,W,3), got {d.shape}")
        if d.size == 0:
            raise ShapeError("ImageF: empty image")
        if not np.all(np.isfinite(d)):
            raise DomainError("ImageF: non-finite samples")
        object.__setattr__(self, "data", _as_readonly(d))

    @property
    def height(self):
        return self.data.shape[0]

    @property
    def width(self):
        return self.data.shape[1]

    @property
    def channels(self):
        return 1 if self.data.ndim == 2 else self.data.shape[2]

    def luminance(self) -> "ImageF":
        """Collapse to one channel (mean over channels); identity if already gray."""
        if self.channels == 1:
            return self
        return ImageF(self.data.mean(axis=2))


@dataclass(frozen=True, eq=False)
class DepthMap:
    """Per-pixel metric depth (meters) with a validity mask."""

    z: np.ndarray
    mask: np.ndarray = None

    def __post_init__(self):
        z = np.asarray(self.z, dtype=np.float64)
        if z.ndim != 2 or z.size == 0:
            raise ShapeError(f"DepthMap: expected non-empty (H,W), got {z.shape}")
        mask = np.ones(z.shape, dtype=bool) if self.mask is None else self.mask
        mask = _check_mask(mask, z.shape, "DepthMap")
        zm = z[mask]
        if zm.size and (not np.all(np.isfinite(zm)) or np.any(zm <= 0)):
            raise DomainError("DepthMap: valid depths must be finite and > 0")
        object.__setattr__(self, "z", _as_readonly(z))
        object.__setattr__(self, "mask", mask)

    @property
    def height(self):
        return self.z.shape[0]

    @property
    def width(self):
        return self.z.shape[1]

    @property
    def valid_count(self):
        return int(self.mask.sum())


@dataclass(frozen=True, eq=False)
class DisparityMap:
    """Per-pixel defocus disparity (pixels) with a validity mask."""

    d: np.ndarray
    mask: np.ndarray = None

    def __post_init__(self):
        d = np.asarray(self.d, dtype=np.float64)
        if d.ndim != 2 or d.size == 0:
            raise ShapeError(f"DisparityMap: expected non-empty (H,W), got {d.shape}")
        mask = np.ones(d.shape, dtype=bool) if self.mask is None else self.mask
        mask = _check_mask(mask, d.shape, "DisparityMap")
        if not np.all(np.isfinite(d[mask])):
            raise DomainError("DisparityMap: valid disparities must be finite")
        object.__setattr__(self, "d", _as_readonly(d))
        object.__setattr__(self, "mask", mask)

    @property
    def height(self):
        return self.d.shape[0]

    @property
    def width(self):
        return self.d.shape[1]

    @property
    def valid_count(self):
        return int(self.mask.sum())


@dataclass(frozen=True, eq=False)
class NormalMap:
    """Per-pixel unit surface normals, shape (H, W, 3), camera frame.

    Vectors are stored as computed; the repo convention is n_z > 0 for a
    surface facing the camera (+z into the scene).
    """

    n: np.ndarray
    mask: np.ndarray = None

    def __post_init__(self):
        n = np.asarray(self.n, dtype=np.float64)
        if n.ndim != 3 or n.shape[2] != 3 or n.shape[0] * n.shape[1] == 0:
            raise ShapeError(f"NormalMap: expected (H,W,3), got {n.shape}")
        mask = np.ones(n.shape[:2], dtype=bool) if self.mask is None else self.mask
        mask = _check_mask(mask, n.shape[:2], "NormalMap")
        nv = n[mask]
        if nv.size:
            if not np.all(np.isfinite(nv)):
                raise DomainError("NormalMap: non-finite normals on valid pixels")
            norms = np.linalg.norm(nv, axis=1)
            if np.any(np.abs(norms - 1.0) > UNIT_NORMAL_TOL):
                worst = float(np.abs(norms - 1.0).max())
                raise DomainError(f"NormalMap: valid normals must be unit length (worst |n|-1 = {worst:.3g})")
        object.__setattr__(self, "n", _as_readonly(n))
        object.__setattr__(self, "mask", mask)

    @property
    def height(self):
        return self.n.shape[0]

    @property
    def width(self):
        return self.n.shape[1]


@dataclass(frozen=True, eq=False)
class PointCloud:
    """3D points (meters) with optional per-point unit normals and view ids."""

    points: np.ndarray
    normals: np.ndarray = None
    view_id: np.ndarray = None

    def __post_init__(self):
        p = np.asarray(self.points, dtype=np.float64)
        if p.ndim != 2 or p.shape[1] != 3:
            raise ShapeError(f"PointCloud: expected (N,3) points, got {p.shape}")
        if not np.all(np.isfinite(p)):
            raise DomainError("PointCloud: non-finite points")
        object.__setattr__(self, "points", _as_readonly(p))
        if self.normals is not None:
            n = np.asarray(self.normals, dtype=np.float64)
            if n.shape != p.shape:
                raise ShapeError(f"PointCloud: normals shape {n.shape} != points shape {p.shape}")
            norms = np.linalg.norm(n, axis=1)
            if np.any(np.abs(norms - 1.0) > UNIT_NORMAL_TOL):
                raise DomainError("PointCloud: normals must be unit length")
            object.__setattr__(self, "normals", _as_readonly(n))
        if self.view_id is not None:
            v = np.ascontiguousarray(self.view_id, dtype=np.int64)
            if v.shape != (p.shape[0],):
                raise ShapeError(f"PointCloud: view_id length {v.shape} != point count {p.shape[0]}")
            v.flags.writeable = False
            object.__setattr__(self, "view_id", v)

    def __len__(self):
        return self.points.shape[0]
