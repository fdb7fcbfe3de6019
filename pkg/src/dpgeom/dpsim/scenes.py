"""Synthetic test scenes with analytically exact depth and normal maps."""

from __future__ import annotations

import numpy as np
from scipy.ndimage import gaussian_filter

from ..errors import DomainError
from ..geomcore.camera import PinholeCamera
from ..geomcore.types import DepthMap, ImageF, NormalMap

__all__ = ["make_test_scene", "default_camera", "SCENE_KINDS"]

SCENE_KINDS = ("plane", "slanted-plane", "sphere", "checkerboard-target")


def default_camera(width: int, height: int, f_px: float = None) -> PinholeCamera:
    """Identity-pose camera centered on the image; moderate focal length."""
    if f_px is None:
        f_px = 2.0 * max(width, height)
    return PinholeCamera(fx=f_px, fy=f_px, cx=(width - 1) / 2.0, cy=(height - 1) / 2.0)


def _noise_texture(width, height, seed, smooth=3.0, lo=0.15, hi=0.85):
    rng = np.random.default_rng(seed)
    t = gaussian_filter(rng.random((height, width)), smooth, mode="reflect")
    tmin, tmax = t.min(), t.max()
    if tmax - tmin < 1e-12:
        return np.full((height, width), (lo + hi) / 2.0)
    return lo + (hi - lo) * (t - tmin) / (tmax - tmin)


def _checker_texture(width, height, square):
    v, u = np.mgrid[0:height, 0:width]
    return (((u // square) + (v // square)) % 2).astype(np.float64)


def _texture(kind, width, height, seed, square):
    if kind == "noise":
        return _noise_texture(width, height, seed)
    if kind == "checker":
        return _checker_texture(width, height, square)
    if kind == "constant":
        return np.full((height, width), 0.5)
    raise DomainError(f"unknown texture kind {kind!r}")


def _unit_flip(n):
    """Normalize and orient so n_z > 0 (repo storage convention)."""
    n = n / np.linalg.norm(n, axis=2, keepdims=True)
    flip = n[:, :, 2] < 0
    n[flip] *= -1.0
    return n


def make_test_scene(
    kind: str,
    width: int = 256,
    height: int = 256,
    cam: PinholeCamera = None,
    z: float = 1.0,
    slope_x: float = 0.0,
    slope_y: float = 0.0,
    center=(0.0, 0.0, 1.0),
    radius: float = 0.1,
    background_z: float = None,
    texture: str = "noise",
    texture_seed: int = 0,
    checker_square: int = 16,
) -> tuple[ImageF, DepthMap, NormalMap]:
    """Build (image, depth, normals) for one of the analytic scene kinds.

    plane:               Z = z everywhere, normal (0, 0, 1).
    slanted-plane:       Z = z + slope_x*X + slope_y*Y in camera space.
    sphere:              near surface of |X - center| = radius; rays that
                         miss fall back to background_z (masked if None).
    checkerboard-target: plane at z with a checker texture (for saddle
                         refinement targets).
    """
    if kind not in SCENE_KINDS:
        raise DomainError(f"unknown scene kind {kind!r}")
    if cam is None:
        cam = default_camera(width, height)
    if z <= 0:
        raise DomainError("scene depth z must be > 0")

    v, u = np.mgrid[0:height, 0:width].astype(np.float64)
    rx = (u - cam.cx) / cam.fx
    ry = (v - cam.cy) / cam.fy

    if kind in ("plane", "checkerboard-target"):
        zmap = np.full((height, width), float(z))
        mask = np.ones((height, width), dtype=bool)
        normals = np.zeros((height, width, 3))
        normals[:, :, 2] = 1.0
        tex_kind = "checker" if kind == "checkerboard-target" else texture
        img = _texture(tex_kind, width, height, texture_seed, checker_square)
        return ImageF(img), DepthMap(zmap, mask), NormalMap(normals, mask)

    if kind == "slanted-plane":
        denom = 1.0 - slope_x * rx - slope_y * ry
        if np.any(denom <= 1e-9):
            raise DomainError("slanted-plane: slope too steep for this field of view")
        zmap = z / denom
        mask = zmap > 0
        n = np.empty((height, width, 3))
        n[:, :, 0] = -slope_x
        n[:, :, 1] = -slope_y
        n[:, :, 2] = 1.0
        normals = _unit_flip(n)
        img = _texture(texture, width, height, texture_seed, checker_square)
        return ImageF(img), DepthMap(zmap, mask), NormalMap(normals, mask)

    # sphere
    c = np.asarray(center, dtype=np.float64)
    if radius <= 0:
        raise DomainError("sphere: radius must be > 0")
    # ray direction (rx, ry, 1); solve |t*r - c|^2 = radius^2 for the near root
    rr = rx * rx + ry * ry + 1.0
    rc = rx * c[0] + ry * c[1] + c[2]
    disc = rc * rc - rr * (c @ c - radius * radius)
    hit = disc >= 0
    t = np.zeros((height, width))
    t[hit] = (rc[hit] - np.sqrt(disc[hit])) / rr[hit]
    zmap = t
    mask = hit & (t > 0)
    normals = np.zeros((height, width, 3))
    pts = np.stack([rx * t, ry * t, t], axis=2)
    nm = (pts - c) / radius
    if background_z is not None:
        if background_z <= 0:
            raise DomainError("sphere: background_z must be > 0")
        bg = ~mask
        zmap = np.where(bg, background_z, zmap)
        nm[bg] = (0.0, 0.0, 1.0)
        mask = np.ones((height, width), dtype=bool)
    zmap = np.where(mask, zmap, 0.0)
    nm[~mask] = (0.0, 0.0, 1.0)
    normals = _unit_flip(nm)
    img = _texture(texture, width, height, texture_seed, checker_square)
    return ImageF(img), DepthMap(zmap, mask), NormalMap(normals, mask)
