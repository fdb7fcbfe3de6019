"""Pinhole camera model, back-projection and z-buffer projection.

Camera frame: +x right, +y down, +z into the scene. ``pose`` maps world to
camera: X_cam = R @ X_world + t. Pixel (u, v) = (column, row), centers at
integer coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError, EmptyInput, ShapeError
from .types import DepthMap, PointCloud

__all__ = ["PinholeCamera", "back_project", "project"]

_ROT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PinholeCamera:
    """Intrinsics in pixels plus a rigid world-to-camera transform."""

    fx: float
    fy: float
    cx: float
    cy: float
    rotation: np.ndarray = field(default_factory=lambda: np.eye(3))
    translation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        if not (self.fx > 0 and self.fy > 0):
            raise DomainError("PinholeCamera: fx and fy must be > 0")
        r = np.asarray(self.rotation, dtype=np.float64)
        t = np.asarray(self.translation, dtype=np.float64).reshape(-1)
        if r.shape != (3, 3):
            raise ShapeError("PinholeCamera: rotation must be 3x3")
        if t.shape != (3,):
            raise ShapeError("PinholeCamera: translation must be a 3-vector")
        if np.abs(r @ r.T - np.eye(3)).max() > _ROT_TOL:
            raise DomainError("PinholeCamera: rotation is not orthonormal")
        r = np.ascontiguousarray(r)
        r.flags.writeable = False
        t = np.ascontiguousarray(t)
        t.flags.writeable = False
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)
        object.__setattr__(self, "fx", float(self.fx))
        object.__setattr__(self, "fy", float(self.fy))
        object.__setattr__(self, "cx", float(self.cx))
        object.__setattr__(self, "cy", float(self.cy))

    def center(self) -> np.ndarray:
        """Camera center in world coordinates."""
        return -self.rotation.T @ self.translation

    def world_to_camera(self, pts: np.ndarray) -> np.ndarray:
        return pts @ self.rotation.T + self.translation

    def camera_to_world(self, pts: np.ndarray) -> np.ndarray:
        return (pts - self.translation) @ self.rotation

    def to_dict(self) -> dict:
        return {
            "fx": self.fx,
            "fy": self.fy,
            "cx": self.cx,
            "cy": self.cy,
            "rotation": self.rotation.tolist(),
            "translation": self.translation.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PinholeCamera":
        return cls(
            fx=d["fx"],
            fy=d["fy"],
            cx=d["cx"],
            cy=d["cy"],
            rotation=np.asarray(d.get("rotation", np.eye(3))),
            translation=np.asarray(d.get("translation", np.zeros(3))),
        )


def back_project(depth: DepthMap, cam: PinholeCamera) -> PointCloud:
    """Lift every valid depth pixel to a 3D point in world coordinates.

    x = (u - cx) * z / fx, y = (v - cy) * z / fy in the camera frame, then
    the inverse pose maps to world. Point order is row-major over the mask.
    """
    if depth.valid_count == 0:
        raise EmptyInput("back_project: depth map has no valid pixels")
    v, u = np.nonzero(depth.mask)
    z = depth.z[v, u]
    x = (u - cam.cx) * z / cam.fx
    y = (v - cam.cy) * z / cam.fy
    pts_cam = np.stack([x, y, z], axis=1)
    return PointCloud(cam.camera_to_world(pts_cam))


def project(cloud: PointCloud, cam: PinholeCamera, width: int, height: int) -> DepthMap:
    """Z-buffer render a point cloud into a depth map.

    Each point lands on its nearest pixel (half-up rounding); the smallest
    camera depth wins. Points behind the camera or outside the frame are
    skipped; untouched pixels come back masked invalid.
    """
    if len(cloud) == 0:
        raise EmptyInput("project: empty point cloud")
    pc = cam.world_to_camera(cloud.points)
    z = pc[:, 2]
    front = z > 0
    u = np.floor(cam.fx * pc[front, 0] / z[front] + cam.cx + 0.5).astype(np.int64)
    v = np.floor(cam.fy * pc[front, 1] / z[front] + cam.cy + 0.5).astype(np.int64)
    zf = z[front]
    inside = (u >= 0) & (u < width) & (v >= 0) & (v < height)
    u, v, zf = u[inside], v[inside], zf[inside]

    zbuf = np.full((height, width), np.inf)
    # np.minimum.at handles duplicate pixels with nearest-depth-wins semantics
    np.minimum.at(zbuf, (v, u), zf)
    mask = np.isfinite(zbuf)
    out = np.zeros((height, width))
    out[mask] = zbuf[mask]
    return DepthMap(out, mask)
