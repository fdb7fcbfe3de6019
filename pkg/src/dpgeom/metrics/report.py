"""Metric report container and co-validity helpers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyInput, ShapeError
from ..geomcore.types import DepthMap, DisparityMap

__all__ = ["MetricReport", "co_valid_values"]


@dataclass(frozen=True)
class MetricReport:
    """Named scalar metric values plus the pixel count they were computed on."""

    values: dict
    pixel_count: int

    def __post_init__(self):
        if self.pixel_count <= 0:
            raise EmptyInput("MetricReport: pixel_count must be > 0")

    def __getitem__(self, key):
        return self.values[key]

    def to_dict(self) -> dict:
        d = dict(self.values)
        d["pixel_count"] = self.pixel_count
        return d


def _scalar_field(m):
    if isinstance(m, DisparityMap):
        return m.d
    if isinstance(m, DepthMap):
        return m.z
    raise ShapeError(f"expected DepthMap or DisparityMap, got {type(m).__name__}")


def co_valid_values(pred, gt) -> tuple[np.ndarray, np.ndarray]:
    """Flattened (pred, gt) over pixels valid in both maps."""
    p = _scalar_field(pred)
    g = _scalar_field(gt)
    if p.shape != g.shape:
        raise ShapeError(f"shape mismatch: pred {p.shape} vs gt {g.shape}")
    m = pred.mask & gt.mask
    if not m.any():
        raise EmptyInput("no co-valid pixels")
    return p[m], g[m]
