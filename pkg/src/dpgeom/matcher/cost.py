"""Sub-pixel cost volume over raw-intensity window costs.

For every disparity label the right view is resampled by each enabled
sampling method; windowed SAD (negated) or ZNCC scores each hypothesis
against the left view; the per-method scores fuse by per-pixel maximum
(a non-learned stand-in for attention-based feature selection) and a box
filter aggregates spatially. Scores follow the higher-is-better convention
throughout so a softmax can be applied directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import uniform_filter

from ..errors import DomainError, ShapeError
from ..dpsim.optics import DpImagePair
from ..geomcore.types import ImageF
from .labels import DisparityLabels
from .shift import SHIFT_METHODS, shift_subpixel

__all__ = ["MatchConfig", "CostVolume", "build_cost_volume"]

_VAR_EPS = 1e-12


@dataclass(frozen=True)
class MatchConfig:
    """Window matching parameters."""

    window: int = 9
    cost_kind: str = "zncc"
    sampling: tuple = SHIFT_METHODS
    aggregate_radius: int = 2
    softmax_temperature: float = 0.02

    def __post_init__(self):
        if self.window < 3 or self.window % 2 == 0:
            raise DomainError("MatchConfig: window must be odd and >= 3")
        if self.cost_kind not in ("sad", "zncc"):
            raise DomainError("MatchConfig: cost_kind must be 'sad' or 'zncc'")
        if not self.sampling:
            raise DomainError("MatchConfig: sampling must be non-empty")
        for s in self.sampling:
            if s not in SHIFT_METHODS:
                raise DomainError(f"MatchConfig: unknown sampling method {s!r}")
        if self.aggregate_radius < 0:
            raise DomainError("MatchConfig: aggregate_radius must be >= 0")
        if self.softmax_temperature <= 0:
            raise DomainError("MatchConfig: softmax_temperature must be > 0")
        object.__setattr__(self, "sampling", tuple(self.sampling))


@dataclass(frozen=True, eq=False)
class CostVolume:
    """H x W x M matching scores (higher = better) with their labels.

    ``valid`` marks pixels whose every window/shift stayed inside the image.
    """

    labels: DisparityLabels
    cost: np.ndarray
    valid: np.ndarray = None

    def __post_init__(self):
        c = np.ascontiguousarray(self.cost, dtype=np.float64)
        if c.ndim != 3 or c.shape[2] != self.labels.count:
            raise ShapeError(
                f"CostVolume: cost shape {c.shape} inconsistent with {self.labels.count} labels"
            )
        if not np.all(np.isfinite(c)):
            raise DomainError("CostVolume: non-finite scores")
        valid = np.ones(c.shape[:2], dtype=bool) if self.valid is None else self.valid
        valid = np.ascontiguousarray(valid, dtype=bool)
        if valid.shape != c.shape[:2]:
            raise ShapeError("CostVolume: valid mask shape mismatch")
        c.flags.writeable = False
        valid.flags.writeable = False
        object.__setattr__(self, "cost", c)
        object.__setattr__(self, "valid", valid)

    @property
    def height(self):
        return self.cost.shape[0]

    @property
    def width(self):
        return self.cost.shape[1]


def _window_score(left, shifted, window, kind):
    if kind == "sad":
        return -uniform_filter(np.abs(left - shifted), size=window, mode="nearest")
    # zncc
    m_l = uniform_filter(left, size=window, mode="nearest")
    m_r = uniform_filter(shifted, size=window, mode="nearest")
    m_ll = uniform_filter(left * left, size=window, mode="nearest")
    m_rr = uniform_filter(shifted * shifted, size=window, mode="nearest")
    m_lr = uniform_filter(left * shifted, size=window, mode="nearest")
    var_l = np.maximum(m_ll - m_l * m_l, 0.0)
    var_r = np.maximum(m_rr - m_r * m_r, 0.0)
    cov = m_lr - m_l * m_r
    denom = np.sqrt(var_l * var_r)
    out = np.zeros_like(cov)
    np.divide(cov, denom, out=out, where=denom > _VAR_EPS)
    return np.clip(out, -1.0, 1.0)


def build_cost_volume(pair: DpImagePair, labels: DisparityLabels, cfg: MatchConfig) -> CostVolume:
    """Score every disparity hypothesis for every pixel."""
    left = pair.left.data
    right = pair.right
    h, w = left.shape
    vals = labels.values
    cost = np.empty((h, w, labels.count))
    for m, d in enumerate(vals):
        per_method = None
        for method in cfg.sampling:
            shifted = shift_subpixel(right, float(d), method).data
            score = _window_score(left, shifted, cfg.window, cfg.cost_kind)
            per_method = score if per_method is None else np.maximum(per_method, score)
        cost[:, :, m] = per_method
    if cfg.aggregate_radius > 0:
        size = 2 * cfg.aggregate_radius + 1
        for m in range(labels.count):
            cost[:, :, m] = uniform_filter(cost[:, :, m], size=size, mode="nearest")

    margin = (
        cfg.window // 2
        + cfg.aggregate_radius
        + int(np.ceil(max(abs(labels.d_min), abs(labels.d_max))))
        + 1
    )
    valid = np.zeros((h, w), dtype=bool)
    if h > 2 * margin and w > 2 * margin:
        valid[margin : h - margin, margin : w - margin] = True
    return CostVolume(labels, cost, valid)
