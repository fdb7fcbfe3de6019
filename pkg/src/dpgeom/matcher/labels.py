"""Disparity hypothesis grid for the cost volume."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError

__all__ = ["DisparityLabels", "DEFAULT_D_MIN", "DEFAULT_D_MAX", "DEFAULT_STEP"]

# Working range of the quarter-resolution capture rig; 0.5 px spacing gives
# 33 evenly spaced hypotheses over [-4, 12].
DEFAULT_D_MIN = -4.0
DEFAULT_D_MAX = 12.0
DEFAULT_STEP = 0.5


@dataclass(frozen=True)
class DisparityLabels:
    """Evenly spaced disparity labels d^1 = d_min .. d^M = d_max."""

    d_min: float = DEFAULT_D_MIN
    d_max: float = DEFAULT_D_MAX
    count: int = 33

    def __post_init__(self):
        if self.count < 2:
            raise DomainError("DisparityLabels: need at least 2 labels")
        if not self.d_max > self.d_min:
            raise DomainError("DisparityLabels: d_max must exceed d_min")

    @classmethod
    def from_step(cls, d_min: float, d_max: float, step: float) -> "DisparityLabels":
        if step <= 0:
            raise DomainError("DisparityLabels: step must be > 0")
        n = (d_max - d_min) / step
        if abs(n - round(n)) > 1e-9:
            raise DomainError("DisparityLabels: step must divide the label range exactly")
        return cls(d_min, d_max, int(round(n)) + 1)

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.d_min, self.d_max, self.count)

    @property
    def step(self) -> float:
        return (self.d_max - self.d_min) / (self.count - 1)
