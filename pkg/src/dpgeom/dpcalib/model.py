"""Affine disparity/inverse-depth calibration model and converters.

The model is d = A + B/Z with A in pixels (bias) and B in pixel-meters
(slope against inverse depth). The focus distance follows as g = -B/A:
at Z = g the disparity vanishes, so A + B/g = 0. Aperture L = f/N, and
alpha is recovered from B = -alpha * L*f/(1 - f/g) / pixel_pitch.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, InconsistentOptics
from ..geomcore.types import DepthMap, DisparityMap
from ..dpsim.optics import OpticsConfig

__all__ = ["DpCalibration", "disparity_to_depth", "depth_to_disparity"]

logger = logging.getLogger(__name__)

_REL_TOL = 1e-9
DEFAULT_EPS_DIV = 1e-9


@dataclass(frozen=True)
class DpCalibration:
    """Calibrated parameter set tying disparity (pixels) to depth (meters)."""

    A: float
    B: float
    f: float
    N: float
    g: float
    L: float
    alpha: float
    pixel_pitch: float
    residual_rms: float = None

    def __post_init__(self):
        if self.B == 0:
            raise DomainError("DpCalibration: B must be nonzero")
        if self.A == 0 or not np.isfinite(self.g):
            raise InconsistentOptics("DpCalibration: focus distance undefined (A = 0)")
        if abs(self.g - (-self.B / self.A)) > _REL_TOL * abs(self.g):
            raise InconsistentOptics("DpCalibration: g inconsistent with -B/A")
        if abs(self.L - self.f / self.N) > _REL_TOL * abs(self.L):
            raise InconsistentOptics("DpCalibration: L inconsistent with f/N")

    @classmethod
    def from_optics(cls, optics: OpticsConfig) -> "DpCalibration":
        """Exact calibration implied by a forward-model optics config."""
        gain = optics.blur_gain  # pixels * meters per (1/Z) unit, with sign
        return cls(
            A=gain / optics.focus_distance,
            B=-gain,
            f=optics.focal_length,
            N=optics.f_number,
            g=optics.focus_distance,
            L=optics.aperture,
            alpha=optics.alpha,
            pixel_pitch=optics.pixel_pitch,
        )

    def to_dict(self) -> dict:
        d = {
            "A": self.A,
            "B": self.B,
            "f": self.f,
            "N": self.N,
            "g": self.g,
            "L": self.L,
            "alpha": self.alpha,
            "pixel_pitch": self.pixel_pitch,
        }
        if self.residual_rms is not None:
            d["residual_rms"] = self.residual_rms
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DpCalibration":
        return cls(
            A=d["A"],
            B=d["B"],
            f=d["f"],
            N=d["N"],
            g=d["g"],
            L=d["L"],
            alpha=d["alpha"],
            pixel_pitch=d["pixel_pitch"],
            residual_rms=d.get("residual_rms"),
        )


def disparity_to_depth(
    d: DisparityMap, calib: DpCalibration, eps_div: float = DEFAULT_EPS_DIV
) -> DepthMap:
    """Invert the affine model: Z = B / (d - A).

    Pixels within eps_div of the d = A pole, and pixels whose inverse is
    non-positive, are masked invalid (their counts are logged).
    """
    denom = d.d - calib.A
    safe = np.abs(denom) >= eps_div
    z = np.zeros_like(d.d)
    np.divide(calib.B, denom, out=z, where=safe)
    ok = d.mask & safe & (z > 0) & np.isfinite(z)
    n_sing = int((d.mask & ~safe).sum())
    n_neg = int((d.mask & safe & ~((z > 0) & np.isfinite(z))).sum())
    if n_sing or n_neg:
        logger.debug(
            "disparity_to_depth: masked %d near-singular and %d non-positive pixels",
            n_sing,
            n_neg,
        )
    return DepthMap(np.where(ok, z, 0.0), ok)


def depth_to_disparity(z: DepthMap, calib: DpCalibration) -> DisparityMap:
    """Apply the affine model: d = A + B/Z on valid pixels."""
    d = np.zeros_like(z.z)
    m = z.mask
    d[m] = calib.A + calib.B / z.z[m]
    return DisparityMap(d, z.mask)
