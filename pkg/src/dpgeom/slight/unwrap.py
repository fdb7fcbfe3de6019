"""Phase unwrapping: absolute projector coordinates from band + phase.

The phase period spans exactly two gray bands, so the band's low bit says
which half-period the pixel is in. When the wrapped phase and that half
disagree by more than pi (a gray misread at a band boundary, or phase
noise at a wrap), the phase is corrected by +-2*pi, which moves the pixel
across the adjacent band boundary. Clean data never triggers the
correction, keeping self-decoding exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, ShapeError
from .patterns import PatternSet

__all__ = ["PhaseField", "unwrap"]


@dataclass(frozen=True, eq=False)
class PhaseField:
    """Unwrapped projector coordinates (projector pixels) with a mask."""

    unwrapped: np.ndarray
    mask: np.ndarray
    extent: float

    def __post_init__(self):
        u = np.ascontiguousarray(self.unwrapped, dtype=np.float64)
        m = np.ascontiguousarray(self.mask, dtype=bool)
        if u.ndim != 2 or m.shape != u.shape:
            raise ShapeError("PhaseField: unwrapped/mask shape mismatch")
        uv = u[m]
        if uv.size and (np.any(~np.isfinite(uv)) or np.any(uv < 0) or np.any(uv >= self.extent)):
            raise DomainError("PhaseField: valid coordinates must lie in [0, extent)")
        u.flags.writeable = False
        m.flags.writeable = False
        object.__setattr__(self, "unwrapped", u)
        object.__setattr__(self, "mask", m)

    @property
    def height(self):
        return self.unwrapped.shape[0]

    @property
    def width(self):
        return self.unwrapped.shape[1]


def unwrap(
    band_index: np.ndarray,
    wrapped: np.ndarray,
    cfg: PatternSet,
    orientation: str = "horizontal",
    mask: np.ndarray = None,
) -> PhaseField:
    """Combine gray band indices with wrapped phase into absolute coordinates.

    coordinate = period_start(band) + (phi / 2*pi) * phase_period, where
    period_start is the start of the two-band period containing the band,
    after the +-2*pi half-period correction described above. Coordinates
    pushed outside [0, extent) by the correction are masked.
    """
    band = np.asarray(band_index)
    phi = np.asarray(wrapped, dtype=np.float64)
    if band.shape != phi.shape:
        raise ShapeError("unwrap: band/phase shape mismatch")
    if orientation not in cfg.orientations:
        raise DomainError(f"unwrap: {orientation!r} not in pattern config")
    m = np.ones(phi.shape, dtype=bool) if mask is None else np.asarray(mask, dtype=bool)

    period = float(cfg.phase_period)
    period_index = band >> 1
    half = band & 1
    corr = phi.copy()
    corr[(half == 0) & (phi > 1.5 * np.pi)] -= 2.0 * np.pi
    corr[(half == 1) & (phi < 0.5 * np.pi)] += 2.0 * np.pi
    coord = period_index * period + corr / (2.0 * np.pi) * period

    extent = float(cfg.extent(orientation))
    ok = m & (coord >= 0) & (coord < extent) & (band >= 0) & (band < (1 << cfg.gray_bits))
    return PhaseField(np.where(ok, coord, 0.0), ok, extent)
