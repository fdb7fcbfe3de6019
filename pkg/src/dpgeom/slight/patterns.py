"""Structured-light pattern stack: inverse gray code plus phase shifting.

Each coded axis is divided into 2^gray_bits bands of ``stripe`` pixels.
Every gray-code image is projected together with its photographic negative
(inverse gray code) so each bit decodes from a per-pixel comparison. The
sinusoidal phase patterns have a period of exactly two bands: the band
index then gives half-period resolution, which is what lets the decoder
correct gray/phase disagreements at band boundaries (see unwrap).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..geomcore.types import ImageF

__all__ = ["PatternSet", "generate_patterns", "pattern_names", "gray_encode", "gray_decode_int"]

ORIENTATIONS = ("horizontal", "vertical")


def gray_encode(b):
    return b ^ (b >> 1)


def gray_decode_int(g: np.ndarray) -> np.ndarray:
    """Vectorized inverse gray code on a non-negative integer array."""
    b = g.copy()
    shift = g >> 1
    while np.any(shift):
        b ^= shift
        shift >>= 1
    return b


@dataclass(frozen=True)
class PatternSet:
    """Pattern stack configuration.

    phase_period must equal two gray stripes, and the gray code must tile
    the coded extent exactly: stripe * 2^gray_bits == extent per coded axis.
    """

    proj_width: int = 1024
    proj_height: int = 1024
    gray_bits: int = 6
    phase_steps: int = 8
    phase_period: int = None
    orientations: tuple = ORIENTATIONS

    def __post_init__(self):
        if self.gray_bits < 1:
            raise DomainError("PatternSet: gray_bits must be >= 1")
        if self.phase_steps < 3:
            raise DomainError("PatternSet: phase_steps must be >= 3")
        if not self.orientations or any(o not in ORIENTATIONS for o in self.orientations):
            raise DomainError(f"PatternSet: orientations must be a subset of {ORIENTATIONS}")
        object.__setattr__(self, "orientations", tuple(self.orientations))
        if self.phase_period is None:
            object.__setattr__(self, "phase_period", 2 * self.stripe(self.orientations[0]))
        for o in self.orientations:
            stripe = self.extent(o) // (1 << self.gray_bits)
            if stripe < 1 or stripe * (1 << self.gray_bits) != self.extent(o):
                raise DomainError(
                    f"PatternSet: 2^gray_bits stripes must tile the {o} extent exactly"
                )
            if self.phase_period != 2 * stripe:
                raise DomainError(
                    "PatternSet: phase_period must equal two gray stripes "
                    f"({2 * stripe} for {o}), got {self.phase_period}"
                )

    def extent(self, orientation: str) -> int:
        return self.proj_width if orientation == "horizontal" else self.proj_height

    def stripe(self, orientation: str) -> int:
        return self.extent(orientation) // (1 << self.gray_bits)

    def images_per_orientation(self) -> int:
        return 2 * self.gray_bits + self.phase_steps

    def to_dict(self) -> dict:
        return {
            "proj_width": self.proj_width,
            "proj_height": self.proj_height,
            "gray_bits": self.gray_bits,
            "phase_steps": self.phase_steps,
            "phase_period": self.phase_period,
            "orientations": list(self.orientations),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PatternSet":
        return cls(
            proj_width=d["proj_width"],
            proj_height=d["proj_height"],
            gray_bits=d["gray_bits"],
            phase_steps=d["phase_steps"],
            phase_period=d.get("phase_period"),
            orientations=tuple(d.get("orientations", ORIENTATIONS)),
        )


def gray_code_profile(cfg: PatternSet, orientation: str, bit: int) -> np.ndarray:
    """1D gray-code profile along the coded axis (MSB is bit 0)."""
    p = np.arange(cfg.extent(orientation))
    band = p // cfg.stripe(orientation)
    code = gray_encode(band)
    shift = cfg.gray_bits - 1 - bit
    return ((code >> shift) & 1).astype(np.float64)


def phase_profile(cfg: PatternSet, orientation: str, k: int) -> np.ndarray:
    """1D phase-shift profile: 0.5 + 0.5*cos(2*pi*p/period - 2*pi*k/K)."""
    p = np.arange(cfg.extent(orientation), dtype=np.float64)
    return 0.5 + 0.5 * np.cos(2.0 * np.pi * p / cfg.phase_period - 2.0 * np.pi * k / cfg.phase_steps)


def _expand(profile: np.ndarray, cfg: PatternSet, orientation: str) -> ImageF:
    if orientation == "horizontal":
        return ImageF(np.tile(profile[None, :], (cfg.proj_height, 1)))
    return ImageF(np.tile(profile[:, None], (1, cfg.proj_width)))


def generate_patterns(cfg: PatternSet) -> list:
    """Full projector stack: per orientation, gray codes, their inverses,
    then the phase-shift sinusoids."""
    out = []
    for o in cfg.orientations:
        profiles = [gray_code_profile(cfg, o, b) for b in range(cfg.gray_bits)]
        out += [_expand(p, cfg, o) for p in profiles]
        out += [_expand(1.0 - p, cfg, o) for p in profiles]
        out += [_expand(phase_profile(cfg, o, k), cfg, o) for k in range(cfg.phase_steps)]
    return out


def pattern_names(cfg: PatternSet) -> list:
    """File-name stems aligned with generate_patterns order."""
    names = []
    for o in cfg.orientations:
        tag = o[0]
        names += [f"{tag}_gray_{b:02d}" for b in range(cfg.gray_bits)]
        names += [f"{tag}_inv_{b:02d}" for b in range(cfg.gray_bits)]
        names += [f"{tag}_phase_{k:02d}" for k in range(cfg.phase_steps)]
    return names
