"""Absolute depth metrics, angular normal metrics, anti-spoofing rates."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError, EmptyInput, ShapeError
from ..geomcore.types import DepthMap, NormalMap
from .report import MetricReport, co_valid_values

__all__ = ["depth_metrics", "normal_metrics", "spoof_metrics", "DEFAULT_TAU"]

DEFAULT_TAU = 1.01
_UNIT_TOL = 1e-3


def depth_metrics(pred: DepthMap, gt: DepthMap, tau: float = DEFAULT_TAU) -> MetricReport:
    """RMSE, AbsRel, MAE and threshold ratios delta^i (i = 1..3).

    delta^i is the fraction of pixels with max(Z/Zhat, Zhat/Z) < tau^i.
    Only co-valid pixels contribute; ground truth must be positive (the
    DepthMap type guarantees it).
    """
    pv, gv = co_valid_values(pred, gt)
    err = gv - pv
    ratio = np.maximum(gv / pv, pv / gv)
    values = {
        "rmse": float(np.sqrt(np.mean(err * err))),
        "absrel": float(np.mean(np.abs(err / gv))),
        "mae": float(np.mean(np.abs(err))),
    }
    for i in (1, 2, 3):
        values[f"delta{i}"] = float(np.mean(ratio < tau**i))
    return MetricReport(values, pixel_count=pv.size)


def normal_metrics(pred: NormalMap, gt: NormalMap) -> MetricReport:
    """Mean and root-mean-square angular error in degrees.

    Dot products are clamped to [-1, 1] before arccos so that unit vectors
    touched by roundoff cannot produce NaN angles.
    """
    if pred.n.shape != gt.n.shape:
        raise ShapeError("normal_metrics: shape mismatch")
    m = pred.mask & gt.mask
    if not m.any():
        raise EmptyInput("normal_metrics: no co-valid pixels")
    pn = pred.n[m]
    gn = gt.n[m]
    for name, v in (("pred", pn), ("gt", gn)):
        worst = float(np.abs(np.linalg.norm(v, axis=1) - 1.0).max())
        if worst > _UNIT_TOL:
            raise DomainError(f"normal_metrics: {name} normals off unit length by {worst:.3g}")
    ang = np.degrees(np.arccos(np.clip((pn * gn).sum(axis=1), -1.0, 1.0)))
    values = {
        "mae_deg": float(ang.mean()),
        "rmsae_deg": float(np.sqrt(np.mean(ang * ang))),
    }
    return MetricReport(values, pixel_count=int(m.sum()))


def spoof_metrics(samples) -> MetricReport:
    """APCER, BPCER and their mean ACER from (predicted, true) label pairs.

    Labels are the strings "real" and "fake". APCER is the rate of fake
    samples classified real; BPCER the rate of real samples classified
    fake.
    """
    samples = list(samples)
    for pred, true in samples:
        if pred not in ("real", "fake") or true not in ("real", "fake"):
            raise DomainError(f"spoof_metrics: labels must be 'real'/'fake', got ({pred!r}, {true!r})")
    n_fake = sum(1 for _, t in samples if t == "fake")
    n_real = len(samples) - n_fake
    if n_fake == 0 or n_real == 0:
        raise DomainError("spoof_metrics: need at least one real and one fake sample")
    apcer = sum(1 for p, t in samples if t == "fake" and p == "real") / n_fake
    bpcer = sum(1 for p, t in samples if t == "real" and p == "fake") / n_real
    values = {"apcer": apcer, "bpcer": bpcer, "acer": (apcer + bpcer) / 2.0}
    return MetricReport(values, pixel_count=len(samples))
