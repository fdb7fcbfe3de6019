"""Depth, normal and anti-spoofing metrics plus loss-style scores."""

from .affine import affine_fit_l1, affine_fit_l2, aiwe
from .losses import cosine_normal_loss, smooth_l1
from .report import MetricReport
from .scores import DEFAULT_TAU, depth_metrics, normal_metrics, spoof_metrics
