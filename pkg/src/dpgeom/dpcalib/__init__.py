"""Disparity/metric-depth calibration: model fit, conversion, saddle refine."""

from .fit import CalibSample, fit_affine
from .model import DpCalibration, depth_to_disparity, disparity_to_depth
from .saddle import refine_saddle
