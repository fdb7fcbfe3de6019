"""Dual-pixel forward model: optics, signed blur, pair rendering, scenes."""

from .blur import signed_blur
from .optics import DpImagePair, OpticsConfig, dataset_optics
from .render import render_dp, render_view
from .scenes import default_camera, make_test_scene
