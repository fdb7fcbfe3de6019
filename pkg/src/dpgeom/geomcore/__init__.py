"""Shared containers, camera model and file I/O."""

from .camera import PinholeCamera, back_project, project
from .fileio import (
    read_depth_pfm,
    read_disparity_pfm,
    read_json,
    read_normal_pfm,
    read_pfm,
    read_pgm16,
    read_png16,
    read_ply,
    write_depth_pfm,
    write_disparity_pfm,
    write_json,
    write_normal_pfm,
    write_pfm,
    write_pgm16,
    write_png16,
    write_ply,
)
from .types import DepthMap, DisparityMap, ImageF, NormalMap, PointCloud
