"""Classical narrow-baseline dual-pixel stereo matcher."""

from .cost import CostVolume, MatchConfig, build_cost_volume
from .labels import DisparityLabels
from .normals import normals_from_depth
from .regress import regress_disparity
from .shift import SHIFT_METHODS, shift_subpixel
