"""dpgeom: dual-pixel facial geometry toolkit.

Subpackages
-----------
geomcore     shared containers, camera model, file I/O
dpsim        dual-pixel forward model (signed blur, pair rendering, scenes)
dpcalib      disparity/metric-depth calibration
slight       structured-light pattern generation, decoding, triangulation
photostereo  chrome-ball light calibration and Lambertian normal solving
refine       multi-view consistency filtering and normal-guided refinement
matcher      sub-pixel cost-volume stereo and depth-to-normal plane fits
metrics      depth/normal/anti-spoofing metrics and training losses
cli          command-line interface over all of the above
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as kernel_backend
