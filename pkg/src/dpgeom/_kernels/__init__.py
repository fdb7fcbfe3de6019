"""Kernel backend selection: compiled Cython core with a numpy fallback.

The compiled extension is preferred when importable; set DPGEOM_NO_EXT=1
to force the fallback (used by the benchmark and backend-agreement tests).
``BACKEND`` records which implementation is live.
"""

import importlib
import os

from . import pyfallback

BACKEND = "python"
_core = None
if not os.environ.get("DPGEOM_NO_EXT"):
    try:
        _core = importlib.import_module("._core", __name__)
        BACKEND = "cython"
    except ImportError:
        _core = None


def halfdisc_gather(src, disp, side, out, row0, row1):
    """Dispatch the defocus gather to the active backend."""
    if BACKEND == "cython":
        _core.halfdisc_gather(src, disp, side, out, row0, row1)
    else:
        pyfallback.halfdisc_gather(src, disp, side, out, row0, row1)
