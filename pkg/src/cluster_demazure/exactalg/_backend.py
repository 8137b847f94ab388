"""Pick the compiled kernels when built, else the pure-Python ones.

Set ``CLUSTER_DEMAZURE_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

kernels = _kernels_py
NAME = "python"

if not os.environ.get("CLUSTER_DEMAZURE_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        NAME = "cython"

WIDTH = _kernels_py.WIDTH
DivisionFailed = _kernels_py.DivisionFailed
