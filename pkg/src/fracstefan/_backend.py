"""Pick the kernel implementation at import time.

The compiled extension is preferred; setting the environment variable
``FRACSTEFAN_PURE_PYTHON`` to a non-empty value forces the fallback.
"""

import os

if os.environ.get("FRACSTEFAN_PURE_PYTHON"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.NAME
