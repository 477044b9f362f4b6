"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a drop-in
replacement used when the extension is missing or when the environment
variable CRANKQ_PURE_PYTHON is set to a non-empty value.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CRANKQ_PURE_PYTHON"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py

BACKEND = kernels.BACKEND_NAME
