"""Kernel backend selection.

Prefers the compiled extension; falls back to the blocked-numpy
implementation when the extension is unavailable or when the environment
variable ``YULESIMON_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("YULESIMON_PURE_PYTHON") == "1":
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Name of the active kernel backend: ``"cython"`` or ``"python"``."""
    return BACKEND
