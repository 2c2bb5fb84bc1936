"""Kernel backend selection.

The compiled ``_kernels`` extension is preferred; the numpy fallback is
used when the extension is missing or ``CSST_PURE_PYTHON`` is set to a
non-empty value other than ``0``.
"""

from __future__ import annotations

import os

from . import _fallback

_forced = os.environ.get("CSST_PURE_PYTHON", "") not in ("", "0")

if _forced:
    kernels = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        kernels = _fallback
        BACKEND = "python"


def compiled_kernels():
    """The compiled module, or None when it is not importable."""
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels
