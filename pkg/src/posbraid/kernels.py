"""Kernel selection: the compiled extension if it imports, else pure Python.

Set ``POSBRAID_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

IMPLEMENTATION = "python"

if os.environ.get("POSBRAID_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        IMPLEMENTATION = "compiled"
    except ImportError:
        _impl = _kernels_py

cycle_count = _impl.cycle_count
cyclic_subsequence = _impl.cyclic_subsequence
linking_edges = _impl.linking_edges
alexander_det = _impl.alexander_det
signature = _impl.signature
census_words = _impl.census_words
