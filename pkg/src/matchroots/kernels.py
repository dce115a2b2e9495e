"""Kernel backend selection.

The compiled extension is preferred; the pure-Python twin is the fallback
and the reference implementation.  Set ``MATCHROOTS_PURE=1`` to force the
fallback (used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("MATCHROOTS_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = "python" if _impl is _kernels_py else "cython"

match_count_vector = _impl.match_count_vector
min_adjacency_bits = _impl.min_adjacency_bits
canonical_sweep = _impl.canonical_sweep
