"""Kernel backend selection.

The compiled extension ``_fast`` is preferred when it imports cleanly; the
pure-Python module is the fallback and the reference. Setting the
environment variable ``FORESTSAT_PURE=1`` forces the pure backend.

Both backends expose the same functions with identical results; only speed
differs.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("FORESTSAT_PURE") == "1":
    _impl = pure
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND

canon = _impl.canon
components_masks = _impl.components_masks
delete_vertex = _impl.delete_vertex
find_path = _impl.find_path
find_linear_forest = _impl.find_linear_forest
max_matching = _impl.max_matching
matching_at_least = _impl.matching_at_least
berge_tutte_scan = _impl.berge_tutte_scan
