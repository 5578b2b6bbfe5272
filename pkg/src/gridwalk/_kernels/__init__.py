"""Graph-traversal kernels: compiled core with pure-Python fallback.

The compiled extension (_core, built from _core.pyx) is preferred; when it
is missing, or GRIDWALK_PURE=1 is set, the pure-Python implementations are
used instead. Both backends produce bit-identical arrays.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("GRIDWALK_PURE") == "1":
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

bfs_distances = _impl.bfs_distances
shortest_path_counts = _impl.shortest_path_counts
harmonic_closeness = _impl.harmonic_closeness
betweenness = _impl.betweenness

__all__ = [
    "BACKEND",
    "bfs_distances",
    "shortest_path_counts",
    "harmonic_closeness",
    "betweenness",
    "pure",
]
