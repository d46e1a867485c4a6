"""Hot-loop primitives with a compiled core and a pure-Python fallback.

The compiled extension is selected at import time when available; set
``CIRCULANT_LAB_PURE=1`` to force the fallback (used by the benchmark and by
the backend-equivalence tests).  Both backends implement the same contract;
see ``pure.py`` for the reference semantics.
"""
import os

from circulant_lab._kernels import pure

if os.environ.get("CIRCULANT_LAB_PURE"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from circulant_lab._kernels import _speedups as _impl
        BACKEND = "c"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

compose_images = _impl.compose_images
inverse_images = _impl.inverse_images
cycle_lengths = _impl.cycle_lengths
is_semiregular_images = _impl.is_semiregular_images
preserves_adjacency = _impl.preserves_adjacency
refine_colors = _impl.refine_colors


def build_csr(adjacency):
    """Flatten sorted neighbor lists into (ptr, flat) index arrays."""
    ptr = [0]
    flat = []
    for nbrs in adjacency:
        flat.extend(nbrs)
        ptr.append(len(flat))
    return ptr, flat
