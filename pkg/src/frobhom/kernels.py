"""Integer kernels, compiled when the Cython extension is built.

Set ``FROBHOM_PURE=1`` to force the pure-Python fallback.
"""
from __future__ import annotations

import os
from array import array

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("FROBHOM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

perm_cycles = _impl.perm_cycles
orbit_labels = _impl.orbit_labels
assoc_witness = _impl.assoc_witness
partial_conflict = _impl.partial_conflict
propagate = _impl.propagate
is_homomorphism = _impl.is_homomorphism


def int_buffer(values) -> array:
    """Flat ``int32`` buffer accepted by both backends."""
    return array("i", values)


__all__ = [
    "BACKEND",
    "perm_cycles",
    "orbit_labels",
    "assoc_witness",
    "partial_conflict",
    "propagate",
    "is_homomorphism",
    "int_buffer",
]
