"""Hot-loop kernels with a compiled core and a pure-numpy fallback.

The compiled extension is preferred when it imported cleanly; setting
``SCENEREADER_PURE_PYTHON=1`` forces the fallback (used by the kernel
benchmark and by environments without a C toolchain). ``ACTIVE_BACKEND``
reports which one is live.
"""

import os

from . import _fallback

if os.environ.get("SCENEREADER_PURE_PYTHON"):
    _impl = _fallback
    ACTIVE_BACKEND = "fallback"
else:
    try:
        from . import _native as _impl

        ACTIVE_BACKEND = "native"
    except ImportError:
        _impl = _fallback
        ACTIVE_BACKEND = "fallback"

hsv_mask_coords = _impl.hsv_mask_coords
line_distances = _impl.line_distances
box_median = _impl.box_median
iou_matrix = _impl.iou_matrix

__all__ = [
    "ACTIVE_BACKEND",
    "box_median",
    "hsv_mask_coords",
    "iou_matrix",
    "line_distances",
]
