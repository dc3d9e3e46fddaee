"""Kernel backend selection: compiled extension if present, numpy fallback
otherwise.  Set BANACH_GEOM_PURE_PYTHON=1 to force the fallback."""

from __future__ import annotations

import os

if os.environ.get("BANACH_GEOM_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND_NAME

tz_norm = _impl.tz_norm
chart_scan = _impl.chart_scan
refine_max = _impl.refine_max
lambda_scan = _impl.lambda_scan
