"""Kernel selection: compiled extension when built, pure Python otherwise.

Set SWAPDISC_PURE=1 to force the pure kernel even when the extension is
available (used by the parity tests and the benchmark).
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("SWAPDISC_PURE"):
    _impl = pure
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

scan_chunk = _impl.scan_chunk
BACKEND = _impl.BACKEND


def backend_name() -> str:
    """'compiled' or 'pure', whichever scan_chunk dispatches to."""
    return BACKEND
