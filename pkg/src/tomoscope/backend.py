"""Kernel backend selection.

Prefers the compiled extension ``tomoscope._core`` (Cython + OpenMP) and
falls back to the NumPy implementation when it is not built.  Override with
the ``TOMOSCOPE_BACKEND`` environment variable: ``python`` forces the
fallback, ``compiled`` requires the extension and raises if missing.
"""

from __future__ import annotations

import os

from . import _core_py

_requested = os.environ.get("TOMOSCOPE_BACKEND", "").strip().lower()

if _requested in ("py", "python", "fallback"):
    _impl = _core_py
elif _requested in ("c", "compiled", "ext"):
    from . import _core as _impl  # type: ignore[no-redef]
elif _requested:
    raise RuntimeError(
        f"TOMOSCOPE_BACKEND={_requested!r}: expected 'python' or 'compiled'"
    )
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _core_py

BACKEND = _impl.BACKEND_NAME

oscillator_table = _impl.oscillator_table
pure_grid = _impl.pure_grid
mixed_grid = _impl.mixed_grid
