"""Kernel selection: the compiled extension when available, else pure Python.

Set CONNDIM_PURE=1 in the environment to force the pure kernel regardless of
whether the extension was built.
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("CONNDIM_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

flow_many = _impl.flow_many


def active_kernel() -> str:
    """Name of the kernel in use: "compiled" or "pure"."""
    return _impl.kernel_name()
