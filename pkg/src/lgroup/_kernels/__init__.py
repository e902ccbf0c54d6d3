"""Kernel dispatch: compiled core when available, pure Python otherwise.

Set LGROUP_PURE=1 in the environment to force the pure backend (used by
the benchmark and the backend-agreement tests).  The compiled core packs
group subsets into 64-bit words, so groups with more than 64 elements
fall back to the pure kernels automatically.
"""

import os

from . import pure as _pure

if os.environ.get("LGROUP_PURE"):
    _impl = _pure
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

_COMPILED_MAX_ORDER = 64


def get(n):
    """Kernel module to use for a group with n elements."""
    if _impl is not _pure and n > _COMPILED_MAX_ORDER:
        return _pure
    return _impl


def backends():
    """(active, available) backend names, for diagnostics and benchmarks."""
    avail = ["pure"]
    if _impl is not _pure:
        avail.append(_impl.BACKEND)
    return _impl.BACKEND, avail
