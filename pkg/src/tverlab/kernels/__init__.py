"""Kernel selection: compiled extension if present, pure Python otherwise.

Set TVERLAB_PURE_KERNEL=1 to force the pure twin (used by the benchmark
and by the equivalence tests).
"""
import os

if os.environ.get("TVERLAB_PURE_KERNEL"):
    from . import simplex_py as _impl
else:
    try:
        from . import _speed as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import simplex_py as _impl

phase1 = _impl.phase1
KERNEL_NAME = _impl.KERNEL_NAME


def backend():
    """Name of the active kernel: 'compiled' or 'pure'."""
    return KERNEL_NAME
