"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``SPINRT_PURE=1`` in the environment to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("SPINRT_PURE", "") not in ("", "0"):
    _impl = None
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = None

if _impl is None:
    apply_gate = _kernels_py.apply_gate
    BACKEND = "python"
else:
    apply_gate = _impl.apply_gate
    BACKEND = "compiled"

apply_gate_py = _kernels_py.apply_gate
