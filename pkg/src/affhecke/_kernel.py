"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``AFFHECKE_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"
if os.environ.get("AFFHECKE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel_c as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = None
else:
    _impl = None

if _impl is None:
    from . import _kernel_py as _impl

add = _impl.add
sub = _impl.sub
scale = _impl.scale
shift = _impl.shift
mul = _impl.mul
axpy = _impl.axpy
