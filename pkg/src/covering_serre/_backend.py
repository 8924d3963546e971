"""Pick the coefficient kernel implementation at import time.

The compiled module is used when it imports and ``COVERING_SERRE_PURE`` is
unset; both expose ``conv`` and ``div_unit``.  On int64 overflow the compiled
kernels raise ``OverflowError`` and the arbitrary-precision ones take over.
"""
import os

from . import _pykernels

NAME = "python"
_fast = None
if os.environ.get("COVERING_SERRE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _fast
        NAME = "cython"
    except ImportError:  # extension not built
        _fast = None


if _fast is not None:
    _fconv = _fast.conv
    _fdiv = _fast.div_unit
    _pconv = _pykernels.conv
    _pdiv = _pykernels.div_unit

    def conv(a0, a1, b0, b1):
        try:
            return _fconv(a0, a1, b0, b1)
        except OverflowError:
            return _pconv(a0, a1, b0, b1)

    def div_unit(n0, n1, d0, d1, u0, u1):
        try:
            return _fdiv(n0, n1, d0, d1, u0, u1)
        except OverflowError:
            return _pdiv(n0, n1, d0, d1, u0, u1)
else:
    conv = _pykernels.conv
    div_unit = _pykernels.div_unit
