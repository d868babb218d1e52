"""Backend selection for the hot loops.

The compiled extension is preferred; set ``SKEWCODES_PURE=1`` to force the
pure-Python fallback.
"""
import os

from . import _pykernels

if os.environ.get("SKEWCODES_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
span_words = _impl.span_words
min_weight = _impl.min_weight
right_divisor_tails = _impl.right_divisor_tails


def available_backends():
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        return out
    out["cython"] = _ckernels
    return out
