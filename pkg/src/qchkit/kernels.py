"""Kernel selection: the compiled `_speedups` extension when it imports,
otherwise `_purekernels`. Set ``QCHKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _purekernels

if os.environ.get("QCHKIT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purekernels
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purekernels

BACKEND = "compiled" if _impl is not _purekernels else "python"

convolve = _impl.convolve
associativity_defects = _impl.associativity_defects
pairing_defects = _impl.pairing_defects
