"""Kernel selection.

The compiled extension is used when importable; set APAVOID_PURE=1 to force
the pure-Python fallback (handy for benchmarking one against the other).
``BACKEND`` records which one is live.
"""

import os

if os.environ.get("APAVOID_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

first_repetition = _impl.first_repetition
clean_after_append = _impl.clean_after_append
max_exponent_pair = _impl.max_exponent_pair
