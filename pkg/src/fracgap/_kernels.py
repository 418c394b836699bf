"""Select the compiled kernels when available, otherwise the pure-Python ones.

Set ``FRACGAP_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("FRACGAP_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

jacobi_eigh = _impl.jacobi_eigh
enumerate_cycles = _impl.enumerate_cycles


def backends() -> dict:
    """Every importable backend by name, for cross-checking and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
