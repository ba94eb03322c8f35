"""Float kernel selection.

The compiled extension ``drgtight._kernels`` is used when it was built;
otherwise (or when ``DRGTIGHT_PURE_PYTHON`` is set) the pure-Python
implementation in ``drgtight._kernels_py`` is used.  Both expose
``sturm_count``, ``bisect_eigenvalues`` and ``pcs_float``.
"""
import os

from . import _kernels_py

if os.environ.get("DRGTIGHT_PURE_PYTHON"):
    _impl = None
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = None

if _impl is None:
    _impl = _kernels_py
    BACKEND = "python"
else:
    BACKEND = "cython"

sturm_count = _impl.sturm_count
bisect_eigenvalues = _impl.bisect_eigenvalues
pcs_float = _impl.pcs_float


def backends():
    """Map backend name to module for every backend importable here."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
