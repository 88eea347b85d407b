"""Kernel backend selection.

The compiled ``_core`` extension is used when it was built; otherwise the
pure-Python ``_pycore`` module. Set ``NETVALUE_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pycore

BACKENDS = {"python": _pycore}

try:
    from . import _core
except ImportError:  # extension not built
    _core = None
else:
    BACKENDS["cython"] = _core

if _core is not None and not os.environ.get("NETVALUE_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]
reach_from = _impl.reach_from
reach_counts = _impl.reach_counts


def get_backend(name=None):
    """Return the kernel module called ``name`` (default: the active one)."""
    if name is None:
        return _impl
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
