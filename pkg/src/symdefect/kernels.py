"""Backend selection for the multiplicity kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``SYMDEFECT_PURE_PYTHON`` is set to a non-empty value, the
pure-Python ``_pykernels`` module is used.  Both expose the same functions.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_FORCE_PY = bool(os.environ.get("SYMDEFECT_PURE_PYTHON"))

active = _pykernels if (_FORCE_PY or _ckernels is None) else _ckernels
BACKEND = active.BACKEND


def available():
    """Names of the importable backends, compiled first."""
    return [m.BACKEND for m in (_ckernels, _pykernels) if m is not None]


def get(name=None):
    """Return the kernel module called ``name`` (default: the active one)."""
    if name is None:
        return active
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise ImportError("compiled kernels are not built")
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def __getattr__(attr):
    return getattr(active, attr)
