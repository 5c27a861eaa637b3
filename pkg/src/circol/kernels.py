"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` module. Set ``CIRCOL_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

python = _pykernels

try:
    if os.environ.get("CIRCOL_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

active = compiled if compiled is not None else python
BACKEND: str = active.NAME


def available() -> dict:
    """Backend name -> module, for tests and benchmarks."""
    found = {"python": python}
    if compiled is not None:
        found["cython"] = compiled
    return found
