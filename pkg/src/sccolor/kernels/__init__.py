"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled extension is used when it imports; setting the environment
variable ``SCCOLOR_PURE_PYTHON=1`` forces the fallback.  ``BACKEND`` names
the active choice.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("SCCOLOR_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

smallest_last = _active.smallest_last
prune = _active.prune
greedy_color = _active.greedy_color
backtrack = _active.backtrack

__all__ = [
    "BACKEND",
    "backtrack",
    "compiled_backend",
    "greedy_color",
    "prune",
    "python_backend",
    "smallest_last",
]
