"""Hot-loop kernels with a compiled extension and a numpy fallback.

The compiled module is used when it imported cleanly; set STYLEBREACH_PURE=1
to force the fallback. BACKEND names the active implementation.
"""

import os

from . import _pure

if os.environ.get("STYLEBREACH_PURE"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

best_split_dense = _impl.best_split_dense
build_histograms = _impl.build_histograms
best_split_hist = _impl.best_split_hist
damerau_levenshtein = _impl.damerau_levenshtein

__all__ = [
    "BACKEND",
    "best_split_dense",
    "build_histograms",
    "best_split_hist",
    "damerau_levenshtein",
]
