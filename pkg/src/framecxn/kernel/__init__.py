"""Matching kernel selection.

The compiled extension is preferred when it was built; otherwise the
pure-Python implementation takes over.  FRAMECXN_KERNEL=pure forces the
fallback (useful for benchmarking and for debugging the extension),
FRAMECXN_KERNEL=native makes a missing extension a hard error.
"""

import os

from .prep import CompiledCxn, LabelTable, PreparedTree

_requested = os.environ.get("FRAMECXN_KERNEL", "").strip().lower()

if _requested == "pure":
    from .pure import enumerate_bindings
    BACKEND = "pure"
else:
    try:
        from ._native import enumerate_bindings
        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise
        from .pure import enumerate_bindings
        BACKEND = "pure"

__all__ = ["BACKEND", "CompiledCxn", "LabelTable", "PreparedTree",
           "enumerate_bindings"]
