"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the numpy/Python
fallback takes over.  Setting ``TGL_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("TGL_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl
        BACKEND = "python"

graphic_rank_table = _impl.graphic_rank_table
canonical_reps = _impl.canonical_reps
canonical_form_max = _impl.canonical_form_max
oracle_forms = _impl.oracle_forms
graph_predicate = _impl.graph_predicate
edge_index = _impl.edge_index
edge_pairs = _impl.edge_pairs

__all__ = [
    "BACKEND",
    "graphic_rank_table",
    "canonical_reps",
    "canonical_form_max",
    "oracle_forms",
    "graph_predicate",
    "edge_index",
    "edge_pairs",
]
