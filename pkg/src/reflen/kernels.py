"""Backend selection for the BFS word-length kernel.

The compiled extension is used when it imported successfully, the element
keys fit in int64, and REFLEN_PURE is unset; otherwise the pure-Python
fallback runs.  Both implement the same contract and are cross-checked in the
test suite.
"""

import os

from . import _bfs_py

UNREACHED = _bfs_py.UNREACHED

try:
    from . import _speedups
except ImportError:
    _speedups = None

HAVE_SPEEDUPS = _speedups is not None


def active_backend():
    if os.environ.get("REFLEN_PURE"):
        return "pure"
    return "compiled" if HAVE_SPEEDUPS else "pure"


def bfs_lengths(elements, gen_ids, dim, p, identity_id, backend=None):
    """Word length of every group element over the given generators.

    elements: flattened dim*dim residue tuples over F_p, the full group.
    Returns a list with UNREACHED for elements outside the generated subgroup.
    """
    if backend is None:
        backend = active_backend()
    if backend == "compiled":
        if _speedups is None:
            raise RuntimeError("compiled kernel is not available")
        if _speedups.key_fits(dim * dim, p):
            return _speedups.bfs_lengths(elements, gen_ids, dim, p, identity_id)
        backend = "pure"  # keys overflow int64; fall through
    return _bfs_py.bfs_lengths(elements, gen_ids, dim, p, identity_id)
