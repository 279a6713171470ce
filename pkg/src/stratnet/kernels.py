"""Hot kernels, compiled when the extension is built and numpy otherwise.

``BACKEND`` is ``"cython"`` or ``"python"`` depending on what imported.
"""

import numpy as np

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _fallback


def all_pairs_bfs(indptr, indices, n):
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    return _impl.all_pairs_bfs(indptr, indices, int(n))


def heisenberg_accumulate(out, n_qubits, ks, ls, weights):
    if out.dtype != np.float64 or not out.flags.c_contiguous:
        raise TypeError("out must be a C-contiguous float64 array")
    ks = np.ascontiguousarray(ks, dtype=np.int64)
    ls = np.ascontiguousarray(ls, dtype=np.int64)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    _impl.heisenberg_accumulate(out, int(n_qubits), ks, ls, weights)
    return out
