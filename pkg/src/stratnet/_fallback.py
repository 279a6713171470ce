"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""

import numpy as np
from scipy import sparse


def all_pairs_bfs(indptr, indices, n):
    """Level-synchronous BFS from all sources at once; -1 marks unreachable pairs."""
    dist = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return dist
    adj = sparse.csr_matrix(
        (np.ones(len(indices), dtype=np.float32), indices, indptr), shape=(n, n)
    )
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    np.fill_diagonal(dist, 0)
    level = 0
    while frontier.any():
        level += 1
        # rows of frontier are sources; columns are vertices
        nxt = np.asarray((adj @ frontier.T.astype(np.float32)).T) > 0
        nxt &= ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def heisenberg_accumulate(out, n_qubits, ks, ls, weights):
    """Add weight * (1/2) sigma_k . sigma_l for every listed pair into ``out``."""
    states = np.arange(1 << n_qubits)
    diag = np.arange(1 << n_qubits)
    for k, l, w in zip(ks, ls, weights):
        k, l = int(k), int(l)
        if k == l:
            out[diag, diag] += 1.5 * w
            continue
        same = ((states >> k) & 1) == ((states >> l) & 1)
        out[diag, diag] += np.where(same, 0.5 * w, -0.5 * w)
        flip = states[~same]
        mask = (1 << k) | (1 << l)
        out[flip ^ mask, flip] += w
