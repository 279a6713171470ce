"""Association-scheme checks over the distance partition of a graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError, NotScheme
from .graph import Graph, SzegoJacobi, distance_matrices
from .spectral import polynomial_of_matrix


@dataclass(frozen=True, eq=False)
class SchemeVerdict:
    is_scheme: bool
    table: np.ndarray | None = None
    witness: tuple[int, int, int, int] | None = None
    classes: tuple[int, int] | None = None


def _int_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float64 matmul is exact for counts far below 2**53
    return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)


def verify_scheme(g: Graph) -> SchemeVerdict:
    """Decide whether chi(x, y; i, j) depends only on the distance of x and y."""
    mats = distance_matrices(g)
    dist = g.distances
    d = len(mats) - 1
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    firsts = [np.argwhere(dist == k)[0] for k in range(d + 1)]
    for i in range(d + 1):
        for j in range(i, d + 1):
            counts = _int_product(mats[i], mats[j])
            for k in range(d + 1):
                x, y = firsts[k]
                ref = counts[x, y]
                bad = np.argwhere((dist == k) & (counts != ref))
                if bad.size:
                    x2, y2 = bad[0]
                    return SchemeVerdict(False, witness=(int(x), int(y), int(x2), int(y2)),
                                         classes=(i, j))
                p[k, i, j] = p[k, j, i] = ref
    return SchemeVerdict(True, table=p)


def intersection_numbers(g: Graph) -> np.ndarray:
    """Table ``p[k, i, j]`` of intersection numbers; raises ``NotScheme``."""
    verdict = verify_scheme(g)
    if not verdict.is_scheme:
        x, y, x2, y2 = verdict.witness
        i, j = verdict.classes
        raise NotScheme(
            f"pairs ({x},{y}) and ({x2},{y2}) are at equal distance but differ in "
            f"the count of common (distance {i}, distance {j}) vertices",
            verdict.witness,
        )
    return verdict.table


def bose_mesner_residual(mats: list[np.ndarray], p: np.ndarray) -> int:
    worst = 0
    stack = np.stack(mats).astype(np.int64)
    for i in range(len(mats)):
        for j in range(len(mats)):
            lhs = _int_product(mats[i], mats[j])
            rhs = np.tensordot(p[:, i, j], stack, axes=1)
            worst = max(worst, int(np.abs(lhs - rhs).max()))
    return worst


def scheme_szego_jacobi(p: np.ndarray) -> SzegoJacobi:
    """Coefficients read off A|phi_i> expanded in stratum states.

    The coefficient of phi_{i-1} in A phi_i is sqrt(n_{i-1}/n_i) p^{i-1}_{1,i}
    and that of phi_i in A phi_{i-1} is sqrt(n_i/n_{i-1}) p^i_{1,i-1}; both
    square to omega_i, and they are required to agree.
    """
    d = p.shape[0] - 1
    sizes = [int(p[0, i, i]) for i in range(d + 1)]
    omega = []
    for i in range(1, d + 1):
        down = Fraction(sizes[i - 1], sizes[i]) * int(p[i - 1, 1, i]) ** 2
        up = Fraction(sizes[i], sizes[i - 1]) * int(p[i, 1, i - 1]) ** 2
        if down != up:
            raise ConsistencyError(f"omega_{i}: lowering gives {down}, raising gives {up}")
        omega.append(down)
    alpha = [int(p[i, 1, i]) for i in range(d + 1)]
    return SzegoJacobi(tuple(omega), tuple(alpha))


def _classes_and_polys(g: Graph, c: SzegoJacobi):
    mats = distance_matrices(g)
    if len(mats) != c.d + 1:
        raise ConsistencyError(f"graph has {len(mats)} distance classes, sequence has {c.d + 1}")
    return mats, polynomial_of_matrix(c, g.sparse_adjacency)


def adjacency_polynomial_check(g: Graph, c: SzegoJacobi) -> float:
    """max_i max|A_i - P_i(A)| over the distance classes.

    Only classes of size one satisfy A_i = P_i(A); for the others the
    orthonormal polynomial is off by sqrt(n_i). See
    ``distance_polynomial_residual``.
    """
    mats, polys = _classes_and_polys(g, c)
    return float(max(np.abs(a - pm).max() for a, pm in zip(mats, polys)))


def distance_polynomial_residual(g: Graph, c: SzegoJacobi) -> float:
    """max_i max|A_i - sqrt(n_i) P_i(A)|, with n_i the valency of class i."""
    mats, polys = _classes_and_polys(g, c)
    sizes = [int(a[0].sum()) for a in mats]
    return float(max(np.abs(a - np.sqrt(n) * pm).max() for a, n, pm in zip(mats, sizes, polys)))
