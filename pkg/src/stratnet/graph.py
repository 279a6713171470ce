"""Graphs, stratification around an origin, and Szego-Jacobi extraction.

A graph is stored as CSR neighbour arrays; the dense adjacency and the
all-pairs distance table are derived lazily because only the scheme and
Hamiltonian layers need them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from . import kernels
from .errors import ConsistencyError, Disconnected, NotIsg, SelfLoop, VertexOutOfRange

COEFF_ATOL = 1e-10
REFLECT_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple | None = None

    @cached_property
    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        rows = np.repeat(np.arange(self.n), np.diff(self.indptr))
        adj[rows, self.indices] = True
        return adj

    @cached_property
    def sparse_adjacency(self) -> sparse.csr_matrix:
        data = np.ones(len(self.indices), dtype=np.float64)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    @cached_property
    def distances(self) -> np.ndarray:
        return kernels.all_pairs_bfs(self.indptr, self.indices, self.n)

    @property
    def diameter(self) -> int:
        return int(self.distances.max())

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def edges(self) -> list[tuple[int, int]]:
        rows = np.repeat(np.arange(self.n), np.diff(self.indptr))
        keep = rows < self.indices
        return list(zip(rows[keep].tolist(), self.indices[keep].tolist()))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the isomorphic graph in which vertex ``v`` becomes ``perm[v]``."""
        perm = np.asarray(perm)
        return build_graph(self.n, [(int(perm[u]), int(perm[v])) for u, v in self.edges()])


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    pairs = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        pairs.add((min(u, v), max(u, v)))
    if pairs:
        arr = np.array(sorted(pairs), dtype=np.int64)
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    g = Graph(n, indptr, dst.astype(np.int64), tuple(labels) if labels is not None else None)
    levels = bfs_levels(g, 0)
    if (levels < 0).any():
        missing = int(np.flatnonzero(levels < 0)[0])
        raise Disconnected(f"vertex {missing} is unreachable from vertex 0")
    return g


def bfs_levels(g: Graph, origin: int) -> np.ndarray:
    if not 0 <= origin < g.n:
        raise VertexOutOfRange(f"origin {origin} outside 0..{g.n - 1}")
    level = np.full(g.n, -1, dtype=np.int64)
    level[origin] = 0
    queue = deque([origin])
    indptr, indices = g.indptr, g.indices
    while queue:
        u = queue.popleft()
        for v in indices[indptr[u]:indptr[u + 1]]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def distance_matrices(g: Graph) -> list[np.ndarray]:
    """0/1 matrices A_0..A_d with (A_i)[x, y] = 1 iff the distance is i."""
    dist = g.distances
    return [(dist == i).astype(np.int64) for i in range(int(dist.max()) + 1)]


@dataclass(frozen=True)
class Stratification:
    origin: int
    strata: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strata)

    @property
    def diameter(self) -> int:
        return len(self.strata) - 1

    def level_of(self, n: int) -> np.ndarray:
        level = np.empty(n, dtype=np.int64)
        for i, stratum in enumerate(self.strata):
            level[list(stratum)] = i
        return level

    def stratum_states(self, n: int) -> np.ndarray:
        """Rows are the unit stratum states phi_0..phi_d in the vertex basis."""
        phi = np.zeros((len(self.strata), n))
        for i, stratum in enumerate(self.strata):
            phi[i, list(stratum)] = 1.0 / np.sqrt(len(stratum))
        return phi


def stratify(g: Graph, origin: int) -> Stratification:
    level = bfs_levels(g, origin)
    d = int(level.max())
    strata = tuple(tuple(np.flatnonzero(level == i).tolist()) for i in range(d + 1))
    return Stratification(origin, strata)


def is_antipodal(s: Stratification) -> bool:
    return s.sizes[-1] == 1


@dataclass(frozen=True)
class IsgVerdict:
    is_isg: bool
    degrees: tuple[tuple[int, int, int], ...] | None = None
    witness: tuple[int, int] | None = None


def _degree_triples(g: Graph, level: np.ndarray) -> np.ndarray:
    """(kappa_-1, kappa_0, kappa_+1) for every vertex."""
    rows = np.repeat(np.arange(g.n), np.diff(g.indptr))
    delta = level[g.indices] - level[rows]
    triples = np.zeros((g.n, 3), dtype=np.int64)
    np.add.at(triples, (rows, delta + 1), 1)
    return triples


def isg_check(g: Graph, origin: int) -> IsgVerdict:
    s = stratify(g, origin)
    triples = _degree_triples(g, s.level_of(g.n))
    degrees = []
    for stratum in s.strata:
        members = np.asarray(stratum)
        ref = triples[members[0]]
        bad = np.flatnonzero((triples[members] != ref).any(axis=1))
        if bad.size:
            return IsgVerdict(False, witness=(int(members[0]), int(members[bad[0]])))
        degrees.append(tuple(int(x) for x in ref))
    return IsgVerdict(True, degrees=tuple(degrees))


@dataclass(frozen=True)
class SzegoJacobi:
    omega: tuple[float, ...]
    alpha: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(float(w) for w in self.omega))
        object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        if len(self.alpha) != len(self.omega) + 1:
            raise ValueError(
                f"need len(alpha) == len(omega) + 1, got {len(self.alpha)} and {len(self.omega)}"
            )

    @property
    def d(self) -> int:
        return len(self.omega)


def szego_jacobi(g: Graph, origin: int) -> SzegoJacobi:
    verdict = isg_check(g, origin)
    if not verdict.is_isg:
        x, y = verdict.witness
        raise NotIsg(
            f"not an invariant stratification graph from {origin}: "
            f"vertices {x} and {y} share a stratum but have different degree triples",
            verdict,
        )
    s = stratify(g, origin)
    sizes = s.sizes
    omega = [Fraction(sizes[l], sizes[l - 1]) * verdict.degrees[l][0] ** 2
             for l in range(1, len(sizes))]
    alpha = [verdict.degrees[l][1] for l in range(len(sizes))]

    # matrix elements of A between stratum states
    phi = s.stratum_states(g.n)
    a_phi = (g.sparse_adjacency @ phi.T).T
    direct_alpha = np.einsum("ij,ij->i", phi, a_phi)
    direct_omega = np.einsum("ij,ij->i", phi[1:], a_phi[:-1]) ** 2
    closure = a_phi - (a_phi @ phi.T) @ phi
    if np.abs(closure).max(initial=0.0) > COEFF_ATOL:
        raise ConsistencyError("stratification subspace is not invariant under A")
    if (np.abs(direct_omega - np.array(omega, dtype=float)).max(initial=0.0) > COEFF_ATOL
            or np.abs(direct_alpha - np.array(alpha, dtype=float)).max() > COEFF_ATOL):
        raise ConsistencyError(
            f"degree-count coefficients {omega}, {alpha} disagree with matrix elements "
            f"{direct_omega.tolist()}, {direct_alpha.tolist()}"
        )
    return SzegoJacobi(tuple(omega), tuple(alpha))


def _close(x: float, y: float, rtol: float) -> bool:
    return abs(x - y) <= rtol * max(abs(x), abs(y), 1.0)


def is_reflective(c: SzegoJacobi, rtol: float = REFLECT_RTOL) -> bool:
    """Palindromic coefficients: omega_i = omega_{d+1-i} and alpha_i = alpha_{d-i}."""
    w, a = c.omega, c.alpha
    return (all(_close(x, y, rtol) for x, y in zip(w, reversed(w)))
            and all(_close(x, y, rtol) for x, y in zip(a, reversed(a))))
