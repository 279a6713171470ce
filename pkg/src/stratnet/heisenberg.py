"""Full 2^n Heisenberg realisation of distance-class couplings.

Basis index ``s`` encodes qubit ``k`` as bit ``k``; a set bit is spin up, so
the one-excitation state |k> is index ``1 << k``.

Class ``i`` collects the unordered pairs k != l at graph distance ``i``, so
class 0 is empty and its operator is zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DimensionMismatch, RestrictionNotAffine, TooManyQubits
from .graph import Graph, distance_matrices

MAX_QUBITS = 14
MAX_EVOLVE_QUBITS = 12
AFFINE_ATOL = 1e-10


def class_pairs(g: Graph) -> list[tuple[np.ndarray, np.ndarray]]:
    dist = g.distances
    upper = np.triu_indices(g.n, k=1)
    out = []
    for i in range(int(dist.max()) + 1):
        sel = dist[upper] == i
        out.append((upper[0][sel], upper[1][sel]))
    return out


def _check_size(n: int, limit: int = MAX_QUBITS):
    if n > limit:
        raise TooManyQubits(f"{n} qubits exceeds the dense limit of {limit}")


def class_operator(g: Graph, i: int) -> np.ndarray:
    """(1/2) sum over class-i pairs of sigma_k . sigma_l on the full space."""
    _check_size(g.n)
    ks, ls = class_pairs(g)[i]
    out = np.zeros((1 << g.n, 1 << g.n))
    return kernels.heisenberg_accumulate(out, g.n, ks, ls, np.ones(len(ks)))


def heisenberg_hamiltonian(g: Graph, couplings, tstar: float = 1.0) -> np.ndarray:
    """(1/2t*) sum_i J_i sum_{dist(k,l)=i} sigma_k . sigma_l over unordered pairs."""
    _check_size(g.n)
    pairs = class_pairs(g)
    couplings = np.asarray(couplings, dtype=float)
    if len(couplings) != len(pairs):
        raise DimensionMismatch(f"{len(couplings)} couplings for {len(pairs)} distance classes")
    ks = np.concatenate([k for k, _ in pairs])
    ls = np.concatenate([l for _, l in pairs])
    w = np.concatenate([np.full(len(k), j / tstar) for (k, _), j in zip(pairs, couplings)])
    out = np.zeros((1 << g.n, 1 << g.n))
    return kernels.heisenberg_accumulate(out, g.n, ks, ls, w)


def one_excitation_indices(n: int) -> np.ndarray:
    return np.left_shift(1, np.arange(n))


def class_couplings(design_couplings, sizes) -> np.ndarray:
    """Per-class Heisenberg strengths J_i / sqrt(n_i) realising sum_i J_i P_i(A).

    The distance matrices satisfy A_i = sqrt(n_i) P_i(A) on these graphs.
    """
    return np.asarray(design_couplings, dtype=float) / np.sqrt(np.asarray(sizes, dtype=float))


@dataclass
class ClassFit:
    i: int
    a: float
    b: float
    residual: float
    leakage: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _fit_class(op: np.ndarray, a_i: np.ndarray, i: int, n: int) -> ClassFit:
    idx = one_excitation_indices(n)
    block = op[np.ix_(idx, idx)]
    others = np.setdiff1d(np.arange(op.shape[0]), idx)
    leakage = float(np.abs(op[np.ix_(others, idx)]).max(initial=0.0))
    eye = np.eye(n)
    if i == 0:
        # empty class: zero block written as A_0 - I
        a, b = 1.0, -1.0
    else:
        design = np.column_stack([a_i.ravel(), eye.ravel()])
        (a, b), *_ = np.linalg.lstsq(design, block.ravel(), rcond=None)
    residual = float(np.abs(block - a * a_i - b * eye).max())
    return ClassFit(i, float(a), float(b), residual, leakage)


def sector_restriction_check(g: Graph, couplings=None, tstar: float = 1.0,
                             atol: float = AFFINE_ATOL) -> list[ClassFit]:
    """Fit each class operator's one-excitation block as a*A_i + b*I.

    The fits are per unit coupling; ``couplings`` and ``tstar`` are only
    checked for shape and sign. Raises ``RestrictionNotAffine`` when any
    residual exceeds ``atol``.
    """
    _check_size(g.n)
    if tstar <= 0:
        raise ValueError("tstar must be positive")
    mats = distance_matrices(g)
    if couplings is not None and len(couplings) != len(mats):
        raise DimensionMismatch(f"{len(couplings)} couplings for {len(mats)} distance classes")
    fits = [_fit_class(class_operator(g, i), mats[i], i, g.n) for i in range(len(mats))]
    bad = [f for f in fits if f.residual > atol or f.leakage != 0.0]
    if bad:
        f = bad[0]
        raise RestrictionNotAffine(
            f"class {f.i}: residual {f.residual:.3e}, leakage {f.leakage:.3e}"
        )
    return fits


def total_sz(n: int) -> np.ndarray:
    states = np.arange(1 << n)
    ups = np.zeros(1 << n)
    for k in range(n):
        ups += (states >> k) & 1
    return ups - n / 2.0


def magnetization_conservation_check(h: np.ndarray) -> float:
    """max |[H, S_z]| entry; S_z is diagonal so the commutator is H_st (m_t - m_s)."""
    dim = h.shape[0]
    n = dim.bit_length() - 1
    if 1 << n != dim:
        raise DimensionMismatch(f"matrix dimension {dim} is not a power of two")
    m = total_sz(n)
    return float(np.abs(h * (m[None, :] - m[:, None])).max())


@dataclass
class EvolutionReport:
    deviation: float
    shift: float
    full_amplitudes: np.ndarray = field(repr=False)
    sector_amplitudes: np.ndarray = field(repr=False)
    leakage: float = 0.0


def full_vs_sector_evolution(g: Graph, couplings, tstar: float, t: float,
                             origin: int = 0, fits: list[ClassFit] | None = None) -> EvolutionReport:
    """Evolve |origin> with the full Heisenberg operator and with sum_i J_i A_i / t*.

    ``couplings`` are per-class strengths; each is divided by the fitted slope
    before assembling the full operator, and the fitted identity shifts are
    removed as a global phase.
    """
    _check_size(g.n, MAX_EVOLVE_QUBITS)
    fits = fits if fits is not None else sector_restriction_check(g)
    couplings = np.asarray(couplings, dtype=float)
    slopes = np.array([f.a for f in fits])
    shift = float(sum(j * f.b / f.a for j, f in zip(couplings, fits)) / tstar)

    h_full = heisenberg_hamiltonian(g, couplings / slopes, tstar)
    evals, evecs = np.linalg.eigh(h_full)
    start = 1 << origin
    psi_full = evecs @ (np.exp(-1j * evals * t) * evecs[start].conj())
    idx = one_excitation_indices(g.n)
    full_sector = psi_full[idx] * np.exp(1j * shift * t)
    outside = np.ones(len(psi_full), dtype=bool)
    outside[idx] = False
    leakage = float(np.linalg.norm(psi_full[outside]))

    mats = distance_matrices(g)
    h_sector = sum(j * a for j, a in zip(couplings, mats)) / tstar
    s_evals, s_vecs = np.linalg.eigh(h_sector)
    psi_sector = s_vecs @ (np.exp(-1j * s_evals * t) * s_vecs[origin].conj())
    deviation = float(np.abs(full_sector - psi_sector).max())
    return EvolutionReport(deviation, shift, full_sector, psi_sector, leakage)
