"""Bell-pair feasibility, coupling synthesis and one-excitation dynamics.

Starting from the single excitation on the origin, the amplitude on stratum
``i`` is ``gamma_i(t) = sum_l P_i(a_l) exp(-i f(a_l) t) w_l`` for a
Hamiltonian ``H = f(A)``. A stratum admits complete localisation
(``|gamma_0| = |gamma_i| = 1/sqrt(2)``) only when its P row takes at most
two values whose product is -1. The couplings ``J`` expand ``f(x) t*`` in
the orthonormal polynomials.

Concurrence between the origin and one vertex of stratum ``i`` uses
``2 |gamma_0 gamma_i| / sqrt(n_i)``, which assumes the amplitude is spread
uniformly over the stratum. That holds by construction for ``H = f(A)`` on
an invariant stratification graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InfeasibleRow, NotHermitian
from .graph import Graph, SzegoJacobi, stratify
from .spectral import SpectralData, polynomial_of_matrix

ROW_RTOL = 1e-8
VERIFY_ATOL = 1e-8


def entanglement_bound(n_i: int) -> float:
    if n_i < 1:
        raise ValueError(f"stratum size must be >= 1, got {n_i}")
    return 1.0 / np.sqrt(n_i)


@dataclass(frozen=True)
class FeasibleRow:
    stratum: int
    values: tuple[float, float]
    assignment: tuple[int, ...]

    @property
    def xi_delta(self) -> float:
        p_plus, p_minus = self.values
        return float(np.arccos(np.clip(-(p_plus + p_minus) / 2.0, -1.0, 1.0)))


def _clusters(row: np.ndarray, tol: float):
    order = np.argsort(row, kind="stable")
    labels = np.empty(len(row), dtype=int)
    groups = [[order[0]]]
    for prev, idx in zip(order[:-1], order[1:]):
        if row[idx] - row[prev] > tol:
            groups.append([])
        groups[-1].append(idx)
    for g, members in enumerate(groups):
        labels[members] = g
    centers = [float(np.mean(row[m])) for m in groups]
    return centers, labels


def check_row(pmat: np.ndarray, i: int, tol: float = ROW_RTOL) -> FeasibleRow | str:
    """A ``FeasibleRow`` for row ``i``, or a string saying why it fails."""
    row = np.asarray(pmat[i], dtype=float)
    scale = max(float(np.abs(row).max()), 1.0)
    centers, labels = _clusters(row, tol * scale)
    if len(centers) == 1:
        return f"row {i} is constant ({centers[0]:.6g}); a single value cannot square to -1"
    if len(centers) > 2:
        return f"row {i} takes {len(centers)} distinct values, at most 2 allowed"
    p_minus, p_plus = centers
    if abs(p_plus * p_minus + 1.0) > tol * scale:
        return f"row {i} values {p_plus:.6g}, {p_minus:.6g} have product {p_plus * p_minus:.6g} != -1"
    if abs(p_plus + p_minus) > 2.0 + tol * scale:
        return f"row {i} values sum to {p_plus + p_minus:.6g}; |sum| > 2 admits no phase"
    assignment = tuple(0 if lab == 1 else 1 for lab in labels)
    return FeasibleRow(i, (p_plus, p_minus), assignment)


def scan_feasible_rows(pmat: np.ndarray, tol: float = ROW_RTOL) -> list[FeasibleRow]:
    rows = (check_row(pmat, i, tol) for i in range(1, len(pmat)))
    return [r for r in rows if isinstance(r, FeasibleRow)]


@dataclass(frozen=True, eq=False)
class BellDesign:
    stratum: int
    xi0: float
    xi_delta: float
    windings: tuple[int, ...]
    tau: np.ndarray
    couplings: np.ndarray
    tstar: float

    def to_dict(self) -> dict:
        return {
            "stratum": self.stratum,
            "xi0": self.xi0,
            "xi_delta": self.xi_delta,
            "windings": list(self.windings),
            "tau": self.tau.tolist(),
            "couplings": self.couplings.tolist(),
            "tstar": self.tstar,
        }


def phase_targets(row_values: np.ndarray, xi_delta: float, xi0: float, windings) -> np.ndarray:
    p = np.asarray(row_values, dtype=float)
    return (2.0 * np.pi * np.asarray(windings, dtype=float) + xi0
            + np.arctan2(p * np.sin(xi_delta), 1.0 + p * np.cos(xi_delta)))


def design_couplings(sd: SpectralData, row: FeasibleRow | int, xi0: float = 0.0,
                     windings=None, tstar: float = 1.0) -> BellDesign:
    if not tstar > 0:
        raise ValueError(f"tstar must be positive, got {tstar}")
    if not isinstance(row, FeasibleRow):
        checked = check_row(sd.pmat, int(row))
        if isinstance(checked, str):
            raise InfeasibleRow(checked)
        row = checked
    d = sd.d
    if windings is None:
        windings = (0,) * (d + 1)
    windings = tuple(int(n) for n in windings)
    if len(windings) != d + 1:
        raise DimensionMismatch(f"need {d + 1} windings, got {len(windings)}")
    xi_delta = row.xi_delta
    tau = phase_targets(sd.pmat[row.stratum], xi_delta, xi0, windings)
    couplings = sd.pmat @ (sd.weights * tau)
    return BellDesign(row.stratum, float(xi0), xi_delta, windings, tau, couplings, float(tstar))


def design_residuals(sd: SpectralData, design: BellDesign) -> dict:
    """Max deviation of P^T J from tau and of |eta_l| from 1."""
    p_row = sd.pmat[design.stratum]
    eta = np.exp(1j * design.xi0) / np.sqrt(2) * (1 + p_row * np.exp(1j * design.xi_delta))
    return {
        "tau": float(np.abs(sd.pmat.T @ design.couplings - design.tau).max()),
        "eta": float(np.abs(np.abs(eta) - 1.0).max()),
    }


def hamiltonian_matrix(g: Graph, c: SzegoJacobi, design: BellDesign) -> np.ndarray:
    """Vertex-basis H = (1/t*) sum_k J_k P_k(A)."""
    if len(design.couplings) != c.d + 1:
        raise DimensionMismatch(
            f"{len(design.couplings)} couplings for a sequence of diameter {c.d}"
        )
    return couplings_hamiltonian(g, c, design.couplings, design.tstar)


def couplings_hamiltonian(g: Graph, c: SzegoJacobi, couplings, tstar: float = 1.0) -> np.ndarray:
    mats = polynomial_of_matrix(c, g.sparse_adjacency)
    h = sum(j * m for j, m in zip(couplings, mats)) / tstar
    return np.asarray(h, dtype=float)


def evolve_spectral(sd: SpectralData, tau, t) -> np.ndarray:
    """Stratum amplitudes gamma at ``t`` measured in units of t*.

    A scalar ``t`` gives a (d+1)-vector; an array gives one row per time.
    """
    t_arr = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(t_arr, np.asarray(tau, dtype=float)))
    return (phases * sd.weights) @ sd.pmat.T


def evolve_dense(h: np.ndarray, origin: int, t) -> np.ndarray:
    h = np.asarray(h)
    scale = max(float(np.abs(h).max(initial=0.0)), 1.0)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or np.abs(h - h.conj().T).max() > 1e-12 * scale:
        raise NotHermitian("Hamiltonian must be a square Hermitian matrix")
    evals, evecs = np.linalg.eigh(h)
    coeffs = evecs[origin].conj()
    t_arr = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(t_arr, evals))
    return (phases * coeffs) @ evecs.T


def concurrence_pair(v, m: int, k: int) -> float:
    return float(2.0 * abs(v[m]) * abs(v[k]))


def concurrence_stratum(gamma, i: int, n_i: int) -> float:
    return float(2.0 * abs(gamma[0]) * abs(gamma[i]) / np.sqrt(n_i))


@dataclass
class VerifyReport:
    stratum: int
    gamma0_abs: float
    gammai_abs: float
    concurrence: float | None
    bound: float | None
    dense_deviation: float | None
    residuals: dict = field(default_factory=dict)
    passed: bool = False

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def verify_design(g: Graph | None, c: SzegoJacobi, design: BellDesign,
                  sd: SpectralData | None = None, sizes=None, origin: int = 0,
                  atol: float = VERIFY_ATOL) -> VerifyReport:
    """Check that ``design`` localises the excitation on origin and target stratum.

    With a graph the concurrence and bound use the real stratum size, and the
    dense vertex-basis evolution is compared against the spectral amplitudes.
    Without one, ``sizes`` may supply the stratum sizes.
    """
    from .spectral import spectral_data

    sd = sd if sd is not None else spectral_data(c)
    i = design.stratum
    gamma = evolve_spectral(sd, design.tau, 1.0)
    target = 1.0 / np.sqrt(2.0)
    deviation = None
    if g is not None:
        strat = stratify(g, origin)
        sizes = strat.sizes
        psi = evolve_dense(hamiltonian_matrix(g, c, design), origin, design.tstar)
        projected = strat.stratum_states(g.n) @ psi
        deviation = float(np.abs(projected - gamma).max())
    n_i = sizes[i] if sizes is not None else None
    conc = concurrence_stratum(gamma, i, n_i) if n_i is not None else None
    bound = entanglement_bound(n_i) if n_i is not None else None
    residuals = design_residuals(sd, design)
    ok = (abs(abs(gamma[0]) - target) <= atol and abs(abs(gamma[i]) - target) <= atol
          and (conc is None or abs(conc - bound) <= atol)
          and (deviation is None or deviation <= atol)
          and residuals["tau"] <= 1e-9 and residuals["eta"] <= 1e-10)
    return VerifyReport(i, float(abs(gamma[0])), float(abs(gamma[i])), conc, bound,
                        deviation, residuals, bool(ok))
