"""Spectral distribution of a Szego-Jacobi sequence.

The tridiagonal Jacobi matrix is diagonalised with LAPACK's symmetric
tridiagonal solver. The three-term recurrences are used for the P matrix,
the characteristic-polynomial residual and the quadrature weights; the
squared first eigenvector components serve as an independent check on the
weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import (
    ConvergenceFailure,
    EigenvalueCollision,
    NonPositiveOmega,
    WeightMismatch,
)
from .graph import SzegoJacobi

WEIGHT_ATOL = 1e-9
RESIDUAL_RTOL = 1e-8
COLLISION_RTOL = 1e-8
SIGN_ATOL = 1e-8


@dataclass(frozen=True, eq=False)
class JacobiMatrix:
    diag: np.ndarray
    offdiag: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


@dataclass(frozen=True, eq=False)
class SpectralData:
    eigenvalues: np.ndarray
    weights: np.ndarray
    pmat: np.ndarray

    @property
    def d(self) -> int:
        return len(self.eigenvalues) - 1


def jacobi_matrix(c: SzegoJacobi) -> JacobiMatrix:
    omega = np.asarray(c.omega, dtype=float)
    if (omega <= 0).any():
        raise NonPositiveOmega(f"omega must be strictly positive, got {c.omega}")
    return JacobiMatrix(np.asarray(c.alpha, dtype=float), np.sqrt(omega))


def _gershgorin(c: SzegoJacobi) -> float:
    root = np.sqrt(np.concatenate([[0.0], c.omega, [0.0]]))
    return float(np.max(np.abs(c.alpha) + root[:-1] + root[1:]))


def monic_values(c: SzegoJacobi, x) -> np.ndarray:
    """Rows are the monic polynomials P~_0..P~_{d+1} evaluated at ``x``."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    d = c.d
    out = np.empty((d + 2, x.size))
    out[0] = 1.0
    out[1] = x - c.alpha[0]
    for i in range(1, d + 1):
        out[i + 1] = (x - c.alpha[i]) * out[i] - c.omega[i - 1] * out[i - 1]
    return out


def _char_and_derivative(c: SzegoJacobi, x: np.ndarray):
    p_prev, p = np.ones_like(x), x - c.alpha[0]
    dp_prev, dp = np.zeros_like(x), np.ones_like(x)
    for i in range(1, c.d + 1):
        p_next = (x - c.alpha[i]) * p - c.omega[i - 1] * p_prev
        dp_next = p + (x - c.alpha[i]) * dp - c.omega[i - 1] * dp_prev
        p_prev, p = p, p_next
        dp_prev, dp = dp, dp_next
    return p, dp


def _tail_polynomial(c: SzegoJacobi, x: np.ndarray) -> np.ndarray:
    """Q_d: the monic recurrence with the first site removed."""
    if c.d == 0:
        return np.ones_like(x)
    q_prev, q = np.ones_like(x), x - c.alpha[1]
    for i in range(1, c.d):
        q_prev, q = q, (x - c.alpha[i + 1]) * q - c.omega[i] * q_prev
    return q


def _polish(c: SzegoJacobi, a: np.ndarray, steps: int = 3) -> np.ndarray:
    """Newton steps on the characteristic polynomial, kept only where they help.

    LAPACK returns eigenvalues to a few ulps of the matrix norm; Q_d(a) in the
    weight formula can amplify that when a small weight sits next to a root
    of Q_d, so each root is refined in place.
    """
    half_gap = np.full(a.shape, np.inf)
    if a.size > 1:
        gaps = np.diff(a) / 2
        half_gap[:-1] = gaps
        half_gap[1:] = np.minimum(half_gap[1:], gaps)
    for _ in range(steps):
        p, dp = _char_and_derivative(c, a)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp != 0, p / dp, 0.0)
        trial = a - step
        p_trial, _ = _char_and_derivative(c, trial)
        ok = (np.abs(p_trial) < np.abs(p)) & (np.abs(step) < half_gap)
        if not ok.any():
            break
        a = np.where(ok, trial, a)
    return a


def eigenvalues(j: JacobiMatrix, c: SzegoJacobi | None = None) -> np.ndarray:
    try:
        if j.dim == 1:
            a = j.diag.astype(float).copy()
        else:
            a = eigh_tridiagonal(j.diag, j.offdiag, eigvals_only=True)
    except LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    a = np.sort(a)
    span = np.max(np.abs(a), initial=0.0)
    if a.size > 1 and np.min(np.diff(a)) < COLLISION_RTOL * max(span, 1e-300):
        raise EigenvalueCollision(f"eigenvalues not simple: {a.tolist()}")
    if c is None:
        c = SzegoJacobi(tuple(j.offdiag ** 2), tuple(j.diag))
    a = _polish(c, a)
    scale = max(1.0, _gershgorin(c)) ** (c.d + 1)
    residual = np.abs(monic_values(c, a)[-1]).max()
    if residual > RESIDUAL_RTOL * scale:
        raise ConvergenceFailure(
            f"characteristic residual {residual:.3e} exceeds {RESIDUAL_RTOL * scale:.3e}"
        )
    return a


def weights_from_recurrence(c: SzegoJacobi, eigs) -> np.ndarray:
    x = np.asarray(eigs, dtype=float)
    _, dchar = _char_and_derivative(c, x)
    return _tail_polynomial(c, x) / dchar


def weights_from_eigenvectors(j: JacobiMatrix) -> np.ndarray:
    if j.dim == 1:
        return np.ones(1)
    _, vecs = eigh_tridiagonal(j.diag, j.offdiag)
    return vecs[0] ** 2


def weights(c: SzegoJacobi, eigs) -> np.ndarray:
    w = weights_from_recurrence(c, eigs)
    oracle = weights_from_eigenvectors(jacobi_matrix(c))
    gap = np.abs(w - oracle).max()
    if gap > WEIGHT_ATOL:
        raise WeightMismatch(f"recurrence and eigenvector weights differ by {gap:.3e}")
    return w


def p_matrix(c: SzegoJacobi, eigs) -> np.ndarray:
    """Orthonormal polynomials: ``pmat[i, l] = P_i(a_l)``."""
    x = np.asarray(eigs, dtype=float)
    d = c.d
    root = np.sqrt(np.asarray(c.omega, dtype=float))
    pmat = np.empty((d + 1, x.size))
    pmat[0] = 1.0
    if d >= 1:
        pmat[1] = (x - c.alpha[0]) / root[0]
    for i in range(1, d):
        pmat[i + 1] = ((x - c.alpha[i]) * pmat[i] - root[i - 1] * pmat[i - 1]) / root[i]
    return pmat


def spectral_data(c: SzegoJacobi) -> SpectralData:
    j = jacobi_matrix(c)
    a = eigenvalues(j, c)
    return SpectralData(a, weights(c, a), p_matrix(c, a))


def orthogonality_residual(sd: SpectralData) -> float:
    gram = sd.pmat @ np.diag(sd.weights) @ sd.pmat.T
    return float(np.abs(gram - np.eye(len(gram))).max())


def expectation(sd: SpectralData, g: Callable | np.ndarray) -> complex:
    """sum_l g(a_l) w_l; ``g`` is a callable or its samples at the eigenvalues."""
    values = g(sd.eigenvalues) if callable(g) else np.asarray(g)
    values = np.broadcast_to(values, sd.weights.shape)
    return complex(np.sum(values * sd.weights))


def reflective_spectrum_check(sd: SpectralData, atol: float = SIGN_ATOL) -> bool:
    last = sd.pmat[-1]
    return bool(np.all(np.abs(np.abs(last) - 1.0) <= atol))


def polynomial_of_matrix(c: SzegoJacobi, adjacency) -> list[np.ndarray]:
    """Dense P_0(A)..P_d(A) from the matrix three-term recurrence."""
    n = adjacency.shape[0]
    mult = adjacency.dot if hasattr(adjacency, "dot") else (lambda m: adjacency @ m)
    root = np.sqrt(np.asarray(c.omega, dtype=float))
    mats = [np.eye(n)]
    if c.d >= 1:
        mats.append((mult(mats[0]) - c.alpha[0] * mats[0]) / root[0])
    for i in range(1, c.d):
        nxt = (mult(mats[i]) - c.alpha[i] * mats[i] - root[i - 1] * mats[i - 1]) / root[i]
        mats.append(np.asarray(nxt))
    return [np.asarray(m) for m in mats]
