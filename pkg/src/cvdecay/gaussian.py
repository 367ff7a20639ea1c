"""Two-mode Gaussian states, symplectic operations, physicality checks.

Conventions (inherited by every other module): hbar = 1, vacuum quadrature
variance 1/2, quadrature ordering (q1, p1, q2, p2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# 2x2 symplectic unit and its two-mode direct sum (q1, p1, q2, p2 ordering).
OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = np.block(
    [[OMEGA_1, np.zeros((2, 2))], [np.zeros((2, 2)), OMEGA_1]]
)
OMEGA.setflags(write=False)
OMEGA_1.setflags(write=False)

SYMPLECTIC_TOL = 1e-10
PHYSICALITY_TOL = 1e-9
SYMMETRY_TOL = 1e-12


def _as_matrix(M, name="matrix"):
    M = np.asarray(M, dtype=float)
    if M.shape != (4, 4):
        raise ValueError(f"{name} must be 4x4, got shape {M.shape}")
    return M


def _require_symmetric(V, tol=SYMMETRY_TOL):
    V = _as_matrix(V, "covariance matrix")
    if np.max(np.abs(V - V.T)) > tol:
        raise ValueError("covariance matrix is not symmetric")
    return V


@dataclass(frozen=True)
class GaussianState:
    """Mean vector and covariance matrix of a two-mode Gaussian state.

    Construction validates symmetry of the covariance and the uncertainty
    relation (both symplectic eigenvalues >= 1/2 up to tolerance).
    """

    cov: np.ndarray
    mean: np.ndarray = field(default=None)

    def __post_init__(self):
        cov = _require_symmetric(self.cov)
        mean = self.mean
        mean = np.zeros(4) if mean is None else np.asarray(mean, dtype=float)
        if mean.shape != (4,):
            raise ValueError(f"mean must be a 4-vector, got shape {mean.shape}")
        if not check_uncertainty(cov, PHYSICALITY_TOL):
            raise ValueError("covariance matrix violates the uncertainty relation")
        cov = cov.copy()
        mean = mean.copy()
        cov.setflags(write=False)
        mean.setflags(write=False)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "mean", mean)


def vacuum_state() -> GaussianState:
    """Two-mode vacuum: zero mean, covariance (1/2) I."""
    return GaussianState(cov=0.5 * np.eye(4))


def single_mode_squeezer(r: float, mode: int) -> np.ndarray:
    """Symplectic matrix of the squeezer diag(e^-r, e^r) on one mode.

    mode is 1 or 2; the other mode gets the identity.
    """
    if not np.isfinite(r):
        raise ValueError("squeezing parameter must be finite")
    if mode not in (1, 2):
        raise ValueError("mode must be 1 or 2")
    S = np.eye(4)
    i = 2 * (mode - 1)
    S[i, i] = np.exp(-r)
    S[i + 1, i + 1] = np.exp(r)
    return S


def beam_splitter(theta: float) -> np.ndarray:
    """Symplectic matrix [[cos t I, sin t I], [-sin t I, cos t I]].

    theta = pi/4 is the balanced (50:50) splitter.
    """
    c, s = np.cos(theta), np.sin(theta)
    I2 = np.eye(2)
    return np.block([[c * I2, s * I2], [-s * I2, c * I2]])


def is_symplectic(S, tol: float = SYMPLECTIC_TOL) -> bool:
    """True iff max |S Omega S^T - Omega| <= tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    S = _as_matrix(S, "symplectic candidate")
    return np.max(np.abs(S @ OMEGA @ S.T - OMEGA)) <= tol


def apply_symplectic(S, state: GaussianState) -> GaussianState:
    """Transform mean -> S mean and cov -> S cov S^T."""
    S = _as_matrix(S, "symplectic matrix")
    if not is_symplectic(S):
        raise ValueError("matrix is not symplectic")
    return GaussianState(cov=S @ state.cov @ S.T, mean=S @ state.mean)


def symplectic_spectrum(V) -> tuple[float, float]:
    """Symplectic eigenvalues of a positive-definite covariance matrix.

    Computed as moduli of the eigenvalues of i Omega V; the doubly
    degenerate pairs are averaged and returned sorted ascending.
    """
    V = _require_symmetric(V)
    if np.min(np.linalg.eigvalsh(V)) <= 0:
        raise ValueError("covariance matrix must be positive definite")
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * OMEGA @ V)))
    return (0.5 * (moduli[0] + moduli[1]), 0.5 * (moduli[2] + moduli[3]))


def check_uncertainty(V, tol: float = PHYSICALITY_TOL) -> bool:
    """True iff the smallest symplectic eigenvalue of V is >= 1/2 - tol."""
    V = _require_symmetric(V, tol=max(SYMMETRY_TOL, 10 * np.finfo(float).eps))
    # avoid the positive-definiteness gate of symplectic_spectrum: unphysical
    # candidates must simply fail the check instead of raising
    if np.min(np.linalg.eigvalsh(V)) <= 0:
        return False
    moduli = np.abs(np.linalg.eigvals(1j * OMEGA @ V))
    return bool(np.min(moduli) >= 0.5 - tol)


def min_quadrature_variance(V) -> float:
    """Smallest eigenvalue of V over all passive quadrature redefinitions.

    The state is squeezed iff the result drops below the vacuum value 1/2.
    """
    V = _require_symmetric(V)
    return float(np.linalg.eigvalsh(V)[0])


def wigner_value(state: GaussianState, point) -> float:
    """Gaussian Wigner function exp(-xi^T V^-1 xi / 2) / ((2 pi)^2 sqrt(det V))."""
    point = np.asarray(point, dtype=float)
    if point.shape != (4,):
        raise ValueError("phase-space point must be a 4-vector")
    V = state.cov
    det = np.linalg.det(V)
    if det <= 1e-300:
        raise ValueError("covariance matrix is singular")
    xi = point - state.mean
    exponent = -0.5 * xi @ np.linalg.solve(V, xi)
    return float(np.exp(exponent) / ((2.0 * np.pi) ** 2 * np.sqrt(det)))
