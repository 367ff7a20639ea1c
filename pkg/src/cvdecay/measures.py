"""Separability and entanglement quantification for two-mode Gaussian states.

Everything operates on the 4x4 covariance matrix in (q1, p1, q2, p2)
ordering with vacuum variance 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gaussian import OMEGA_1, _require_symmetric, check_uncertainty

# dead-band for the separable/entangled boundary: analytic boundary states
# evaluate to exactly zero, so tiny negative roundoff must not flip the flag
BOUNDARY_TOL = 1e-12
_DISCRIMINANT_TOL = 1e-12


def covariance_blocks(V) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split V into mode-1 block A, mode-2 block B and cross block C."""
    V = _require_symmetric(V)
    return V[:2, :2], V[2:, 2:], V[:2, 2:]


def _require_physical(V):
    V = _require_symmetric(V)
    if not check_uncertainty(V):
        raise ValueError("covariance matrix is unphysical")
    return V


def simon_lhs(V) -> float:
    """Left-hand side of the Simon separability inequality.

    det A det B + (1/4 - |det C|)^2 - Tr[A w C w B w C^T w]
    - (det A + det B)/4, non-negative iff the state is separable.
    This is the smooth quantity used for boundary root-finding.
    """
    V = _require_physical(V)
    A, B, C = V[:2, :2], V[2:, 2:], V[:2, 2:]
    det_a = np.linalg.det(A)
    det_b = np.linalg.det(B)
    det_c = np.linalg.det(C)
    w = OMEGA_1
    trace_term = np.trace(A @ w @ C @ w @ B @ w @ C.T @ w)
    return float(
        det_a * det_b
        + (0.25 - abs(det_c)) ** 2
        - trace_term
        - 0.25 * (det_a + det_b)
    )


def ppt_min_symplectic_eigenvalue(V) -> float:
    """Smallest symplectic eigenvalue of the partially transposed covariance.

    n_minus^2 = (Sigma - sqrt(Sigma^2 - 4 det V)) / 2 with
    Sigma = det A + det B - 2 det C, evaluated through the
    cancellation-free equivalent 2 det V / (Sigma + sqrt(...)).
    """
    V = _require_physical(V)
    A, B, C = V[:2, :2], V[2:, 2:], V[:2, 2:]
    sigma = np.linalg.det(A) + np.linalg.det(B) - 2.0 * np.linalg.det(C)
    det_v = np.linalg.det(V)
    disc = sigma * sigma - 4.0 * det_v
    if disc < -_DISCRIMINANT_TOL:
        raise ValueError(f"negative discriminant {disc:.3e} in PPT eigenvalue")
    root = np.sqrt(max(disc, 0.0))
    n_minus_sq = 2.0 * det_v / (sigma + root)
    return float(np.sqrt(max(n_minus_sq, 0.0)))


def log_negativity(V) -> float:
    """Entanglement monotone max{0, -log2(2 n_minus)}."""
    n_minus = ppt_min_symplectic_eigenvalue(V)
    return float(max(0.0, -np.log2(2.0 * n_minus)))


@dataclass(frozen=True)
class EntanglementReport:
    simon_lhs: float
    n_minus: float
    log_negativity: float
    separable: bool


def entanglement_report(V) -> EntanglementReport:
    """Bundle Simon LHS, PPT eigenvalue, log-negativity and the verdict."""
    lhs = simon_lhs(V)
    n_minus = ppt_min_symplectic_eigenvalue(V)
    e_n = float(max(0.0, -np.log2(2.0 * n_minus)))
    return EntanglementReport(
        simon_lhs=lhs,
        n_minus=n_minus,
        log_negativity=e_n,
        separable=bool(lhs >= -BOUNDARY_TOL),
    )
