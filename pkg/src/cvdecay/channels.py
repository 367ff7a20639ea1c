"""Thermal-bath covariance maps and the four scenario pipelines.

Local baths damp each mode independently; the global bath damps only the
center-of-mass collective mode and leaves the relative mode untouched.

The per-mode local map is V -> X V X^T + Y/2 with X = (1 - tau)^(1/4) I per
mode.  The additive noise Y is ambiguous: three published/derived readings
disagree, so all three ship as explicit variants (see ChannelVariant).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .gaussian import (
    GaussianState,
    _as_matrix,
    beam_splitter,
    single_mode_squeezer,
    vacuum_state,
)


class ChannelVariant(enum.Enum):
    """Reading of the additive noise in the local thermal-loss map.

    LINEAR     -- noise (N/2 + 1) tau per mode, the quoted closed-form map.
    SEMIGROUP  -- noise (2N + 1)(1 - sqrt(1 - tau)), the exact solution of
                  the thermal master equation; the only variant that
                  composes in time (stationary variance N + 1/2).
    MATCHED    -- noise (N/4 + 1) tau, the unique tau-linear noise whose
                  entangled-state sudden-death time under a single bath
                  equals the closed form 8(2+N)/(4+N)^2.
    """

    LINEAR = "linear"
    SEMIGROUP = "semigroup"
    MATCHED = "matched"


DEFAULT_VARIANT = ChannelVariant.LINEAR


class Scenario(enum.Enum):
    """Preparation/dissipation orderings.

    Case 1 stores the resource as squeezing: squeeze, dissipate, then mix
    on the balanced beam splitter.  Case 2 stores it as entanglement:
    squeeze, mix, then dissipate.
    """

    LOCAL_CASE1 = "local-case1"
    LOCAL_CASE2 = "local-case2"
    GLOBAL_CASE1 = "global-case1"
    GLOBAL_CASE2 = "global-case2"

    @property
    def is_local(self) -> bool:
        return self in (Scenario.LOCAL_CASE1, Scenario.LOCAL_CASE2)

    @property
    def dissipate_first(self) -> bool:
        return self in (Scenario.LOCAL_CASE1, Scenario.GLOBAL_CASE1)


def _require_rate(value, name):
    if not (np.isfinite(value) and value >= 0):
        raise ValueError(f"{name} must be finite and non-negative, got {value}")
    return float(value)


@dataclass(frozen=True)
class LocalBathSpec:
    """Two independent thermal baths: decay rates and mean photon numbers."""

    gamma1: float
    gamma2: float
    nbar1: float
    nbar2: float

    def __post_init__(self):
        for name in ("gamma1", "gamma2", "nbar1", "nbar2"):
            _require_rate(getattr(self, name), name)

    @classmethod
    def identical(cls, gamma: float, nbar: float) -> "LocalBathSpec":
        return cls(gamma, gamma, nbar, nbar)

    @classmethod
    def single(cls, gamma: float, nbar: float) -> "LocalBathSpec":
        """Extreme asymmetric configuration: only mode 1 dissipates."""
        return cls(gamma, 0.0, nbar, 0.0)


@dataclass(frozen=True)
class GlobalBathSpec:
    """One shared thermal bath with correlated dissipation."""

    gamma: float
    nbar: float

    def __post_init__(self):
        _require_rate(self.gamma, "gamma")
        _require_rate(self.nbar, "nbar")


def time_to_tau(gamma: float, t: float) -> float:
    """Dimensionless time tau = 1 - exp(-2 gamma t)."""
    if t < 0:
        raise ValueError("time must be non-negative")
    _require_rate(gamma, "gamma")
    return -math.expm1(-2.0 * gamma * t)


def tau_to_time(gamma: float, tau: float) -> float:
    """Invert tau = 1 - exp(-2 gamma t); tau = 1 maps to infinite time."""
    if gamma <= 0:
        raise ValueError("gamma must be positive to invert the time map")
    _validate_tau(tau)
    if tau == 1.0:
        return math.inf
    return -math.log1p(-tau) / (2.0 * gamma)


def _validate_tau(tau):
    if not (0.0 <= tau <= 1.0):
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    return float(tau)


def _local_noise(tau: float, nbar: float, variant: ChannelVariant) -> float:
    """Additive covariance noise (the Y/2 entry) for one mode."""
    if variant is ChannelVariant.LINEAR:
        return 0.5 * (0.5 * nbar + 1.0) * tau
    if variant is ChannelVariant.SEMIGROUP:
        return (nbar + 0.5) * (1.0 - math.sqrt(1.0 - tau))
    if variant is ChannelVariant.MATCHED:
        return 0.5 * (0.25 * nbar + 1.0) * tau
    raise ValueError(f"unknown channel variant {variant!r}")


def local_bath_map(
    V,
    mean,
    tau1: float,
    tau2: float,
    spec: LocalBathSpec,
    variant: ChannelVariant = DEFAULT_VARIANT,
) -> tuple[np.ndarray, np.ndarray]:
    """Apply the two independent thermal-loss channels for times tau1, tau2.

    Returns (X V X^T + Y/2, X mean) with X = diag((1-tau1)^(1/4) I,
    (1-tau2)^(1/4) I) and variant-dependent additive noise.
    """
    V = _as_matrix(V, "covariance matrix")
    mean = np.asarray(mean, dtype=float)
    tau1 = _validate_tau(tau1)
    tau2 = _validate_tau(tau2)
    x1 = (1.0 - tau1) ** 0.25
    x2 = (1.0 - tau2) ** 0.25
    scale = np.array([x1, x1, x2, x2])
    noise = np.array(
        [_local_noise(tau1, spec.nbar1, variant)] * 2
        + [_local_noise(tau2, spec.nbar2, variant)] * 2
    )
    V_out = V * np.outer(scale, scale) + np.diag(noise)
    return V_out, scale * mean


def global_bath_map(
    V, mean, tau: float, spec: GlobalBathSpec
) -> tuple[np.ndarray, np.ndarray]:
    """Apply the shared-bath channel for dimensionless time tau.

    Implemented structurally: rotate to the collective basis with the
    balanced splitter, thermalize the center-of-mass block (covariance
    scale 1 - tau, noise tau (N + 1/2), cross-block scale sqrt(1 - tau)),
    leave the relative block untouched, rotate back.
    """
    V = _as_matrix(V, "covariance matrix")
    mean = np.asarray(mean, dtype=float)
    tau = _validate_tau(tau)
    B = beam_splitter(np.pi / 4.0)
    Vc = B @ V @ B.T
    mc = B @ mean

    s = math.sqrt(1.0 - tau)
    scale = np.array([s, s, 1.0, 1.0])
    Vc = Vc * np.outer(scale, scale)
    Vc[:2, :2] += tau * (spec.nbar + 0.5) * np.eye(2)
    mc = scale * mc

    return B.T @ Vc @ B, B.T @ mc


def separable_squeezed_cov(r: float) -> np.ndarray:
    """Covariance (1/2) diag(e^-2r, e^2r, e^2r, e^-2r) of opposite squeezers."""
    return 0.5 * np.diag(np.exp([-2.0 * r, 2.0 * r, 2.0 * r, -2.0 * r]))


def tmsv_cov(r: float) -> np.ndarray:
    """Two-mode squeezed vacuum covariance: the balanced mix of +/- r squeezers."""
    ch, sh = 0.5 * np.cosh(2.0 * r), 0.5 * np.sinh(2.0 * r)
    Z = np.diag([1.0, -1.0])
    return np.block([[ch * np.eye(2), sh * Z], [sh * Z, ch * np.eye(2)]])


def _mode_taus(bath: LocalBathSpec, tau: float) -> tuple[float, float]:
    """Split a single dimensionless clock over two decay rates.

    tau is read on the fastest bath's clock; the slower bath advances by
    tau_i = 1 - (1 - tau)^(gamma_i / gamma_max), so gamma2 = 0 gives the
    single-bath case and equal rates give tau for both modes.
    """
    g_max = max(bath.gamma1, bath.gamma2)
    if g_max == 0.0:
        return 0.0, 0.0
    one_minus = 1.0 - tau
    tau1 = 1.0 - one_minus ** (bath.gamma1 / g_max)
    tau2 = 1.0 - one_minus ** (bath.gamma2 / g_max)
    return tau1, tau2


def run_scenario(
    scenario: Scenario,
    r: float,
    bath,
    tau: float,
    variant: ChannelVariant = DEFAULT_VARIANT,
) -> GaussianState:
    """Evolve vacuum through squeeze / dissipate / mix in the scenario order."""
    scenario = Scenario(scenario)
    if scenario.is_local:
        if not isinstance(bath, LocalBathSpec):
            raise TypeError("local scenarios require a LocalBathSpec")
    elif not isinstance(bath, GlobalBathSpec):
        raise TypeError("global scenarios require a GlobalBathSpec")

    tau = _validate_tau(tau)
    squeeze = single_mode_squeezer(r, 1) @ single_mode_squeezer(-r, 2)
    state = vacuum_state()
    V = squeeze @ state.cov @ squeeze.T
    mean = squeeze @ state.mean
    B = beam_splitter(np.pi / 4.0)

    def dissipate(V, mean):
        if scenario.is_local:
            tau1, tau2 = _mode_taus(bath, tau)
            return local_bath_map(V, mean, tau1, tau2, bath, variant)
        return global_bath_map(V, mean, tau, bath)

    if scenario.dissipate_first:
        V, mean = dissipate(V, mean)
        V, mean = B @ V @ B.T, B @ mean
    else:
        V, mean = B @ V @ B.T, B @ mean
        V, mean = dissipate(V, mean)
    return GaussianState(cov=V, mean=mean)
