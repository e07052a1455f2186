"""
Environment-induced entanglement: two uncoupled oscillators x1, x2 each
coupled to a third oscillator y.

    H = sum_i [p_i^2/2m + m w^2 x_i^2 / 2] + p_y^2/2M + M W^2 y^2/2 + alpha x1 y + beta x2 y

After rescaling to unit masses and frequency w the potential matrix is

    K = [[1, 0, a], [0, 1, b], [a, b, k]],  a = alpha/(sqrt(Mm) w^2), b = beta/(sqrt(Mm) w^2), k = W^2/w^2,

with squared normal frequencies 1 and (1 + k -+ sqrt((k-1)^2 + 4(a^2+b^2)))/2.
The middle one vanishes when a^2 + b^2 = k, where the entropy of x1 diverges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_ZERO_TOL, EntropyValue, gaussian_entropy
from .errors import DegenerateCoupling, InvertedOscillator

NORMAL = "normal"
FREE_PARTICLE = "free_particle"
INVERTED = "inverted"

X1, X2, Y = 0, 1, 2


@dataclass(frozen=True)
class TripartiteParams:
    m: float = 1.0
    M: float = 1.0
    omega: float = 1.0
    Omega_env: float = 1.0
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if min(self.m, self.M, self.omega, self.Omega_env) <= 0:
            raise ValueError("masses and frequencies must be positive")

    @classmethod
    def from_scaled(cls, alpha_t: float, beta_t: float, k: float) -> "TripartiteParams":
        """Unit masses and w = 1, so the scaled couplings equal the raw ones."""
        return cls(1.0, 1.0, 1.0, math.sqrt(k), alpha_t, beta_t)


@dataclass(frozen=True)
class Regime:
    label: str
    kappa2: float


def scale(params: TripartiteParams) -> tuple[float, float, float]:
    """Dimensionless (alpha~, beta~, k)."""
    s = math.sqrt(params.M * params.m) * params.omega**2
    return params.alpha / s, params.beta / s, params.Omega_env**2 / params.omega**2


def potential_matrix(alpha_t: float, beta_t: float, k: float) -> np.ndarray:
    return np.array([[1.0, 0.0, alpha_t], [0.0, 1.0, beta_t], [alpha_t, beta_t, k]])


def kappa_closed_form(alpha_t: float, beta_t: float, k: float) -> tuple[float, float, float]:
    c2 = alpha_t**2 + beta_t**2
    root = math.sqrt((k - 1.0) ** 2 + 4.0 * c2)
    kappa3 = 0.5 * (1.0 + k + root)
    # kappa2 * kappa3 = k - c2; the product form keeps kappa2 accurate near zero
    kappa2 = (k - c2) / kappa3 if kappa3 != 0.0 else 0.5 * (1.0 + k - root)
    return 1.0, kappa2, kappa3


def classify(params: TripartiteParams | tuple[float, float, float], zero_tol: float = DEFAULT_ZERO_TOL) -> Regime:
    """Regime from the sign of k - (a^2 + b^2), judged relative to max(1, k)."""
    alpha_t, beta_t, k = scale(params) if isinstance(params, TripartiteParams) else params
    margin = k - (alpha_t**2 + beta_t**2)
    kappa2 = kappa_closed_form(alpha_t, beta_t, k)[1]
    if abs(margin) <= zero_tol * max(1.0, abs(k)):
        return Regime(FREE_PARTICLE, kappa2)
    return Regime(NORMAL if margin > 0 else INVERTED, kappa2)


def normal_coordinates(alpha_t: float, beta_t: float) -> np.ndarray:
    """Rows z1, z2, z3 of the normal coordinates at the free-particle point.

    z1 has frequency^2 1, z2 is the zero-mode and z3 has 1 + a^2 + b^2.
    """
    c2 = alpha_t**2 + beta_t**2
    if c2 == 0.0:
        raise DegenerateCoupling("z1 is undefined without coupling to the environment")
    z1 = np.array([-beta_t, alpha_t, 0.0]) / math.sqrt(c2)
    z2 = np.array([-alpha_t, -beta_t, 1.0]) / math.sqrt(1.0 + c2)
    z3 = np.array([alpha_t, beta_t, c2]) / math.sqrt(c2 * (1.0 + c2))
    return np.vstack([z1, z2, z3])


def _entropy(params, traced, zero_tol: float) -> EntropyValue:
    alpha_t, beta_t, k = scale(params) if isinstance(params, TripartiteParams) else params
    regime = classify((alpha_t, beta_t, k), zero_tol)
    if regime.label == INVERTED:
        raise InvertedOscillator(f"a^2 + b^2 > k (kappa2 = {regime.kappa2:.6g})")
    if regime.label == FREE_PARTICLE:
        return EntropyValue.divergent_value("zero-mode")
    return gaussian_entropy(potential_matrix(alpha_t, beta_t, k), traced, zero_tol)


def entropy_x1(params, zero_tol: float = DEFAULT_ZERO_TOL) -> EntropyValue:
    """Entropy of x1 after tracing out x2 and the environment."""
    return _entropy(params, (X2, Y), zero_tol)


def entropy_x2(params, zero_tol: float = DEFAULT_ZERO_TOL) -> EntropyValue:
    return _entropy(params, (X1, Y), zero_tol)
