"""
Electron-proton entanglement in a moving hydrogen atom.

The centre of mass is regularised as the low-frequency limit of a 3D trap of
frequency ``omega``; its plane-wave volume Omega grows as omega^-3. The
electron's reduced density matrix is translation invariant, so its
eigenvalues are the Fourier transform of the 1s density overlap,

    rho(k) = (1/Omega) 64 pi a0^3 / (1 + a0^2 |k - k_e|^2)^4,

and the entropy is an integral over k with measure Omega/(2 pi)^3. Everything
depends only on two dimensionless numbers, eta = a0 k_e and
zeta = 64 pi a0^3 / Omega. Entropy diverges logarithmically as zeta -> 0.

Two independent integration paths are provided:

* ``hydrogen_entropy`` integrates in kappa = |k| / k_e after the angular
  integral about k_e has been done analytically;
* ``radial_entropy`` integrates in the shifted radius q = a0 |k - k_e|, where
  eta drops out altogether.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import EntropyValue
from .errors import DegenerateMomentum, DomainError
from .quadrature import QuadratureConfig, integrate_semi_infinite

FOUR_DIM_OSCILLATOR = "four_dim_oscillator"
ISOTONIC = "isotonic"

# S(zeta) = -ln(zeta) + RADIAL_CONSTANT exactly; the constant is
# 4 (digamma(4) - digamma(5/2)) = 8 ln 2 - 10/3.
RADIAL_CONSTANT = 8.0 * math.log(2.0) - 10.0 / 3.0


@dataclass(frozen=True)
class HydrogenParams:
    m_e: float = 1.0
    m_p: float = 1836.15267343
    e2: float = 1.0
    hbar: float = 1.0
    P: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.m_e <= 0 or self.m_p <= 0 or self.e2 <= 0 or self.hbar <= 0:
            raise DomainError("masses, charge and hbar must be positive")
        if self.P < 0 or self.omega < 0:
            raise DomainError("P and omega must be non-negative")

    @property
    def total_mass(self) -> float:
        return self.m_e + self.m_p

    @property
    def reduced_mass(self) -> float:
        return self.m_e * self.m_p / (self.m_e + self.m_p)

    @property
    def a0(self) -> float:
        return bohr_radius(self.reduced_mass, self.e2, self.hbar)

    @property
    def k_e(self) -> float:
        """Magnitude of the electron's share of the centre-of-mass wavevector."""
        return self.m_e * self.P / (self.total_mass * self.hbar)

    @property
    def k_e_vector(self) -> np.ndarray:
        # momentum split equally over the three axes
        return np.full(3, self.k_e / math.sqrt(3.0))

    @property
    def volume(self) -> float:
        return com_volume(self.P, self.total_mass, self.omega)

    def scale(self) -> "SpectralScale":
        return SpectralScale(self.a0 * self.k_e, 64.0 * math.pi * self.a0**3 / self.volume)


@dataclass(frozen=True)
class SpectralScale:
    eta: float
    zeta: float


def bohr_radius(m: float = 1.0, e2: float = 1.0, hbar: float = 1.0) -> float:
    if m <= 0 or e2 <= 0:
        raise DomainError("mass and charge must be positive")
    return hbar**2 / (m * e2)


def com_volume(P: float, M: float, omega: float) -> float:
    """(pi P / (sqrt(3) M omega))^3; ``inf`` in the free limit omega = 0."""
    if P == 0:
        raise DegenerateMomentum("plane-wave volume is undefined for an atom at rest")
    if P < 0 or M <= 0 or omega < 0:
        raise DomainError("P, M must be positive and omega non-negative")
    if omega == 0:
        return math.inf
    return (math.pi * P / (math.sqrt(3.0) * M * omega)) ** 3


def spectral_profile(q_a0) -> np.ndarray:
    """Shape factor 1 / (1 + (a0 q)^2)^4 as a function of a0 |k - k_e|."""
    q_a0 = np.asarray(q_a0, dtype=float)
    return 1.0 / (1.0 + q_a0 * q_a0) ** 4


def rho_eigenvalue(k, params: HydrogenParams | None = None, *, a0: float | None = None,
                   k_e=None, volume: float | None = None):
    """Reduced-density-matrix eigenvalue at wavevector ``k`` (shape (..., 3)).

    Either pass ``params`` or the explicit triple (a0, k_e vector, volume);
    the explicit form lets mapped pipelines reuse exactly this function.
    """
    if params is not None:
        a0, k_e, volume = params.a0, params.k_e_vector, params.volume
    k = np.asarray(k, dtype=float)
    q = np.linalg.norm(k - np.asarray(k_e, dtype=float), axis=-1)
    return 64.0 * math.pi * a0**3 / volume * spectral_profile(a0 * q)


def spectral_trace(params: HydrogenParams, config: QuadratureConfig = QuadratureConfig()) -> float:
    """int d^3k Omega/(2pi)^3 rho(k), by radial quadrature about k_e."""
    a0, vol, ke = params.a0, params.volume, params.k_e_vector
    direction = np.array([0.0, 0.0, 1.0])

    def integrand(q):
        k = ke + np.outer(q / a0, direction)
        return vol / (2.0 * math.pi) ** 3 * 4.0 * math.pi * (q / a0) ** 2 * rho_eigenvalue(
            k, a0=a0, k_e=ke, volume=vol) / a0

    val, _ = integrate_semi_infinite(integrand, config)
    return val


###############################################################################
# Entropy integrands
###############################################################################


def _check_scale(eta: float, zeta: float) -> None:
    if eta <= 0 or zeta <= 0:
        raise DomainError(f"eta and zeta must be positive (eta={eta}, zeta={zeta})")


def g_integrand_literal(kappa, eta: float, zeta: float):
    """Literal entropy density in kappa, without the angular integration.

    This form is kept for plotting only: it does not integrate to the
    entropy (its area depends on eta). See :func:`g_integrand`.
    """
    _check_scale(eta, zeta)
    kappa = np.asarray(kappa, dtype=float)
    f1 = 1.0 / (1.0 + eta**2 * (1.0 - kappa) ** 2) ** 4
    f2 = 1.0 / (1.0 + eta**2 * (1.0 + kappa) ** 2) ** 4
    c0 = 16.0 * eta**3 * kappa**2 / math.pi
    return -c0 * ((f1 - f2) * math.log(zeta) + f1 * np.log(f1) - f2 * np.log(f2))


def _log_antiderivative(w):
    # int (1+w)^-4 ln(1+w) dw
    u = 1.0 + w
    return -(np.log1p(w) / 3.0 + 1.0 / 9.0) / u**3


def g_integrand(kappa, eta: float, zeta: float):
    """Entropy density in kappa = |k|/k_e with the polar angle integrated out.

    With w_-+ = eta^2 (1 -+ kappa)^2 the angular integral of the profile
    f(w) = (1+w)^-4 and of f ln f are elementary, giving

        g = -(8 eta kappa / pi) { ln(zeta) [(1+w_-)^-3 - (1+w_+)^-3] / 3
                                  - 4 [G(w_+) - G(w_-)] },

    G the antiderivative of (1+w)^-4 ln(1+w). g(0) = 0 and g ~ kappa^-5 as
    kappa -> infinity; S = int_0^inf g dkappa.
    """
    _check_scale(eta, zeta)
    kappa = np.asarray(kappa, dtype=float)
    wm = eta**2 * (1.0 - kappa) ** 2
    wp = eta**2 * (1.0 + kappa) ** 2
    profile = ((1.0 + wm) ** -3 - (1.0 + wp) ** -3) / 3.0
    log_part = -4.0 * (_log_antiderivative(wp) - _log_antiderivative(wm))
    return -(8.0 * eta * kappa / math.pi) * (math.log(zeta) * profile + log_part)


def entropy_integral(eta: float, zeta: float, quad: QuadratureConfig = QuadratureConfig()) -> tuple[float, float]:
    """Signed value and error estimate of int_0^inf g(kappa) dkappa.

    The starting cut-off is stretched by 1/eta so the profile width is O(1)
    in the integration variable for every eta.
    """
    _check_scale(eta, zeta)
    config = QuadratureConfig(quad.rel_tol, quad.abs_tol, quad.kappa_max * max(1.0, 1.0 / eta),
                              quad.max_doublings, quad.max_panels, quad.rule)
    return integrate_semi_infinite(lambda x: g_integrand(x, eta, zeta), config, initial_panels=16)


def hydrogen_entropy(eta: float, zeta: float, quad: QuadratureConfig = QuadratureConfig()) -> EntropyValue:
    """Entanglement entropy of the electron at spectral scale (eta, zeta).

    Raises
    ------
    DomainError
        When zeta is so large that the continuum integral is negative; the
        plane-wave picture only holds for small zeta.
    """
    val, err = entropy_integral(eta, zeta, quad)
    if val < 0.0:
        raise DomainError(f"zeta = {zeta} too large: continuum entropy integral is negative ({val:.6g})")
    return EntropyValue(val, error_estimate=err)


def radial_entropy(zeta: float, quad: QuadratureConfig = QuadratureConfig()) -> float:
    """Entropy via the shifted radius u = a0 |k - k_e|:

        S = -(32/pi) int_0^inf u^2 f(u) [ln zeta + ln f(u)] du,  f = (1+u^2)^-4.
    """
    if zeta <= 0:
        raise DomainError("zeta must be positive")
    lz = math.log(zeta)

    def integrand(u):
        f = spectral_profile(u)
        return -(32.0 / math.pi) * u * u * f * (lz - 4.0 * np.log1p(u * u))

    val, _ = integrate_semi_infinite(integrand, quad)
    return val


def closed_form_entropy(zeta: float) -> float:
    """-ln(zeta) + 8 ln 2 - 10/3, the exact value of both integrals above."""
    return -math.log(zeta) + RADIAL_CONSTANT


###############################################################################
# Coulomb -> oscillator mappings
###############################################################################


def rydberg_binding(n: int = 1, m: float = 1.0, e2: float = 1.0, hbar: float = 1.0) -> float:
    if n < 1:
        raise DomainError("principal quantum number must be >= 1")
    return m * e2**2 / (2.0 * n * n * hbar**2)


def mapping_beta(B: float, m: float = 1.0, hbar: float = 1.0, variant: str = FOUR_DIM_OSCILLATOR) -> float:
    """Decay constant beta of the mapped ground state exp(-beta r / 2).

    four_dim_oscillator: w = sqrt(2B/m), beta = 2 m w / hbar.
    isotonic:            w = sqrt(8B/m), beta = m w / hbar.
    """
    if B <= 0:
        raise DomainError("binding energy must be positive")
    if variant == FOUR_DIM_OSCILLATOR:
        return 2.0 * m * math.sqrt(2.0 * B / m) / hbar
    if variant == ISOTONIC:
        return m * math.sqrt(8.0 * B / m) / hbar
    raise ValueError(f"unknown mapping variant {variant!r}")


def mapped_length(beta: float) -> float:
    """Bohr-radius equivalent 2/beta of a mapped wavefunction exp(-beta r/2)."""
    return 2.0 / beta


def mapped_rho_eigenvalue(k, beta: float, k_e, volume: float):
    """Eigenvalues from the mapped ground state, built from its own Fourier transform.

    phi(r) = beta^{3/2} / sqrt(8 pi) exp(-beta r / 2) has
    |phi(q)|^2 = (beta^3 / 8 pi) (8 pi b)^2 / (b^2 + q^2)^4 with b = beta/2.
    """
    k = np.asarray(k, dtype=float)
    q2 = np.sum((k - np.asarray(k_e, dtype=float)) ** 2, axis=-1)
    b = 0.5 * beta
    return beta**3 / (8.0 * math.pi) * (8.0 * math.pi * b) ** 2 / (b * b + q2) ** 4 / volume


def mapped_params(params: HydrogenParams, variant: str) -> tuple[float, SpectralScale]:
    """(beta, scale) of the mapped pipeline for the ground state of ``params``."""
    m = params.reduced_mass
    B = rydberg_binding(1, m, params.e2, params.hbar)
    beta = mapping_beta(B, m, params.hbar, variant)
    a = mapped_length(beta)
    return beta, SpectralScale(a * params.k_e, 64.0 * math.pi * a**3 / params.volume)


def mapping_equivalence_check(samples=((1.0, 1e-2), (1.0, 1e-4), (0.5, 1e-1)), tol: float = 1e-6,
                              params: HydrogenParams = HydrogenParams(),
                              quad: QuadratureConfig = QuadratureConfig()) -> dict:
    """Compare mapped and unmapped pipelines.

    For each variant the mapped beta must satisfy beta a0 = 2, and for every
    (eta, zeta) sample the entropy computed from the mapped length scale must
    equal the unmapped entropy within ``tol``.
    """
    report = {"beta_a0": {}, "entropy": [], "ok": True}
    for variant in (FOUR_DIM_OSCILLATOR, ISOTONIC):
        beta, _ = mapped_params(params, variant)
        report["beta_a0"][variant] = beta * params.a0
        if abs(beta * params.a0 - 2.0) > 1e-12:
            report["ok"] = False
    a0 = params.a0
    for eta, zeta in samples:
        unmapped = entropy_integral(eta, zeta, quad)[0]
        row = {"eta": eta, "zeta": zeta, "unmapped": unmapped}
        for variant in (FOUR_DIM_OSCILLATOR, ISOTONIC):
            beta, _ = mapped_params(params, variant)
            ratio = mapped_length(beta) / a0
            # same physical k_e and Omega, mapped length in place of a0
            mapped = entropy_integral(eta * ratio, zeta * ratio**3, quad)[0]
            row[variant] = mapped
            if abs(mapped - unmapped) > tol:
                report["ok"] = False
        report["entropy"].append(row)
    return report
