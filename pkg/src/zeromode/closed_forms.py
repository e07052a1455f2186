"""
Closed-form entropies for the negatively coupled oscillator pair.

    H = p1^2/2m + p2^2/2m + m/2 [w0^2 (x1^2 + x2^2) - w1^2 (x1 - x2)^2]

Normal modes x+- = (x1 +- x2)/sqrt(2) have w+ = w0 and
w- = sqrt(w0^2 - 2 w1^2); the entropy of either oscillator depends only on
R = w-/w+ and diverges as R -> 0 (the x- mode becomes a free particle).

Also here: the plane-wave (free-particle) limit of one normal mode, the
infra-red energy choice that matches the two pictures, and the perturbative
entropy in distorted oscillator coordinates.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import EntropyValue, entropy_of_xi
from .errors import DomainError, ImaginaryMode

EPS_WARN = 0.2
EPS_CAP = 0.5


@dataclass(frozen=True)
class CoupledPair:
    omega0: float
    omega1: float = 0.0
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.omega0 <= 0 or self.omega1 < 0 or self.mass <= 0 or self.hbar <= 0:
            raise ValueError(f"invalid pair parameters: {self}")

    @classmethod
    def from_ratio(cls, r: float, omega0: float = 1.0, mass: float = 1.0, hbar: float = 1.0) -> "CoupledPair":
        """Pair whose normal-frequency ratio w-/w+ equals ``r``."""
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"R must lie in [0, 1], got {r}")
        return cls(omega0, omega0 * math.sqrt((1.0 - r * r) / 2.0), mass, hbar)

    def potential_matrix(self) -> np.ndarray:
        """Unit-mass potential matrix in (x1, x2) (coordinates scaled by sqrt(m))."""
        d = self.omega0**2 - self.omega1**2
        return np.array([[d, self.omega1**2], [self.omega1**2, d]])


@dataclass(frozen=True)
class ModePair:
    omega_plus: float
    omega_minus: float
    beta_plus: float
    beta_minus: float

    @property
    def ratio(self) -> float:
        return self.omega_minus / self.omega_plus


@dataclass(frozen=True)
class PlaneWaveLimit:
    energy: float
    wavenumber: float
    volume: float


def normal_modes(pair: CoupledPair) -> ModePair:
    disc = pair.omega0**2 - 2.0 * pair.omega1**2
    if disc < 0:
        raise ImaginaryMode(f"2 w1^2 > w0^2 ({2 * pair.omega1**2:.6g} > {pair.omega0**2:.6g})")
    wp = pair.omega0
    wm = math.sqrt(disc)
    return ModePair(wp, wm, pair.mass * wp / pair.hbar, pair.mass * wm / pair.hbar)


def xi_of_R(r: float) -> float:
    """Ladder parameter of the reduced state as a function of R = w-/w+."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"R must lie in [0, 1], got {r}")
    sr = math.sqrt(r)
    return (1.0 - r) ** 2 / (1.0 + r * r + 6.0 * r + 4.0 * (1.0 + r) * sr)


def entropy_closed(r: float) -> EntropyValue:
    xi = xi_of_R(r)
    if r == 0.0:
        return EntropyValue.divergent_value("zero-mode")
    return EntropyValue(entropy_of_xi(xi))


def reduced_kernel_params(pair: CoupledPair | ModePair) -> tuple[float, float, float, float]:
    """(gamma1, gamma2, varrho, xi) of the single-oscillator reduced kernel.

    rho1(x, x') ~ exp(-gamma1 (x^2 + x'^2)/2 + gamma2 x x'), with eigenfunctions
    Hermite functions of width 1/sqrt(varrho) and eigenvalues (1 - xi) xi^n.
    """
    modes = normal_modes(pair) if isinstance(pair, CoupledPair) else pair
    bp, bm = modes.beta_plus, modes.beta_minus
    s = bp + bm
    gamma1 = (bp * bp + bm * bm + 6.0 * bp * bm) / (4.0 * s)
    gamma2 = (bp - bm) ** 2 / (4.0 * s)
    varrho = math.sqrt(bp * bm)
    return gamma1, gamma2, varrho, gamma2 / (gamma1 + varrho)


###############################################################################
# Brute-force grid oracle
###############################################################################


def grid_reduced_spectrum(beta_plus: float, beta_minus: float, half_width: float | None = None,
                          points: int = 512) -> np.ndarray:
    """Eigenvalues of rho1 obtained by sampling the two-body ground state.

    Psi(x1, x2) is tabulated on an n x n grid; rho1 = h Psi Psi^T is the
    discretised partial trace (h = grid spacing) and its spectrum approximates
    the continuous one. Independent of every closed-form expression above.
    """
    if points < 64:
        raise ValueError("grid oracle needs at least 64 points")
    if half_width is None:
        half_width = 6.0 / math.sqrt(min(beta_plus, beta_minus))
    x = np.linspace(-half_width, half_width, points)
    h = x[1] - x[0]
    x1, x2 = np.meshgrid(x, x, indexing="ij")
    psi = (beta_plus * beta_minus) ** 0.25 / math.sqrt(math.pi) * np.exp(
        -beta_plus * (x1 + x2) ** 2 / 4.0 - beta_minus * (x1 - x2) ** 2 / 4.0
    )
    rho = h * h * (psi @ psi.T)
    p = np.linalg.eigvalsh(rho)[::-1]
    return np.clip(p, 0.0, None)


def _spectrum_entropy(p: np.ndarray) -> float:
    p = p[p > 1e-14]
    return float(-np.sum(p * np.log(p)))


def grid_oracle_entropy(pair: CoupledPair | ModePair, half_width: float | None = None,
                        points: int | None = None, tol: float = 1e-4) -> EntropyValue:
    """Grid-diagonalisation entropy of one oscillator.

    With ``points`` given, a single grid is used. Otherwise the grid is doubled
    from 256 until successive entropies differ by less than ``tol``.
    """
    modes = normal_modes(pair) if isinstance(pair, CoupledPair) else pair
    if modes.beta_minus == 0.0:
        return EntropyValue.divergent_value("zero-mode")
    bp, bm = modes.beta_plus, modes.beta_minus
    if points is not None:
        return EntropyValue(max(_spectrum_entropy(grid_reduced_spectrum(bp, bm, half_width, points)), 0.0))
    n = 256
    prev = _spectrum_entropy(grid_reduced_spectrum(bp, bm, half_width, n))
    while n < 4096:
        n *= 2
        cur = _spectrum_entropy(grid_reduced_spectrum(bp, bm, half_width, n))
        if abs(cur - prev) < tol:
            return EntropyValue(max(cur, 0.0), error_estimate=abs(cur - prev))
        prev = cur
    return EntropyValue(max(prev, 0.0))


def grid_oracle_xi(pair: CoupledPair | ModePair, points: int = 512) -> float:
    """xi estimated as the ratio of the two largest grid eigenvalues."""
    modes = normal_modes(pair) if isinstance(pair, CoupledPair) else pair
    p = grid_reduced_spectrum(modes.beta_plus, modes.beta_minus, points=points)
    return float(p[1] / p[0])


###############################################################################
# Free-particle limit
###############################################################################


def plane_wave_volume(k: float, omega: float, mass: float = 1.0, hbar: float = 1.0) -> float:
    """Normalisation length pi hbar k / (m w) of the plane-wave limit; inf at w = 0."""
    if k <= 0 or omega < 0:
        raise DomainError("k must be positive and omega non-negative")
    if omega == 0.0:
        return math.inf
    return math.pi * hbar * k / (mass * omega)


def ir_energy_choice(omega0: float, hbar: float = 1.0) -> float:
    """Plane-wave energy 8 hbar w0 / (pi e^2)."""
    if omega0 <= 0:
        raise DomainError("omega0 must be positive")
    return 8.0 * hbar * omega0 / (math.pi * math.e**2)


def plane_wave_limit(energy: float, omega: float, mass: float = 1.0, hbar: float = 1.0) -> PlaneWaveLimit:
    k = math.sqrt(2.0 * mass * energy) / hbar
    return PlaneWaveLimit(energy, k, plane_wave_volume(k, omega, mass, hbar))


def free_particle_entropy(omega_plus: float, omega_minus: float, energy_minus: float | None = None,
                          mass: float = 1.0, hbar: float = 1.0) -> EntropyValue:
    """Entropy with the x- mode in its plane-wave limit.

        S = -sqrt(2) ln[ (4 w- / (e k-)) sqrt(m / (pi hbar w+)) ],  k- = sqrt(2 m E-)/hbar

    ``energy_minus`` defaults to :func:`ir_energy_choice` of ``omega_plus``,
    in which case S = -sqrt(2) ln(w-/w+).
    """
    if omega_plus <= 0 or omega_minus < 0:
        raise DomainError("frequencies must be positive")
    if omega_minus == 0.0:
        return EntropyValue.divergent_value("zero-mode")
    if energy_minus is None:
        energy_minus = ir_energy_choice(omega_plus, hbar)
    k_minus = math.sqrt(2.0 * mass * energy_minus) / hbar
    arg = 4.0 * omega_minus / (math.e * k_minus) * math.sqrt(mass / (math.pi * hbar * omega_plus))
    s = -math.sqrt(2.0) * math.log(arg)
    if s < 0.0:
        raise DomainError(f"plane-wave formula gives negative entropy {s:.6g}; parameters outside its range")
    return EntropyValue(s)


def plane_wave_reduced_eigenvalue(k, k_minus: float, beta_plus: float, beta_minus: float, volume: float):
    """Fourier-space eigenvalues (4/Omega) sqrt(pi/b+) exp(-(sqrt(2) k - k-)^2 / b-)."""
    k = np.asarray(k, dtype=float)
    return 4.0 / volume * math.sqrt(math.pi / beta_plus) * np.exp(-((math.sqrt(2.0) * k - k_minus) ** 2) / beta_minus)


def plane_wave_trace(beta_plus: float, beta_minus: float) -> float:
    """Closed form of int dk (Omega/2pi) rho1(k) for the eigenvalues above: sqrt(2 b-/b+)."""
    return math.sqrt(2.0 * beta_minus / beta_plus)


def plane_wave_spectrum_entropy(k_minus: float, beta_plus: float, beta_minus: float, volume: float,
                                rel_tol: float = 1e-12) -> float:
    """-int dk (Omega/2pi) rho ln rho over the plane-wave eigenvalues, by quadrature."""
    from .quadrature import integrate

    centre = k_minus / math.sqrt(2.0)
    width = 12.0 * math.sqrt(beta_minus / 2.0)

    def integrand(k):
        rho = plane_wave_reduced_eigenvalue(k, k_minus, beta_plus, beta_minus, volume)
        log_rho = (math.log(4.0 / volume * math.sqrt(math.pi / beta_plus))
                   - (math.sqrt(2.0) * k - k_minus) ** 2 / beta_minus)
        return -volume / (2.0 * math.pi) * rho * log_rho

    val, _ = integrate(integrand, centre - width, centre + width, rel_tol, 1e-15, initial_panels=8)
    return val


###############################################################################
# Distorted-coordinate entanglement (small epsilon)
###############################################################################


def _check_eps(eps: float) -> None:
    if abs(eps) > EPS_CAP:
        raise DomainError(f"|eps| = {abs(eps)} exceeds the expansion cap {EPS_CAP}")
    if abs(eps) > EPS_WARN:
        warnings.warn(f"eps = {eps} is beyond the small-eps regime (|eps| <= {EPS_WARN})", RuntimeWarning, stacklevel=3)


def distorted_lambda(eps: float) -> float:
    """Single reduced eigenvalue 1 - e/4 - e^2/24 - e^3/64."""
    _check_eps(eps)
    return 1.0 - eps / 4.0 - eps**2 / 24.0 - eps**3 / 64.0


def distorted_entropy(eps: float) -> EntropyValue:
    """-lambda ln lambda for the single eigenvalue above."""
    lam = distorted_lambda(eps)
    return EntropyValue(max(-lam * math.log(lam), 0.0))
