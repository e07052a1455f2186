"""
Periodic 1D lattice of a free massive scalar field.

    H = 1/2 sum_n [pi_n^2/a + (phi_{n+1} - phi_n)^2/a + a m^2 phi_n^2],  phi_N = phi_0

Rescaling to unit kinetic coefficient gives the circulant potential matrix
with diagonal m^2 + 2/a^2 and nearest-neighbour entries -1/a^2, whose
eigenvalues are the dispersion m^2 + (4/a^2) sin^2(pi k / N). The only
possible zero-mode is k = 0 at m = 0.

Up to an overall factor (which leaves the ground-state entropy unchanged) the
same matrix reads diag 1, neighbours -mu/2 with mu = 2/(2 + a^2 m^2); its
frequencies sqrt(1 - mu + 2 mu sin^2(pi i/N)) develop a zero-mode as mu -> 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (DEFAULT_ZERO_TOL, EntropyValue, NormalModeSpectrum, QuadraticHamiltonian,
                   eigendecompose_symmetric, gaussian_entropy)


@dataclass(frozen=True)
class LatticeParams:
    N: int
    a: float = 1.0
    m_f: float = 1.0
    boundary: str = "periodic"

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("lattice needs at least two sites")
        if self.a <= 0 or self.m_f < 0:
            raise ValueError("a must be positive and m_f non-negative")
        if self.boundary != "periodic":
            raise ValueError("only periodic boundaries are supported")

    @property
    def mu(self) -> float:
        return 2.0 / (2.0 + (self.a * self.m_f) ** 2)


@dataclass(frozen=True)
class TransformedSpectrum:
    mu: float
    omega_bar: np.ndarray


def _circulant(n: int, diagonal: float, neighbour: float) -> np.ndarray:
    k = np.diag(np.full(n, float(diagonal)))
    for i in range(n):
        k[i, (i + 1) % n] += neighbour
        k[(i + 1) % n, i] += neighbour
    return k


def build_coupling_matrix(params: LatticeParams) -> QuadraticHamiltonian:
    """Unit-kinetic potential matrix; for N = 2 both neighbours coincide."""
    return QuadraticHamiltonian(_circulant(params.N, params.m_f**2 + 2.0 / params.a**2, -1.0 / params.a**2))


def transformed_coupling_matrix(mu: float, N: int) -> QuadraticHamiltonian:
    """Potential matrix with frequencies omega_bar: diagonal 1, neighbours -mu/2."""
    if not 0.0 < mu <= 1.0:
        raise ValueError("mu must lie in (0, 1]")
    return QuadraticHamiltonian(_circulant(N, 1.0, -mu / 2.0))


def dispersion(k_index, params: LatticeParams):
    """Squared normal frequency m^2 + (4/a^2) sin^2(pi k/N)."""
    k = np.asarray(k_index)
    if np.any((k < 0) | (k >= params.N)):
        raise ValueError("k_index must lie in [0, N)")
    return params.m_f**2 + 4.0 / params.a**2 * np.sin(np.pi * k / params.N) ** 2


def transformed_modes(params: LatticeParams | None = None, *, mu: float | None = None,
                      N: int | None = None) -> TransformedSpectrum:
    if params is not None:
        mu, N = params.mu, params.N
    i = np.arange(N)
    return TransformedSpectrum(mu, np.sqrt(1.0 - mu + 2.0 * mu * np.sin(np.pi * i / N) ** 2))


def zero_mode_count(spectrum, zero_tol: float = DEFAULT_ZERO_TOL) -> int:
    """Number of squared frequencies at or below ``zero_tol`` times the largest.

    Accepts a :class:`NormalModeSpectrum`, a :class:`TransformedSpectrum`
    (frequencies are squared first) or a plain sequence of squared frequencies.
    """
    if isinstance(spectrum, NormalModeSpectrum):
        w = np.asarray(spectrum.eigenvalues)
    elif isinstance(spectrum, TransformedSpectrum):
        w = np.asarray(spectrum.omega_bar) ** 2
    else:
        w = np.asarray(spectrum, dtype=float)
    thr = zero_tol * max(1.0, float(np.max(np.abs(w))))
    return int(np.count_nonzero(w <= thr))


def half_chain(N: int) -> tuple[int, ...]:
    return tuple(range(N // 2))


def half_chain_entropy(params: LatticeParams, cut: Iterable[int] | None = None,
                       use_transformed: bool = False, zero_tol: float = DEFAULT_ZERO_TOL) -> EntropyValue:
    """Entropy of the sites in ``cut`` (default: the first half of the chain).

    The complement is traced out. ``use_transformed`` builds the mu-form
    matrix; it differs from the original by an overall factor only.
    """
    kept = set(half_chain(params.N) if cut is None else cut)
    traced = [i for i in range(params.N) if i not in kept]
    mat = transformed_coupling_matrix(params.mu, params.N) if use_transformed else build_coupling_matrix(params)
    return gaussian_entropy(mat, traced, zero_tol)


def mu_entropy(mu: float, N: int, zero_tol: float = DEFAULT_ZERO_TOL) -> EntropyValue:
    """Half-chain entropy of the mu-form lattice at given mu."""
    return gaussian_entropy(transformed_coupling_matrix(mu, N), [i for i in range(N) if i >= N // 2], zero_tol)


def mu_to_mass(mu: float, a: float = 1.0) -> float:
    """Inverse of mu = 2/(2 + a^2 m^2)."""
    return math.sqrt(2.0 * (1.0 - mu) / mu) / a


###############################################################################
# Three-site cross-check
###############################################################################


def three_site_matrix(m_f: float, a: float = 1.0) -> np.ndarray:
    """Open three-site chain: tridiagonal, no wrap-around entries.

    The diagonal is m_f^2 + 2/a^2, consistent with the lattice Hamiltonian.
    """
    d = m_f**2 + 2.0 / a**2
    t = -1.0 / a**2
    return np.array([[d, t, 0.0], [t, d, t], [0.0, t, d]])


def three_site_modes(m_f: float, a: float = 1.0) -> np.ndarray:
    """Reference three-site squared frequencies, ascending: m^2 + (2 - sqrt2, 2, 2 + sqrt2)/a^2."""
    s2 = math.sqrt(2.0)
    return m_f**2 + np.array([2.0 - s2, 2.0, 2.0 + s2]) / a**2


def three_site_cross_check(m_f: float = 1.0, a: float = 1.0) -> dict:
    """Compare the three-site matrix, the reference modes and the dispersion.

    The tridiagonal matrix reproduces the reference modes, but it is the open
    chain; the periodic chain (dispersion) gives m^2 + (0, 3, 3)/a^2 instead.
    The mismatch is reported in ``dispersion_mismatch``.
    """
    stated = eigendecompose_symmetric(three_site_matrix(m_f, a)).eigenvalues
    modes = three_site_modes(m_f, a)
    params = LatticeParams(3, a, m_f)
    disp = np.sort(dispersion(np.arange(3), params))
    circ = eigendecompose_symmetric(build_coupling_matrix(params)).eigenvalues
    return {
        "matrix_eigenvalues": stated.tolist(),
        "open_chain_modes": modes.tolist(),
        "matrix_vs_modes": float(np.max(np.abs(stated - modes))),
        "dispersion": disp.tolist(),
        "circulant_eigenvalues": circ.tolist(),
        "dispersion_vs_circulant": float(np.max(np.abs(disp - circ))),
        "dispersion_mismatch": float(np.max(np.abs(disp - modes))),
    }
