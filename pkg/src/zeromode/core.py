"""
Gaussian ground-state reduction for N coupled oscillators.

A quadratic Hamiltonian with unit masses,

    H = 1/2 p.p + 1/2 x^T K x,

has ground state psi(x) ~ exp(-x^T W x / 2) with W = K^{1/2}. Tracing out a
subset of the coordinates leaves a Gaussian reduced density matrix whose
spectrum factorises into geometric ladders p_n = (1 - xi) xi^n, one per kept
mode. The entropy is then a closed-form function of the xi values.

Every other oscillator model in the package (two oscillators, the tri-partite
system, the lattice field) is reduced to a call into this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvertedOscillator, NotSymmetric, SingularBlock

DEFAULT_ZERO_TOL = 1e-10
SYMMETRY_TOL = 1e-12

POSITIVE = "positive"
ZERO = "zero"
NEGATIVE = "negative"


###############################################################################
# Domain types
###############################################################################


@dataclass(frozen=True)
class QuadraticHamiltonian:
    """Potential matrix ``K`` of a unit-mass quadratic Hamiltonian."""

    potential: np.ndarray
    zero_tol: float = DEFAULT_ZERO_TOL

    def __post_init__(self):
        k = np.array(self.potential, dtype=float)
        if k.ndim != 2 or k.shape[0] != k.shape[1] or k.shape[0] < 1:
            raise NotSymmetric(f"potential must be a non-empty square matrix, got shape {k.shape}")
        scale = max(np.max(np.abs(k)), np.finfo(float).tiny)
        asym = np.max(np.abs(k - k.T)) / scale
        if asym > SYMMETRY_TOL:
            raise NotSymmetric(f"potential is not symmetric (relative asymmetry {asym:.3g})")
        k = 0.5 * (k + k.T)
        k.setflags(write=False)
        object.__setattr__(self, "potential", k)

    @property
    def dimension(self) -> int:
        return self.potential.shape[0]


@dataclass(frozen=True)
class NormalModeSpectrum:
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # columns
    regimes: tuple[str, ...] = ()


@dataclass(frozen=True)
class XiSpectrum:
    """Per-mode ladder parameters of a reduced Gaussian state.

    When a zero-mode makes the reduced state non-normalisable, ``divergent``
    is set and ``xis`` holds only the modes that could still be evaluated.
    """

    xis: tuple[float, ...]
    divergent: bool = False

    def __post_init__(self):
        for xi in self.xis:
            if not 0.0 <= xi < 1.0:
                raise ValueError(f"xi out of range [0, 1): {xi}")


@dataclass(frozen=True)
class EntropyValue:
    """Von Neumann entropy in nats, or ``inf`` with a stated cause."""

    nats: float
    divergence_cause: str | None = None
    error_estimate: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if math.isnan(self.nats) or self.nats < 0.0:
            raise ValueError(f"entropy must be non-negative, got {self.nats}")
        if math.isinf(self.nats) and self.divergence_cause is None:
            raise ValueError("divergent entropy requires a divergence_cause")

    @classmethod
    def divergent_value(cls, cause: str = "zero-mode") -> "EntropyValue":
        return cls(math.inf, cause)

    @property
    def divergent(self) -> bool:
        return math.isinf(self.nats)

    def __float__(self) -> float:
        return self.nats


###############################################################################
# Eigensolver
###############################################################################


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Disjoint (p, q) pairings covering every pair once per sweep (circle method)."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p, q = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                p.append(min(a, b))
                q.append(max(a, b))
        rounds.append((np.array(p, dtype=int), np.array(q, dtype=int)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(a: np.ndarray, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalisation of a real symmetric matrix.

    Rotations within a round act on disjoint index pairs, so each round is
    applied as one vectorised two-sided update.

    Returns
    -------
    (w, v)
        Eigenvalues in ascending order and the orthogonal matrix whose
        columns are the matching eigenvectors.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    rounds = _round_robin(n)
    eps = np.finfo(float).eps
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        off = np.sum(a[iu] ** 2)
        if off <= (eps * eps) * np.sum(a.diagonal() ** 2) * 1e-4:
            break
        for p, q in rounds:
            apq = a[p, q]
            app = a[p, p]
            aqq = a[q, q]
            active = np.abs(apq) > eps * 1e-3 * np.sqrt(np.abs(app * aqq))
            active &= apq != 0.0
            if not np.any(active):
                continue
            p, q, apq, app, aqq = p[active], q[active], apq[active], app[active], aqq[active]
            with np.errstate(over="ignore"):
                # tiny apq: theta -> inf gives t = 0, i.e. no rotation
                theta = (aqq - app) / (2.0 * apq)
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * cp - s * cq
            a[:, q] = s * cp + c * cq
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
    w = a.diagonal().copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _as_matrix(k) -> np.ndarray:
    if isinstance(k, QuadraticHamiltonian):
        return k.potential
    return QuadraticHamiltonian(k).potential


def _zero_threshold(eigenvalues: np.ndarray, zero_tol: float) -> float:
    return zero_tol * max(1.0, float(np.max(np.abs(eigenvalues))))


def classify_modes(spectrum: NormalModeSpectrum | Sequence[float], zero_tol: float = DEFAULT_ZERO_TOL) -> tuple[str, ...]:
    """Label each squared frequency as positive, zero or negative."""
    w = np.asarray(spectrum.eigenvalues if isinstance(spectrum, NormalModeSpectrum) else spectrum, dtype=float)
    thr = _zero_threshold(w, zero_tol)
    labels = []
    for kappa in w:
        if abs(kappa) <= thr:
            labels.append(ZERO)
        elif kappa < 0:
            labels.append(NEGATIVE)
        else:
            labels.append(POSITIVE)
    return tuple(labels)


def eigendecompose_symmetric(k, zero_tol: float = DEFAULT_ZERO_TOL, method: str = "jacobi") -> NormalModeSpectrum:
    """Normal-mode decomposition of a symmetric potential matrix.

    ``method="jacobi"`` uses the in-package solver; ``"lapack"`` defers to
    :func:`numpy.linalg.eigh` for large matrices.
    """
    mat = _as_matrix(k)
    if method == "jacobi":
        w, v = jacobi_eigh(mat)
    elif method == "lapack":
        w, v = np.linalg.eigh(mat)
    else:
        raise ValueError(f"unknown method {method!r}")
    return NormalModeSpectrum(w, v, classify_modes(w, zero_tol))


###############################################################################
# Reduction
###############################################################################


def matrix_sqrt_psd(k, zero_tol: float = DEFAULT_ZERO_TOL, spectrum: NormalModeSpectrum | None = None) -> np.ndarray:
    """Spectral square root of a positive semidefinite matrix.

    Eigenvalues within ``-zero_tol`` (relative) of zero are clipped to 0.

    Raises
    ------
    InvertedOscillator
        If any eigenvalue is more negative than the tolerance.
    """
    spec = spectrum if spectrum is not None else eigendecompose_symmetric(k, zero_tol)
    w = spec.eigenvalues
    if w[0] < -_zero_threshold(w, zero_tol):
        raise InvertedOscillator(f"negative squared frequency {w[0]:.6g}")
    root = np.sqrt(np.clip(w, 0.0, None))
    v = spec.eigenvectors
    omega = (v * root) @ v.T
    return 0.5 * (omega + omega.T)


def _index_sets(n: int, traced: Iterable[int]) -> tuple[np.ndarray, np.ndarray]:
    tr = sorted(set(int(i) for i in traced))
    if not tr or len(tr) >= n or tr[0] < 0 or tr[-1] >= n:
        raise ValueError(f"traced set must be a non-empty proper subset of range({n}), got {tr}")
    kept = [i for i in range(n) if i not in tr]
    return np.array(tr), np.array(kept)


def xi_from_beta_prime(bp: float) -> float:
    """Ladder parameter from an eigenvalue of gamma^{-1} beta."""
    bp = min(max(bp, 0.0), 1.0)
    return bp / (1.0 + math.sqrt((1.0 - bp) * (1.0 + bp)))


def reduce_to_xi(k, traced: Iterable[int], zero_tol: float = DEFAULT_ZERO_TOL) -> XiSpectrum:
    """Trace out ``traced`` coordinates and return the xi-spectrum of the rest.

    With W = K^{1/2} partitioned as [[A, B], [B^T, C]] (A = traced block),
    beta = B^T A^{-1} B / 2, gamma = C - beta, and each eigenvalue b of
    gamma^{-1/2} beta gamma^{-1/2} yields xi = b / (1 + sqrt(1 - b^2)).

    Any exact zero-mode of ``K`` makes the global state non-normalisable; the
    result is then flagged divergent instead of raising.
    """
    ham = k if isinstance(k, QuadraticHamiltonian) else QuadraticHamiltonian(k, zero_tol)
    mat = ham.potential
    tr, kept = _index_sets(mat.shape[0], traced)
    spec = eigendecompose_symmetric(mat, zero_tol)
    if NEGATIVE in spec.regimes:
        raise InvertedOscillator(f"negative squared frequency {spec.eigenvalues[0]:.6g}")
    if ZERO in spec.regimes:
        return XiSpectrum((), divergent=True)

    w = matrix_sqrt_psd(mat, zero_tol, spectrum=spec)
    a = w[np.ix_(tr, tr)]
    b = w[np.ix_(tr, kept)]
    c = w[np.ix_(kept, kept)]
    try:
        chol = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:
        raise SingularBlock("traced block of K^{1/2} is not positive definite") from exc
    y = np.linalg.solve(chol, b)
    beta = 0.5 * (y.T @ y)
    gamma = c - beta

    gspec = eigendecompose_symmetric(0.5 * (gamma + gamma.T), zero_tol)
    g = gspec.eigenvalues
    if g[0] <= _zero_threshold(g, zero_tol):
        return XiSpectrum((), divergent=True)
    g_isqrt = (gspec.eigenvectors / np.sqrt(g)) @ gspec.eigenvectors.T
    whitened = g_isqrt @ beta @ g_isqrt
    bps = eigendecompose_symmetric(0.5 * (whitened + whitened.T), zero_tol).eigenvalues

    xis = []
    divergent = False
    for bp in bps:
        xi = xi_from_beta_prime(float(bp))
        if xi >= 1.0 - zero_tol:
            divergent = True
            continue
        xis.append(xi)
    return XiSpectrum(tuple(xis), divergent)


def entropy_of_xi(xi: float) -> float:
    """S(xi) = -ln(1 - xi) - xi/(1 - xi) ln xi for a single geometric ladder."""
    if xi <= 0.0:
        return 0.0
    if xi >= 1.0:
        return math.inf
    return -math.log1p(-xi) - xi / (1.0 - xi) * math.log(xi)


def entropy_from_xi(xi: XiSpectrum) -> EntropyValue:
    if xi.divergent:
        return EntropyValue.divergent_value("zero-mode")
    return EntropyValue(math.fsum(entropy_of_xi(x) for x in xi.xis))


def gaussian_entropy(k, traced: Iterable[int], zero_tol: float = DEFAULT_ZERO_TOL) -> EntropyValue:
    """Entanglement entropy of the kept coordinates after tracing ``traced``."""
    return entropy_from_xi(reduce_to_xi(k, traced, zero_tol))
