import math

import numpy as np
import pytest

from zeromode import hydrogen as hy
from zeromode.errors import DegenerateMomentum, DomainError
from zeromode.quadrature import QuadratureConfig, integrate_semi_infinite

import oracles


@pytest.mark.parametrize("m, e2, expected", [(1.0, 1.0, 1.0), (2.0, 1.0, 0.5), (1.0, 2.0, 0.5)])
def test_bohr_radius(m, e2, expected):
    assert hy.bohr_radius(m, e2, 1.0) == pytest.approx(expected)


def test_params_derived_quantities():
    p = hy.HydrogenParams(m_e=1.0, m_p=3.0, P=2.0)
    assert p.total_mass == 4.0
    assert p.reduced_mass == pytest.approx(0.75)
    assert p.a0 == pytest.approx(1.0 / 0.75)
    assert p.k_e == pytest.approx(0.5)
    np.testing.assert_allclose(np.linalg.norm(p.k_e_vector), 0.5)


def test_com_volume():
    M, w = 3.0, 0.4
    assert hy.com_volume(math.sqrt(3.0) * M * w / math.pi, M, w) == pytest.approx(1.0)
    assert math.isinf(hy.com_volume(1.0, M, 0.0))
    assert hy.com_volume(1.0, M, 0.2) / hy.com_volume(1.0, M, 0.4) == pytest.approx(8.0)
    with pytest.raises(DegenerateMomentum):
        hy.com_volume(0.0, M, w)


def test_rho_eigenvalue_peak_and_shape():
    p = hy.HydrogenParams(P=3.0, omega=0.2)
    zeta = p.scale().zeta
    ke = p.k_e_vector
    assert hy.rho_eigenvalue(ke, p) == pytest.approx(zeta, rel=1e-14)
    shift = np.array([0.0, 1.0 / p.a0, 0.0])
    assert hy.rho_eigenvalue(ke + shift, p) == pytest.approx(zeta / 16.0, rel=1e-14)
    # depends only on |k - k_e|
    other = ke + np.array([1.0, 0.0, 0.0]) / p.a0
    assert hy.rho_eigenvalue(other, p) == pytest.approx(hy.rho_eigenvalue(ke + shift, p), rel=1e-14)


def test_unit_trace_random():
    rng = np.random.default_rng(41)
    for _ in range(5):
        p = hy.HydrogenParams(m_e=rng.uniform(0.5, 2), m_p=rng.uniform(1, 100), P=rng.uniform(0.1, 5),
                              omega=rng.uniform(0.01, 2))
        assert hy.spectral_trace(p) == pytest.approx(1.0, abs=1e-6)


def test_g_endpoints():
    for g in (hy.g_integrand, hy.g_integrand_literal):
        assert g(0.0, 1.0, 1e-2) == 0.0
        assert abs(g(1e6, 1.0, 1e-2)) < 1e-15
        assert np.all(np.abs(g(np.array([1e3, 1e4]), 1.0, 1e-2)) < 1e-12)


def test_g_positive_mid_range():
    kappa = np.linspace(0.2, 2.0, 50)
    for g in (hy.g_integrand, hy.g_integrand_literal):
        assert np.all(g(kappa, 1.0, 1e-2) > 0)


@pytest.mark.parametrize("zeta", sorted(oracles.HYDROGEN_S))
def test_entropy_matches_mpmath(zeta):
    s = hy.hydrogen_entropy(1.0, zeta)
    assert s.nats == pytest.approx(oracles.HYDROGEN_S[zeta], abs=1e-9)
    assert s.error_estimate < 1e-6
    assert hy.radial_entropy(zeta) == pytest.approx(oracles.HYDROGEN_S[zeta], abs=1e-9)
    assert hy.closed_form_entropy(zeta) == pytest.approx(oracles.HYDROGEN_S[zeta], abs=1e-12)


def test_entropy_increases_as_zeta_falls():
    zetas = np.geomspace(1e-1, 1e-6, 12)
    s = [hy.hydrogen_entropy(1.0, z).nats for z in zetas]
    assert all(b > a for a, b in zip(s, s[1:]))


@pytest.mark.parametrize("zeta", [1e-1, 1e-3])
def test_eta_independence(zeta):
    s = [hy.hydrogen_entropy(eta, zeta).nats for eta in np.geomspace(0.25, 4.0, 7)]
    assert max(s) - min(s) < 1e-4


def test_literal_integrand_is_not_eta_invariant():
    # Kept for plotting only; its area drifts with eta.
    config = QuadratureConfig(kappa_max=64.0)
    areas = [integrate_semi_infinite(lambda x: hy.g_integrand_literal(x, eta, 1e-2), config)[0]
             for eta in (0.5, 1.0, 2.0)]
    assert max(areas) - min(areas) > 1.0


def test_large_zeta_rejected():
    with pytest.raises(DomainError):
        hy.hydrogen_entropy(1.0, 1e3)
    assert hy.entropy_integral(1.0, 1e3)[0] < 0


def test_rydberg():
    assert hy.rydberg_binding(1) == pytest.approx(0.5)
    assert hy.rydberg_binding(2) == pytest.approx(0.125)
    assert hy.rydberg_binding(3) / hy.rydberg_binding(6) == pytest.approx(4.0)


@pytest.mark.parametrize("variant", [hy.FOUR_DIM_OSCILLATOR, hy.ISOTONIC])
def test_mapping_beta(variant):
    assert hy.mapping_beta(0.5, variant=variant) == pytest.approx(2.0, abs=1e-15)
    for m, e2 in ((2.0, 1.0), (0.7, 3.0)):
        beta = hy.mapping_beta(hy.rydberg_binding(1, m, e2), m, 1.0, variant)
        assert beta * hy.bohr_radius(m, e2) == pytest.approx(2.0, abs=1e-12)


def test_mapped_spectra_identical():
    p = hy.HydrogenParams(P=2.0, omega=0.1)
    k = np.random.default_rng(43).normal(size=(40, 3))
    base = hy.rho_eigenvalue(k, p)
    for variant in (hy.FOUR_DIM_OSCILLATOR, hy.ISOTONIC):
        beta, _ = hy.mapped_params(p, variant)
        np.testing.assert_allclose(hy.mapped_rho_eigenvalue(k, beta, p.k_e_vector, p.volume), base, rtol=1e-12)


def test_mapping_equivalence_report():
    rep = hy.mapping_equivalence_check(samples=((1.0, 1e-2), (1.0, 1e-4), (0.5, 1e-1)))
    assert rep["ok"]
    for row in rep["entropy"]:
        assert abs(row[hy.ISOTONIC] - row["unmapped"]) < 1e-6
    # unphysically large zeta: both pipelines agree on the (negative) sign
    big = hy.mapping_equivalence_check(samples=((1.0, 1e4),))["entropy"][0]
    assert big["unmapped"] < 0 and big[hy.FOUR_DIM_OSCILLATOR] < 0
