import math

import numpy as np
import pytest

from zeromode import lattice as lt
from zeromode.core import eigendecompose_symmetric


def test_params_validation():
    with pytest.raises(ValueError):
        lt.LatticeParams(1)
    with pytest.raises(ValueError):
        lt.LatticeParams(4, a=0.0)
    with pytest.raises(ValueError):
        lt.LatticeParams(4, boundary="open")


def test_three_site_matrix_entries():
    a, m = 0.8, 1.3
    k = lt.build_coupling_matrix(lt.LatticeParams(3, a, m)).potential
    np.testing.assert_allclose(np.diag(k), m * m + 2 / a**2)
    assert k[0, 1] == k[1, 2] == k[0, 2] == pytest.approx(-1 / a**2)


def test_two_site_double_wrap():
    a = 0.5
    k = lt.build_coupling_matrix(lt.LatticeParams(2, a, 1.0)).potential
    assert k[0, 1] == pytest.approx(-2 / a**2)
    p = lt.LatticeParams(2, a, 1.0)
    np.testing.assert_allclose(eigendecompose_symmetric(k).eigenvalues, np.sort(lt.dispersion(np.arange(2), p)))


def test_massless_row_sums_vanish():
    for n in (2, 3, 8):
        k = lt.build_coupling_matrix(lt.LatticeParams(n, 0.7, 0.0)).potential
        np.testing.assert_allclose(k.sum(axis=1), 0.0, atol=1e-14)


def test_dispersion_examples():
    p = lt.LatticeParams(3, 1.0, 0.5)
    assert lt.dispersion(0, p) == pytest.approx(0.25)
    assert lt.dispersion(1, p) == pytest.approx(0.25 + 3.0)
    assert lt.dispersion(0, lt.LatticeParams(5, 1.0, 0.0)) == 0.0
    with pytest.raises(ValueError):
        lt.dispersion(3, p)


@pytest.mark.parametrize("n", [2, 3, 7, 16, 33])
def test_dispersion_equals_circulant(n):
    p = lt.LatticeParams(n, 0.9, 0.4)
    eig = eigendecompose_symmetric(lt.build_coupling_matrix(p)).eigenvalues
    np.testing.assert_allclose(eig, np.sort(lt.dispersion(np.arange(n), p)), atol=1e-12)


def test_transformed_modes_examples():
    s = lt.transformed_modes(lt.LatticeParams(6, 1.0, math.sqrt(2.0)))
    assert s.mu == pytest.approx(0.5)
    assert s.omega_bar[0] == pytest.approx(math.sqrt(0.5))
    assert s.omega_bar[3] == pytest.approx(math.sqrt(1.5))
    tiny = lt.transformed_modes(lt.LatticeParams(6, 1.0, 1e-7))
    assert tiny.mu == pytest.approx(1.0) and tiny.omega_bar[0] < 1e-6


def test_transformed_matrix_is_rescaled_original():
    p = lt.LatticeParams(10, 0.6, 0.9)
    k = lt.build_coupling_matrix(p).potential
    kt = lt.transformed_coupling_matrix(p.mu, p.N).potential
    np.testing.assert_allclose(kt, k / k[0, 0], atol=1e-15)
    assert lt.half_chain_entropy(p).nats == pytest.approx(lt.half_chain_entropy(p, use_transformed=True).nats,
                                                          abs=1e-12)


def test_zero_mode_count_examples():
    assert lt.zero_mode_count(eigendecompose_symmetric(lt.build_coupling_matrix(lt.LatticeParams(7, 1.0, 0.0)))) == 1
    assert lt.zero_mode_count(eigendecompose_symmetric(lt.build_coupling_matrix(lt.LatticeParams(7, 1.0, 1.0)))) == 0
    assert lt.zero_mode_count(lt.transformed_modes(mu=1.0, N=5)) == 1


def test_two_site_heavy_field_near_product():
    assert lt.half_chain_entropy(lt.LatticeParams(2, 1.0, 10.0)).nats < 0.01


def test_mu_entropy_increases():
    s = [lt.mu_entropy(mu, 32).nats for mu in (0.9, 0.99, 0.999)]
    assert s[0] < s[1] < s[2]


def test_massless_chain_divergent():
    assert lt.half_chain_entropy(lt.LatticeParams(8, 1.0, 0.0)).divergent


def test_wide_spacing_decouples():
    s = [lt.half_chain_entropy(lt.LatticeParams(8, a, 1.0)).nats for a in (1.0, 10.0, 100.0)]
    assert s[0] > s[1] > s[2] and s[2] < 1e-6


def test_uv_growth_at_fixed_length():
    length = 8.0
    s = [lt.half_chain_entropy(lt.LatticeParams(int(round(length / a)), a, 1.0)).nats
         for a in (1.0, 0.5, 0.25)]
    assert s[0] < s[1] < s[2]


def test_mu_to_mass_roundtrip():
    p = lt.LatticeParams(4, 0.7, 1.9)
    assert lt.mu_to_mass(p.mu, p.a) == pytest.approx(1.9)


def test_three_site_cross_check():
    rep = lt.three_site_cross_check(m_f=0.5, a=1.2)
    assert rep["matrix_vs_modes"] < 1e-12
    assert rep["dispersion_vs_circulant"] < 1e-12
    # reference modes belong to the open chain: mismatch with the periodic dispersion is expected
    assert rep["dispersion_mismatch"] > 0.1
