import math
import warnings

import numpy as np
import pytest

from zeromode import closed_forms as cf
from zeromode.core import reduce_to_xi
from zeromode.errors import DomainError, ImaginaryMode

import oracles


def test_normal_mode_examples():
    m = cf.normal_modes(cf.CoupledPair(1.0, 0.0))
    assert m.omega_plus == m.omega_minus == 1.0
    # w- = sqrt(w0^2 - 2 w1^2): rounding in 2 w1^2 leaves sqrt(eps) ~ 1.5e-8
    assert cf.normal_modes(cf.CoupledPair(1.0, 1.0 / math.sqrt(2.0))).omega_minus < 2e-8
    assert cf.normal_modes(cf.CoupledPair(2.0, 1.0)).omega_minus == pytest.approx(math.sqrt(2.0))


def test_imaginary_mode_rejected():
    with pytest.raises(ImaginaryMode):
        cf.normal_modes(cf.CoupledPair(1.0, 0.8))


def test_xi_endpoints_and_domain():
    assert cf.xi_of_R(1.0) == 0.0
    assert cf.xi_of_R(0.0) == 1.0
    for bad in (-0.1, 1.1):
        with pytest.raises(DomainError):
            cf.xi_of_R(bad)


@pytest.mark.parametrize("r", sorted(oracles.XI_AT_R))
def test_xi_frozen_values(r):
    assert cf.xi_of_R(r) == pytest.approx(oracles.XI_AT_R[r], abs=1e-15)


@pytest.mark.parametrize("r", sorted(oracles.ENTROPY_AT_R))
def test_entropy_frozen_values(r):
    assert cf.entropy_closed(r).nats == pytest.approx(oracles.ENTROPY_AT_R[r], abs=1e-14)


def test_entropy_endpoints():
    assert cf.entropy_closed(1.0).nats == 0.0
    s = cf.entropy_closed(0.0)
    assert s.divergent and s.divergence_cause == "zero-mode"


def test_kernel_params_examples():
    g1, g2, rho, xi = cf.reduced_kernel_params(cf.ModePair(1.0, 1.0, 1.0, 1.0))
    # b+ = b- = 1: gamma1 = 8/8 = 1, gamma2 = 0
    assert g1 == pytest.approx(1.0) and g2 == 0.0 and rho == 1.0 and xi == 0.0
    g1, g2, rho, xi = cf.reduced_kernel_params(cf.ModePair(1.0, 0.25, 1.0, 0.25))
    assert g2 == pytest.approx(0.1125)
    assert xi == pytest.approx(cf.xi_of_R(0.25), abs=1e-15)
    *_, xi_small = cf.reduced_kernel_params(cf.ModePair(1.0, 1e-12, 1.0, 1e-12))
    assert xi_small == pytest.approx(1.0, abs=1e-5)


def test_grid_oracle_product_state():
    assert cf.grid_oracle_entropy(cf.CoupledPair.from_ratio(1.0), points=256).nats <= 1e-6


@pytest.mark.parametrize("r", [0.5, 0.8])
def test_grid_oracle_matches_closed_form(r):
    s = cf.grid_oracle_entropy(cf.CoupledPair.from_ratio(r), points=512)
    assert abs(s.nats - cf.entropy_closed(r).nats) < 1e-3


def test_grid_oracle_rejects_coarse_grid():
    with pytest.raises(ValueError):
        cf.grid_reduced_spectrum(1.0, 0.5, points=32)


def test_xi_from_grid_kernel_and_core_agree():
    for r in (0.25, 0.5, 0.75):
        pair = cf.CoupledPair.from_ratio(r)
        xi = cf.xi_of_R(r)
        assert cf.reduced_kernel_params(pair)[3] == pytest.approx(xi, abs=1e-12)
        assert reduce_to_xi(pair.potential_matrix(), [0]).xis[0] == pytest.approx(xi, abs=1e-12)
        assert cf.grid_oracle_xi(pair) == pytest.approx(xi, abs=1e-3)


def test_plane_wave_volume():
    assert cf.plane_wave_volume(1.0, math.pi) == pytest.approx(1.0)
    assert cf.plane_wave_volume(2.0, 1.0) == pytest.approx(2.0 * math.pi)
    assert math.isinf(cf.plane_wave_volume(1.0, 0.0))


def test_ir_energy_choice():
    assert cf.ir_energy_choice(math.pi * math.e**2 / 8.0) == pytest.approx(1.0)
    assert cf.ir_energy_choice(1.0) == pytest.approx(oracles.IR_ENERGY_AT_1, abs=1e-15)
    w1 = 0.7
    assert cf.ir_energy_choice(math.sqrt(2.0) * w1) == pytest.approx(8.0 * math.sqrt(2.0) / (math.pi * math.e**2) * w1)


def test_free_particle_entropy_examples():
    assert cf.free_particle_entropy(1.0, 1.0).nats == pytest.approx(0.0, abs=1e-15)
    assert cf.free_particle_entropy(1.0, 0.1).nats == pytest.approx(-math.sqrt(2.0) * math.log(0.1), abs=1e-14)
    assert cf.free_particle_entropy(1.0, 0.0).divergent


def test_free_particle_entropy_negative_rejected():
    # with a large plane-wave energy the log argument drops below one
    with pytest.raises(DomainError):
        cf.free_particle_entropy(1.0, 0.9, energy_minus=1e-4)


def test_plane_wave_density_peak():
    k = np.linspace(-3, 5, 8001)
    rho = cf.plane_wave_reduced_eigenvalue(k, 2.0, 1.0, 0.5, 3.0)
    assert k[np.argmax(rho)] == pytest.approx(2.0 / math.sqrt(2.0), abs=1e-3)
    assert np.all(rho >= 0)


def test_plane_wave_trace_is_not_unity():
    # These Fourier-space eigenvalues integrate to sqrt(2 b-/b+), not 1.
    from zeromode.quadrature import integrate

    bp, bm, vol = 1.0, 0.3, 4.0
    val, _ = integrate(lambda k: vol / (2 * math.pi) * cf.plane_wave_reduced_eigenvalue(k, 0.7, bp, bm, vol),
                       -10.0, 10.0, 1e-13, 1e-15, initial_panels=8)
    assert val == pytest.approx(cf.plane_wave_trace(bp, bm), abs=1e-10)
    assert abs(val - 1.0) > 0.1


def test_plane_wave_entropy_shift_invariant():
    vals = [cf.plane_wave_spectrum_entropy(km, 1.0, 0.4, 3.0) for km in (0.0, 1.0, 10.0)]
    assert max(vals) - min(vals) < 1e-8


def test_distorted_lambda_examples():
    assert cf.distorted_lambda(0.0) == 1.0
    assert cf.distorted_lambda(0.2) == pytest.approx(0.9482083, abs=1e-6)
    assert cf.distorted_lambda(0.1) == pytest.approx(0.97457, abs=1e-5)


def test_distorted_entropy_examples():
    assert cf.distorted_entropy(0.0).nats == 0.0
    assert cf.distorted_entropy(0.2).nats == pytest.approx(oracles.DISTORTED_S_AT_0_2, abs=1e-15)
    h = 1e-4
    assert (cf.distorted_entropy(h).nats - cf.distorted_entropy(0.0).nats) / h == pytest.approx(0.25, rel=0.05)


def test_distorted_warning_and_cap():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cf.distorted_lambda(0.2)
    with pytest.warns(RuntimeWarning):
        cf.distorted_lambda(0.3)
    with pytest.raises(DomainError):
        cf.distorted_lambda(0.6)
