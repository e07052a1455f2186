"""
zeromode: entanglement entropy of Gaussian ground states near zero-modes.

Modules
-------
core          ground-state reduction for quadratic Hamiltonians (Jacobi eigensolver)
quadrature    adaptive Gauss-Kronrod integration on finite and semi-infinite ranges
closed_forms  coupled oscillator pair, plane-wave limit, distorted coordinates
hydrogen      centre-of-mass / relative entanglement of a moving hydrogen atom
tripartite    two oscillators entangled through a shared environment
lattice       periodic scalar-field lattice and its mu-parametrised form
checks        cross-check registry behind ``zeromode oracle``
"""

__version__ = "0.1.0"

from .errors import (DegenerateCoupling, DegenerateMomentum, DomainError, ImaginaryMode,
                     InvertedOscillator, NotSymmetric, QuadratureError, SingularBlock, ZeroModeError)
from .core import (EntropyValue, NormalModeSpectrum, QuadraticHamiltonian, XiSpectrum, classify_modes,
                   eigendecompose_symmetric, entropy_from_xi, entropy_of_xi, gaussian_entropy, jacobi_eigh,
                   matrix_sqrt_psd, reduce_to_xi)
from .quadrature import QuadratureConfig, gk15, integrate, integrate_semi_infinite
from .closed_forms import (CoupledPair, ModePair, PlaneWaveLimit, distorted_entropy, distorted_lambda,
                           entropy_closed, free_particle_entropy, grid_oracle_entropy, ir_energy_choice,
                           normal_modes, plane_wave_limit, plane_wave_volume, reduced_kernel_params, xi_of_R)
from .hydrogen import (HydrogenParams, closed_form_entropy, com_volume, g_integrand, g_integrand_literal,
                       hydrogen_entropy, mapping_beta, mapping_equivalence_check, rho_eigenvalue, spectral_trace)
from .tripartite import TripartiteParams, classify, entropy_x1, entropy_x2, kappa_closed_form, normal_coordinates
from .lattice import (LatticeParams, build_coupling_matrix, dispersion, half_chain_entropy, mu_entropy,
                      three_site_cross_check, transformed_modes, zero_mode_count)

entropy_from_R = entropy_closed
entropy_distorted = distorted_entropy
