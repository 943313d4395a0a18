"""Spin-1/2 Landau-type problem with Dunkl derivatives: exact operator
algebra, parity-sector spectra, a finite-difference eigenvalue oracle, and
canonical thermodynamics."""

from .algebra import (BivarPoly, WignerParams, commutator_xD, dunkl_derive,
                      dunkl_laplacian, reflect)
from .angular import (AngularEigenpair, TrigPoly, angular_eigenpair, apply_B,
                      apply_G, jacobi, lambda_value)
from .radial_oracle import (DiscretizationConfig, RadialProblem,
                            build_tridiagonal, lowest_eigenvalues,
                            validate_sector)
from .spectrum import (OscillatorScale, SectorState, energy,
                       energy_over_omega_c, eta, hyp1f1, radial_wavefunction,
                       radical_identity_check, rho)
from .thermo import (ThermoCurve, ThermoInputs, direct_sum_partition, entropy,
                     heat_capacity, helmholtz, internal_energy, partition,
                     sweep)

__version__ = "0.1.0"

__all__ = [
    "AngularEigenpair", "BivarPoly", "DiscretizationConfig",
    "OscillatorScale", "RadialProblem", "SectorState", "ThermoCurve",
    "ThermoInputs", "TrigPoly", "WignerParams", "angular_eigenpair",
    "apply_B", "apply_G", "build_tridiagonal", "commutator_xD",
    "direct_sum_partition", "dunkl_derive", "dunkl_laplacian", "energy",
    "energy_over_omega_c", "entropy", "eta", "heat_capacity", "helmholtz",
    "hyp1f1", "internal_energy", "jacobi", "lambda_value",
    "lowest_eigenvalues", "partition", "radial_wavefunction",
    "radical_identity_check", "reflect", "rho", "sweep", "validate_sector",
]
