"""Bound states of a spin-0 particle in a D-dimensional ring-shaped Kratzer potential.

Everything is computed by the C++ core; this package re-exports it.
"""

from ._core import (
    AngularSolution,
    BoundState,
    Couplings,
    EigenCrossCheck,
    EnergyChannel,
    ModelParams,
    NonrelSubstitution,
    NoBoundStateError,
    NoRealAngularMomentumError,
    NegativeDiscriminantError,
    NonConvergenceError,
    OutOfBoundWindowError,
    PolyEval,
    QuantumNumbers,
    RadialIntermediates,
    ResidualReport,
    SolverConfig,
    SolveDiagnostics,
    angular_ode_residual,
    azimuthal,
    channel_at,
    coulomb_energy,
    coulomb_root,
    coulomb_series,
    derive_couplings,
    energy_residual_kratzer,
    energy_residual_noncentral,
    integrate,
    integrate_to_inf,
    j_from_ntilde,
    jacobi_sym,
    jprime_from_ntilde,
    laguerre,
    log_gamma,
    m_prime,
    matrix_eigen_crosscheck,
    matrix_eigen_crosscheck_coulomb,
    nonrel_energy,
    nonrel_transform,
    ntilde_from_j,
    polar_wavefunction,
    radial_intermediates,
    radial_ode_residual,
    radial_wavefunction,
    reduced_radial_wavefunction,
    solve_angular,
    solve_bound_state,
    total_wavefunction,
    transformed_nonrel_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
