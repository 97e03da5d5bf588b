"""Gaussian states under quadratic Hamiltonians with a thermal bath."""

from gausslind._core import (
    AiryValues,
    BathParams,
    ConstantProfile,
    GaussianParams,
    GaussianState,
    HeisenbergError,
    IntegrationError,
    InvertedProfile,
    ModeCoefficients,
    PropagatorMatrix,
    QuadratureError,
    SqrtRampProfile,
    TabulatedProfile,
    Tolerances,
    TrajectorySample,
    airy,
    chi_at,
    constant_propagator_closed,
    covariance_det,
    d_asymptote_iho,
    evolve,
    fundamental_pair,
    iho_propagator_closed,
    m_matrix,
    m_matrix_iho_closed,
    mode_coefficients,
    omega_squared,
    oracle_evolve,
    params_to_state,
    propagator_at,
    ramp_propagator_closed,
    reference_omega,
    state_to_params,
    symplectic_eigenvalue,
    trajectory,
    two_time_propagator,
    von_neumann_entropy,
    wrap_angle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
