"""Relativistic photon wave mechanics for rectangular waveguides.

Spinor algebra of the six-component photon field, guided-wave kinematics
(effective mass, dispersion, velocities, orthogonal momentum splits), and
Feynman propagators for traveling and evanescent modes, with brute-force
quadrature oracles backing every closed form.  Natural units hbar = c = 1.
"""

from .minkowski import FourVector
from .propagator import (
    DecayFit,
    LightlikeSeparationError,
    OracleConvergenceError,
    PropagatorValue,
    QuadratureConfig,
    Regime,
    Separation,
    d_massless,
    decay_length_fit,
    s1_closed,
    s1_closed_one_dim,
    s1_oracle,
    s1_oracle_one_dim,
    s2_closed,
    s2_full_closed,
    s2_oracle,
)
from .special import (
    bessel_i1,
    bessel_i1_oracle,
    hankel2,
    hankel2_negimag,
    hankel2_negimag_oracle,
    hankel2_oracle,
)
from .spinor import (
    PolarizationTriplet,
    amplitude_spinor,
    build_generators,
    fields_to_spinor,
    frame_triad,
    omega_identity_check,
    polarization_basis,
    spin_sum,
    spin_sum_closed,
    spinor_to_fields,
    transverse_projector,
    wave_operator,
)
from .waveguide import (
    GuidedPhotonState,
    ModeIndex,
    MomentumDecomposition,
    Velocities,
    WaveguideSpec,
    compton_wavelength,
    cutoff_frequency,
    decompose_momentum,
    decompose_position,
    frame_basis,
    guided_state,
    guided_wavevector,
    list_modes,
    lowest_cutoff,
    velocities,
)

__version__ = "0.1.0"

__all__ = [
    "FourVector",
    # spinor algebra
    "PolarizationTriplet",
    "amplitude_spinor",
    "build_generators",
    "fields_to_spinor",
    "frame_triad",
    "omega_identity_check",
    "polarization_basis",
    "spin_sum",
    "spin_sum_closed",
    "spinor_to_fields",
    "transverse_projector",
    "wave_operator",
    # waveguide kinematics
    "GuidedPhotonState",
    "ModeIndex",
    "MomentumDecomposition",
    "Velocities",
    "WaveguideSpec",
    "compton_wavelength",
    "cutoff_frequency",
    "decompose_momentum",
    "decompose_position",
    "frame_basis",
    "guided_state",
    "guided_wavevector",
    "list_modes",
    "lowest_cutoff",
    "velocities",
    # special functions
    "bessel_i1",
    "bessel_i1_oracle",
    "hankel2",
    "hankel2_negimag",
    "hankel2_negimag_oracle",
    "hankel2_oracle",
    # propagators
    "DecayFit",
    "LightlikeSeparationError",
    "OracleConvergenceError",
    "PropagatorValue",
    "QuadratureConfig",
    "Regime",
    "Separation",
    "d_massless",
    "decay_length_fit",
    "s1_closed",
    "s1_closed_one_dim",
    "s1_oracle",
    "s1_oracle_one_dim",
    "s2_closed",
    "s2_full_closed",
    "s2_oracle",
]
