"""Guided-photon kinematics for a rectangular hollow waveguide.

A mode (r, s) of a perfectly conducting rectangular pipe with transverse
dimensions b1 > b2 propagates only above its cutoff frequency
omega_c(r, s) = pi * sqrt((r/b1)^2 + (s/b2)^2).  Reinterpreting the cutoff
as a rest mass m makes the axial dispersion E^2 = p^2 + m^2 exactly that of
a free massive particle: group/phase velocities obey de Broglie's relations,
and the light-like vacuum 4-momentum splits into a space-like transverse
("frozen") part of norm -m^2 and a time-like axial part of norm +m^2.
Natural units hbar = c = 1; lengths in user units, frequencies and masses in
the inverse units.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .minkowski import FourVector
from .spinor import frame_triad

__all__ = [
    "WaveguideSpec",
    "ModeIndex",
    "GuidedPhotonState",
    "Velocities",
    "MomentumDecomposition",
    "cutoff_frequency",
    "lowest_cutoff",
    "list_modes",
    "guided_state",
    "velocities",
    "frame_basis",
    "guided_wavevector",
    "decompose_momentum",
    "decompose_position",
    "compton_wavelength",
]

_UNIT_TOL = 1e-12
_LIGHTLIKE_TOL = 1e-9
_TRANSVERSE_TOL = 1e-6


@dataclass(frozen=True)
class WaveguideSpec:
    """Rectangular guide: transverse dimensions and axis direction.

    The ordering b1 > b2 > 0 is required by default; a square guide
    (b1 == b2) is physically fine but breaks the ordering convention, so it
    is admitted only with ``allow_square=True`` (with a warning).
    """

    b1: float
    b2: float
    orientation: np.ndarray = field(default=None, repr=False)
    allow_square: bool = False

    def __post_init__(self):
        if not (self.b1 > 0 and self.b2 > 0):
            raise ValueError("transverse dimensions must be positive")
        if self.b1 == self.b2:
            if not self.allow_square:
                raise ValueError(
                    "square guide b1 == b2 violates the b1 > b2 convention; "
                    "pass allow_square=True to accept it"
                )
            warnings.warn("square guide b1 == b2 accepted; mode ordering may be degenerate")
        elif self.b1 < self.b2:
            raise ValueError(f"need b1 > b2, got b1={self.b1}, b2={self.b2}")
        axis = self.orientation
        if axis is None:
            axis = np.array([0.0, 0.0, 1.0])
        axis = np.asarray(axis, dtype=float)
        if axis.shape != (3,):
            raise ValueError("orientation must be a 3-vector")
        n = np.linalg.norm(axis)
        if abs(n - 1.0) > _UNIT_TOL:
            if n == 0:
                raise ValueError("orientation must be a nonzero vector")
            axis = axis / n
        object.__setattr__(self, "orientation", axis)

    @property
    def axis(self) -> np.ndarray:
        return self.orientation


@dataclass(frozen=True)
class ModeIndex:
    """Transverse mode numbers: r >= 1 half-waves across b1, s >= 0 across b2."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 0:
            raise ValueError(f"need r >= 1 and s >= 0, got (r, s) = ({self.r}, {self.s})")

    def transverse_wavenumbers(self, spec: WaveguideSpec) -> tuple[float, float]:
        return math.pi * self.r / spec.b1, math.pi * self.s / spec.b2


@dataclass(frozen=True)
class GuidedPhotonState:
    """On-shell guided photon: energy E, axial momentum p, effective mass m."""

    E: float
    p: np.ndarray
    m: float

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        object.__setattr__(self, "p", p)
        if not (self.E > 0 and self.m > 0):
            raise ValueError("need E > 0 and m > 0")
        closure = abs(self.E**2 - float(p @ p) - self.m**2)
        if closure > 1e-12 * self.E**2:
            raise ValueError(f"off-shell state: |E^2 - p^2 - m^2| = {closure:.3e}")

    @property
    def p_norm(self) -> float:
        return float(np.linalg.norm(self.p))


@dataclass(frozen=True)
class Velocities:
    """Group and phase velocity along the guide; v_p is (inf, inf, inf) at cutoff."""

    v_g: np.ndarray
    v_p: np.ndarray


@dataclass(frozen=True)
class MomentumDecomposition:
    """Split of a light-like 4-momentum into frozen + traveling parts.

    k = p_T + p_L with p_T = (0, k_perp) = m*eta (space-like, norm -m^2) and
    p_L = (E, p_axial) (time-like, norm +m^2); p_T.p_L = 0.
    """

    k: FourVector
    p_T: FourVector
    p_L: FourVector
    eta: FourVector
    m: float


def cutoff_frequency(spec: WaveguideSpec, mode: ModeIndex) -> float:
    """omega_c(r, s) = sqrt(k1^2 + k2^2) with k1 = r pi/b1, k2 = s pi/b2."""
    k1, k2 = mode.transverse_wavenumbers(spec)
    return math.hypot(k1, k2)


def lowest_cutoff(spec: WaveguideSpec) -> float:
    """Lowest cutoff over all modes, pi/b1 (mode r=1, s=0); the effective mass."""
    return cutoff_frequency(spec, ModeIndex(1, 0))


def list_modes(spec: WaveguideSpec, max_frequency: float) -> list[tuple[ModeIndex, float]]:
    """All modes with cutoff <= max_frequency, sorted by cutoff ascending."""
    if max_frequency <= 0:
        raise ValueError("max_frequency must be positive")
    out = []
    r = 1
    while math.pi * r / spec.b1 <= max_frequency:
        s = 0
        while True:
            mode = ModeIndex(r, s)
            wc = cutoff_frequency(spec, mode)
            if wc > max_frequency:
                break
            out.append((mode, wc))
            s += 1
        r += 1
    out.sort(key=lambda mw: (mw[1], mw[0].r, mw[0].s))
    return out


def guided_state(spec: WaveguideSpec, omega: float) -> GuidedPhotonState:
    """Traveling state at frequency omega in the lowest mode.

    E = omega, |p| = sqrt(omega^2 - m^2) along the guide axis, m = pi/b1.
    Below cutoff there is no traveling state; that regime belongs to the
    propagator module.
    """
    m = lowest_cutoff(spec)
    if not omega > m:
        raise ValueError(
            f"below cutoff: evanescent regime (omega = {omega}, cutoff = {m}); "
            "see the propagator module"
        )
    p = math.sqrt(omega * omega - m * m)
    return GuidedPhotonState(E=omega, p=p * spec.axis, m=m)


def velocities(state: GuidedPhotonState) -> Velocities:
    """Group and phase velocities, v_g = p/E and v_p = phat E/|p|.

    They satisfy v_g . v_p = 1 and E = m / sqrt(1 - v_g^2).  At cutoff
    (|p| = 0) the phase velocity diverges and is reported as an explicit
    infinite sentinel rather than NaN.
    """
    pn = state.p_norm
    v_g = state.p / state.E
    if pn == 0.0:
        return Velocities(v_g=v_g, v_p=np.full(3, math.inf))
    v_p = (state.p / pn) * (state.E / pn)
    return Velocities(v_g=v_g, v_p=v_p)


def frame_basis(p) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed orthonormal triad with e3 along p; see spinor.frame_triad."""
    return frame_triad(p)


def guided_wavevector(spec: WaveguideSpec, mode: ModeIndex, k3: float) -> FourVector:
    """Light-like vacuum 4-momentum of a guided mode with axial wavenumber k3.

    The transverse part has magnitude omega_c(r, s), laid out along the
    guide's transverse frame axes with weights (r pi/b1, s pi/b2); the total
    frequency is sqrt(omega_c^2 + k3^2).
    """
    if k3 < 0:
        raise ValueError("axial wavenumber k3 must be >= 0")
    k1, k2 = mode.transverse_wavenumbers(spec)
    e1, e2, e3 = frame_triad(spec.axis)
    spatial = k1 * e1 + k2 * e2 + k3 * e3
    omega = math.sqrt(k1 * k1 + k2 * k2 + k3 * k3)
    return FourVector(omega, spatial)


def decompose_momentum(
    k: FourVector, spec: WaveguideSpec, mode: ModeIndex
) -> MomentumDecomposition:
    """Orthogonal split of a light-like 4-momentum adapted to the guide.

    p_T = (0, k_perp) carries the frozen transverse motion (|k_perp| must
    equal the mode cutoff, which plays the role of the mass m); p_L = (E, p)
    is the on-shell massive 4-momentum of the motion along the guide.
    eta = p_T / m is the unit space-like direction, eta.eta = -1.
    """
    scale = k.t * k.t + float(k.spatial @ k.spatial)
    if abs(k.interval) > _LIGHTLIKE_TOL * scale:
        raise ValueError(f"4-momentum is not light-like: k.k = {k.interval:.3e}")
    m = cutoff_frequency(spec, mode)
    axis = spec.axis
    k_par = float(k.spatial @ axis) * axis
    k_perp = k.spatial - k_par
    perp_norm = float(np.linalg.norm(k_perp))
    if abs(perp_norm - m) > _TRANSVERSE_TOL * m:
        raise ValueError(
            f"transverse magnitude {perp_norm:.12g} does not match the mode cutoff {m:.12g}"
        )
    p_T = FourVector(0.0, k_perp)
    p_L = FourVector(k.t, k_par)
    eta = FourVector(0.0, k_perp / m)
    return MomentumDecomposition(k=k, p_T=p_T, p_L=p_L, eta=eta, m=m)


def decompose_position(x: FourVector, spec: WaveguideSpec) -> tuple[FourVector, FourVector]:
    """Split an event into transverse (0, x_perp) and axial (t, x_par) parts."""
    axis = spec.axis
    x_par = float(x.spatial @ axis) * axis
    return FourVector(0.0, x.spatial - x_par), FourVector(x.t, x_par)


def compton_wavelength(m: float) -> float:
    """Equivalent Compton wavelength 1/m of a guided photon (hbar = c = 1)."""
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    return 1.0 / m
