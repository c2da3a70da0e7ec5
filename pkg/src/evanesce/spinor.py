"""Six-component spinor algebra for the photon field.

The free Maxwell equations, written for the Riemann-Silberstein-style column
psi = (E, iB)/sqrt(2), take a first-order Dirac-like form
i beta^mu d_mu psi = 0.  This module builds the generator matrices of that
representation, the helicity polarization basis, the plane-wave amplitude
spinors, and the helicity projector identities that the rest of the package
(and the verification CLI) assert numerically.

Layout conventions
------------------
* spinors are flat complex arrays of shape (6,): upper triple = electric
  part, lower triple = i * magnetic part;
* 6x6 matrices are complex ndarrays;
* the metric is diag(1, -1, -1, -1) with x = (t, +x_spatial), so the
  momentum contraction used below is beta_mu k^mu = beta0*omega - beta.k.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "TAU",
    "BETA0",
    "BETA",
    "CHI",
    "SPIN",
    "PolarizationTriplet",
    "build_generators",
    "frame_triad",
    "polarization_basis",
    "amplitude_spinor",
    "fields_to_spinor",
    "spinor_to_fields",
    "wave_operator",
    "spin_sum",
    "spin_sum_closed",
    "transverse_projector",
    "omega_identity_check",
]

# Ratio (k1^2+k2^2)/|k|^2 below which a wave vector counts as axial and the
# transverse frame falls back to the fixed limiting basis.
AXIAL_EPS = 1e-24


def _build_tau() -> np.ndarray:
    """Spin-1 generators (tau_i)_jk = -i eps_ijk, shape (3, 3, 3)."""
    tau = np.zeros((3, 3, 3), dtype=complex)
    for i, j, k, sign in (
        (0, 1, 2, 1.0), (0, 2, 1, -1.0),
        (1, 2, 0, 1.0), (1, 0, 2, -1.0),
        (2, 0, 1, 1.0), (2, 1, 0, -1.0),
    ):
        tau[i, j, k] = -1j * sign
    return tau


TAU = _build_tau()
BETA0 = np.diag([1.0, 1.0, 1.0, -1.0, -1.0, -1.0]).astype(complex)
BETA = np.stack([
    np.block([[np.zeros((3, 3), complex), TAU[i]],
              [-TAU[i], np.zeros((3, 3), complex)]])
    for i in range(3)
])
CHI = np.stack([BETA0 @ BETA[i] for i in range(3)])
SPIN = np.stack([np.kron(np.eye(2), TAU[i]) for i in range(3)])

for _m in (TAU, BETA0, BETA, CHI, SPIN):
    _m.setflags(write=False)


def build_generators() -> dict:
    """All generator matrices of the representation.

    Returns a dict with keys ``beta0`` (6x6), ``beta``/``chi``/``spin``
    (each (3, 6, 6)).  They satisfy, exactly in floating point:
    chi_i = beta0 beta_i, and SPIN.SPIN = s(s+1) I = 2 I for spin 1.
    """
    return {
        "beta0": BETA0.copy(),
        "beta": BETA.copy(),
        "chi": CHI.copy(),
        "spin": SPIN.copy(),
    }


class PolarizationTriplet(NamedTuple):
    """Helicity basis for a wave vector: eps(k, +1), eps(k, -1), eps(k, 0)."""

    eps_plus: np.ndarray
    eps_minus: np.ndarray
    eps_zero: np.ndarray

    def __getitem__(self, helicity):  # type: ignore[override]
        if helicity in (1, -1, 0):
            return {1: self.eps_plus, -1: self.eps_minus, 0: self.eps_zero}[helicity]
        return tuple.__getitem__(self, helicity)


def _as_wavevector(k) -> tuple[np.ndarray, float]:
    k = np.asarray(k, dtype=float)
    if k.shape != (3,):
        raise ValueError(f"wave vector must be a real 3-vector, got shape {k.shape}")
    n = float(np.linalg.norm(k))
    if not np.isfinite(n):
        raise ValueError("wave vector must be finite")
    return k, n


def frame_triad(k) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed orthonormal triad (e1, e2, e3) adapted to k, e3 = k/|k|.

    e1 and e2 are the transverse linear-polarization directions, chosen so
    that as k -> (0, 0, |k|) the triad goes continuously to the Cartesian
    axes.  For k exactly on the negative 3-axis the limit is direction
    dependent; the convention here is e1 = (-1, 0, 0), e2 = (0, 1, 0), which
    keeps the triad right handed.
    """
    k, n = _as_wavevector(k)
    if n == 0.0:
        raise ValueError("frame_triad undefined for the zero wave vector")
    k1, k2, k3 = k
    perp2 = k1 * k1 + k2 * k2
    if perp2 < AXIAL_EPS * n * n:
        if k3 > 0:
            e1 = np.array([1.0, 0.0, 0.0])
            e2 = np.array([0.0, 1.0, 0.0])
        else:
            e1 = np.array([-1.0, 0.0, 0.0])
            e2 = np.array([0.0, 1.0, 0.0])
        return e1, e2, k / n
    e1 = np.array([
        (k1 * k1 * k3 + k2 * k2 * n) / (n * perp2),
        (k1 * k2 * k3 - k1 * k2 * n) / (n * perp2),
        -k1 / n,
    ])
    e2 = np.array([
        (k1 * k2 * k3 - k1 * k2 * n) / (n * perp2),
        (k2 * k2 * k3 + k1 * k1 * n) / (n * perp2),
        -k2 / n,
    ])
    return e1, e2, k / n


def polarization_basis(k) -> PolarizationTriplet:
    """Circular polarization vectors for helicities +1, -1, 0.

    eps(k, +/-1) = [e1 +/- i e2]/sqrt(2) from the transverse frame, and
    eps(k, 0) = k/|k|.  The triplet is orthonormal, complete
    (sum_h eps eps^+ = I_3) and satisfies eps(k, +1) = conj(eps(k, -1)).
    The overall phase of the transverse pair is fixed by the continuity of
    ``frame_triad`` toward the positive 3-axis.
    """
    e1, e2, e3 = frame_triad(k)
    eps_plus = (e1 + 1j * e2) / np.sqrt(2.0)
    eps_minus = (e1 - 1j * e2) / np.sqrt(2.0)
    return PolarizationTriplet(eps_plus, eps_minus, e3.astype(complex))


def amplitude_spinor(k, helicity: int, branch: str = "positive") -> np.ndarray:
    """Unit-norm plane-wave amplitude spinor for a given helicity.

    positive branch: f(k, h) = (eps(k, h); h eps(k, h)) / sqrt(1 + h^2)
    negative branch: g(k, h) = (h eps(k, h); eps(k, h)) / sqrt(1 + h^2)

    For h = +/-1 the positive branch is annihilated by the plane-wave
    operator |k| beta0 - beta.k; the h = 0 spinor is annihilated by
    beta.k alone (it carries zero frequency).
    """
    if helicity not in (-1, 0, 1):
        raise ValueError(f"helicity must be -1, 0 or +1, got {helicity}")
    if branch not in ("positive", "negative"):
        raise ValueError(f"branch must be 'positive' or 'negative', got {branch!r}")
    eps = polarization_basis(k)[helicity]
    norm = np.sqrt(1.0 + helicity * helicity)
    if branch == "positive":
        return np.concatenate([eps, helicity * eps]) / norm
    return np.concatenate([helicity * eps, eps]) / norm


def fields_to_spinor(E, B) -> np.ndarray:
    """Pack electric and magnetic 3-vectors into psi = (E, iB)/sqrt(2)."""
    E = np.asarray(E, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if E.shape != (3,) or B.shape != (3,):
        raise ValueError("E and B must be 3-vectors")
    return np.concatenate([E, 1j * B]) / np.sqrt(2.0)


def spinor_to_fields(psi) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`fields_to_spinor`; exact round trip.

    Returns complex arrays; for a spinor built from real fields the
    imaginary parts are exactly zero.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (6,):
        raise ValueError("spinor must have 6 components")
    return np.sqrt(2.0) * psi[:3], -1j * np.sqrt(2.0) * psi[3:]


def beta_dot(k) -> np.ndarray:
    """Spatial contraction beta.k = sum_i beta_i k_i."""
    k, _ = _as_wavevector(k)
    return np.tensordot(k, BETA, axes=(0, 0))


def chi_dot(k) -> np.ndarray:
    """Helicity operator contraction chi.k; spectrum {+|k| x2, -|k| x2, 0 x2}."""
    k, _ = _as_wavevector(k)
    return np.tensordot(k, CHI, axes=(0, 0))


def wave_operator(k, omega: float) -> np.ndarray:
    """Plane-wave form of the field operator: omega*beta0 - beta.k.

    Equals beta_mu k^mu for k^mu = (omega, k) in this metric; applied to an
    on-shell transverse amplitude spinor it gives zero.
    """
    return omega * BETA0 - beta_dot(k)


def transverse_projector(k) -> np.ndarray:
    """6x6 projector I_2 (x) (I_3 - khat khat^T) onto the transverse sector."""
    k, n = _as_wavevector(k)
    if n == 0.0:
        raise ValueError("transverse projector undefined for the zero wave vector")
    khat = k / n
    return np.kron(np.eye(2), np.eye(3) - np.outer(khat, khat)).astype(complex)


def spin_sum(k) -> np.ndarray:
    """Helicity sum over transverse amplitudes, sum_{h=+-1} f(k,h) fbar(k,h).

    fbar = f^dagger beta0.  The same sum over the negative-branch spinors
    g(k, h) gives the identical matrix; :func:`spin_sum_closed` provides the
    independent closed form the two are checked against.
    """
    k, n = _as_wavevector(k)
    if n == 0.0:
        raise ValueError("spin sum undefined for the zero wave vector")
    total = np.zeros((6, 6), dtype=complex)
    for h in (1, -1):
        f = amplitude_spinor(k, h, "positive")
        total += np.outer(f, f.conj()) @ BETA0
    return total


def spin_sum_closed(k) -> np.ndarray:
    """Closed form of the helicity sum: (beta_mu k^mu / 2 omega) P_transverse."""
    k, n = _as_wavevector(k)
    if n == 0.0:
        raise ValueError("spin sum undefined for the zero wave vector")
    return wave_operator(k, n) @ transverse_projector(k) / (2.0 * n)


def omega_identity_check(k, omega: float) -> float:
    """Residual of the squared-operator identity at momentum (omega, k).

    The square of beta_mu k^mu equals (omega^2 - |k|^2) I_6 plus the
    transversality block Omega(k) = I_2 (x) (k k^T); the gradient eigenvalue
    convention inside Omega is fixed so the identity is exact.  Returns the
    max entrywise residual (zero to machine precision for any omega, k).
    """
    k, n = _as_wavevector(k)
    op = wave_operator(k, float(omega))
    omega_hat = np.kron(np.eye(2), np.outer(k, k)).astype(complex)
    lhs = op @ op
    rhs = (omega * omega - n * n) * np.eye(6, dtype=complex) + omega_hat
    return float(np.max(np.abs(lhs - rhs)))
