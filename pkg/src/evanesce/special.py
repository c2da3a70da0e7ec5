"""Hankel and modified-Bessel evaluations for the propagator closed forms.

Production values come from scipy.special; every function is paired with an
independent integral-representation oracle evaluated by quadrature, which is
what the test suite and the ``verify`` CLI assert against:

* H_nu^(2)(z), z > 0: the outgoing-wave combination J_nu - i Y_nu.  Oracle:
  the Mehler-Sonine integral (2i/pi) int_1^inf exp(-izu)/sqrt(u^2-1) du,
  made absolutely convergent by rotating the contour to u = 1 - iv (the
  integrand decays as exp(-zv); same lower-half-plane prescription the
  propagators use).  The order-1 oracle follows from the recurrence
  H_1^(2) = -dH_0^(2)/dz by Richardson-extrapolated central differences.
* H_nu^(2)(-is), s > 0 (the space-like branch): connected to the decaying
  modified Bessel function, H_0^(2)(-is) = (2i/pi) K_0(s) and
  H_1^(2)(-is) = -(2/pi) K_1(s).  Oracle: the same contour integral rotated
  onto the lower imaginary axis, where it is absolutely convergent.
* I_1(x): oracle (1/pi) int_0^pi exp(x cos th) cos th dth.

``finite_trig_form`` evaluates the superficially similar finite transform
(2/pi) int_0^{pi/2} exp(-iz sin th) dth.  Its real part is exactly J_0(z),
but its imaginary part is the (negated) Struve function H_0, not -Y_0, so it
is NOT the outgoing Hankel function; it is kept only so the test suite can
document that discrepancy explicitly.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as _sp

from . import _kernels
from .quadrature import panel_nodes

__all__ = [
    "hankel2",
    "hankel2_negimag",
    "bessel_i1",
    "hankel2_oracle",
    "hankel2_negimag_oracle",
    "bessel_i1_oracle",
    "finite_trig_form",
]

_ORDERS = (0, 1)


def _check_order(nu: int) -> int:
    if nu not in _ORDERS:
        raise ValueError(f"order must be 0 or 1, got {nu}")
    return int(nu)


def hankel2(nu: int, z: float) -> complex:
    """Hankel function of the second kind H_nu^(2)(z) for real z > 0."""
    nu = _check_order(nu)
    z = float(z)
    if not z > 0:
        raise ValueError(
            f"need z > 0, got {z}; use hankel2_negimag for the space-like branch"
        )
    return complex(_sp.hankel2(nu, z))


def hankel2_negimag(nu: int, s: float) -> complex:
    """H_nu^(2) evaluated at -i s for real s > 0 (exponentially decaying).

    Uses the modified-Bessel connection H_0^(2)(-is) = (2i/pi) K_0(s),
    H_1^(2)(-is) = -(2/pi) K_1(s), which keeps the exact real/imaginary
    structure of the two orders.
    """
    nu = _check_order(nu)
    s = float(s)
    if not s > 0:
        raise ValueError(f"need s > 0, got {s}")
    if nu == 0:
        return 2j / math.pi * float(_sp.kv(0, s))
    return complex(-2.0 / math.pi * float(_sp.kv(1, s)))


def bessel_i1(x: float) -> float:
    """Modified Bessel function of the first kind I_1(x) for x > 0."""
    x = float(x)
    if not x > 0:
        raise ValueError(f"need x > 0, got {x}")
    return float(_sp.i1(x))


# ----------------------------------------------------------------- oracles

def _hankel2_oracle_order0(z: float) -> complex:
    # (2/pi) e^{-iz} int_0^inf e^{-zv} / sqrt((1-iv)^2 - 1) dv, with v = w^2
    # to absorb the 1/sqrt(v) endpoint; integrand then smooth and decaying.
    wmax = math.sqrt(45.0 / z) + 0.5
    nodes, weights = panel_nodes(0.0, wmax, n_panels=96, order=16)
    v = nodes * nodes
    w = 2.0 * nodes * weights
    total = _kernels.rotated_hankel(v, w, z)
    return (2.0 / math.pi) * complex(np.exp(-1j * z)) * total


def hankel2_oracle(nu: int, z: float) -> complex:
    """Quadrature ground truth for H_nu^(2)(z), independent of scipy.

    Order 0 evaluates the rotated Mehler-Sonine contour integral directly;
    order 1 applies the recurrence H_1^(2)(z) = -dH_0^(2)(z)/dz with
    Richardson-extrapolated central differences of step 1e-4 * max(1, z).
    """
    nu = _check_order(nu)
    z = float(z)
    if not z > 0:
        raise ValueError(f"need z > 0, got {z}")
    if nu == 0:
        return _hankel2_oracle_order0(z)
    h = 1e-4 * max(1.0, z)
    d = [
        (_hankel2_oracle_order0(z + step) - _hankel2_oracle_order0(z - step)) / (2.0 * step)
        for step in (h, h / 2.0)
    ]
    deriv = (4.0 * d[1] - d[0]) / 3.0
    return -deriv


def hankel2_negimag_oracle(nu: int, s: float) -> complex:
    """Quadrature ground truth for H_nu^(2)(-is) on the rotated contour.

    H_0^(2)(-is) = (2i/pi) int_0^inf exp(-s cosh u) du and the order-1 value
    is its -i d/ds derivative, -(2/pi) int_0^inf cosh u exp(-s cosh u) du;
    both absolutely convergent for s > 0.
    """
    nu = _check_order(nu)
    s = float(s)
    if not s > 0:
        raise ValueError(f"need s > 0, got {s}")
    umax = math.acosh(1.0 + 40.0 / s) + 0.5
    nodes, weights = panel_nodes(0.0, umax, n_panels=64, order=16)
    ch = np.cosh(nodes)
    if nu == 0:
        return 2j / math.pi * float(np.sum(weights * np.exp(-s * ch)))
    return complex(-2.0 / math.pi * float(np.sum(weights * ch * np.exp(-s * ch))))


def bessel_i1_oracle(x: float) -> float:
    """Quadrature ground truth for I_1(x): (1/pi) int_0^pi e^{x cos th} cos th dth."""
    x = float(x)
    if not x > 0:
        raise ValueError(f"need x > 0, got {x}")
    n_panels = max(32, int(x / 2) + 16)
    nodes, weights = panel_nodes(0.0, math.pi, n_panels=n_panels, order=16)
    return float(_kernels.i1_theta(nodes, weights, x)) / math.pi


def finite_trig_form(z: float) -> complex:
    """The finite transform (2/pi) int_0^{pi/2} exp(-iz sin th) dth.

    Equals J_0(z) - i H_0(z) with H_0 the Struve function: the real part
    reproduces J_0 exactly but the imaginary part is not -Y_0, so this is
    not an oracle for :func:`hankel2`.  Retained for documentation tests.
    """
    z = float(z)
    if not z > 0:
        raise ValueError(f"need z > 0, got {z}")
    n_panels = max(16, int(z) + 8)
    nodes, weights = panel_nodes(0.0, math.pi / 2.0, n_panels=n_panels, order=16)
    return 2.0 / math.pi * complex(np.sum(weights * np.exp(-1j * z * np.sin(nodes))))
