"""Hot quadrature kernels: numba-jitted fast path with a pure-numpy fallback.

Every kernel computes a plain weighted sum over precomputed quadrature nodes,
so the two implementations are interchangeable to floating-point roundoff.
The backend is chosen once at import time from the ``EVANESCE_BACKEND``
environment variable:

* ``auto`` (default) -- use numba if it imports, else numpy
* ``numba``          -- require numba, raise if unavailable
* ``numpy``          -- force the pure-numpy path

``benchmarks/bench_kernels.py`` times both paths on representative workloads.
"""

from __future__ import annotations

import math
import os
import warnings

import numpy as np

_ENV_VAR = "EVANESCE_BACKEND"


# ----------------------------------------------------------------- numpy path

def _damped_radial_3d_np(p, w, t, r, m, eps):
    # sum_j w_j * (p^2 / 2E) * [sin(pr)/(pr)] * exp(-iEt - eps*E)
    E = np.sqrt(p * p + m * m)
    geom = p * p * np.sinc(p * (r / np.pi))
    return np.sum(w * (geom / (2.0 * E)) * np.exp(-1j * E * t - eps * E))


def _damped_radial_1d_np(p, w, t, r, m, eps):
    # sum_j w_j * (cos(pr) / 2E) * exp(-iEt - eps*E)
    E = np.sqrt(p * p + m * m)
    return np.sum(w * (np.cos(p * r) / (2.0 * E)) * np.exp(-1j * E * t - eps * E))


def _evanescent_kappa_np(u, w, t, r, m):
    # kappa = m sin(u): sum_j w_j * m sin(u) * exp(-i t m cos(u) - m r sin(u))
    su = np.sin(u)
    return np.sum(w * m * su * np.exp(-1j * t * m * np.cos(u) - m * r * su))


def _rotated_hankel_np(v, w, z):
    # integral_0^inf exp(-z v)/sqrt((1-iv)^2 - 1) dv on nodes v (after any
    # endpoint substitution; weights already transformed)
    return np.sum(w * np.exp(-z * v) / np.sqrt((1.0 - 1j * v) ** 2 - 1.0))


def _i1_theta_np(th, w, x):
    # sum_j w_j * exp(x cos th) cos th
    c = np.cos(th)
    return np.sum(w * np.exp(x * c) * c)


# ----------------------------------------------------------------- loop path

def _damped_radial_3d_loops(p, w, t, r, m, eps):
    acc = 0.0 + 0.0j
    for j in range(p.shape[0]):
        pj = p[j]
        E = math.sqrt(pj * pj + m * m)
        x = pj * r
        if abs(x) < 1e-8:
            sinc = 1.0 - x * x / 6.0
        else:
            sinc = math.sin(x) / x
        damp = math.exp(-eps * E)
        ph = E * t
        acc += w[j] * (pj * pj * sinc / (2.0 * E)) * damp * complex(math.cos(ph), -math.sin(ph))
    return acc


def _damped_radial_1d_loops(p, w, t, r, m, eps):
    acc = 0.0 + 0.0j
    for j in range(p.shape[0]):
        pj = p[j]
        E = math.sqrt(pj * pj + m * m)
        damp = math.exp(-eps * E)
        ph = E * t
        acc += w[j] * (math.cos(pj * r) / (2.0 * E)) * damp * complex(math.cos(ph), -math.sin(ph))
    return acc


def _evanescent_kappa_loops(u, w, t, r, m):
    acc = 0.0 + 0.0j
    for j in range(u.shape[0]):
        su = math.sin(u[j])
        ph = t * m * math.cos(u[j])
        amp = m * su * math.exp(-m * r * su)
        acc += w[j] * amp * complex(math.cos(ph), -math.sin(ph))
    return acc


def _rotated_hankel_loops(v, w, z):
    acc = 0.0 + 0.0j
    for j in range(v.shape[0]):
        u = complex(1.0, -v[j])
        acc += w[j] * math.exp(-z * v[j]) / np.sqrt(u * u - 1.0)
    return acc


def _i1_theta_loops(th, w, x):
    acc = 0.0
    for j in range(th.shape[0]):
        c = math.cos(th[j])
        acc += w[j] * math.exp(x * c) * c
    return acc


_NUMPY_IMPL = {
    "damped_radial_3d": _damped_radial_3d_np,
    "damped_radial_1d": _damped_radial_1d_np,
    "evanescent_kappa": _evanescent_kappa_np,
    "rotated_hankel": _rotated_hankel_np,
    "i1_theta": _i1_theta_np,
}

_LOOP_IMPL = {
    "damped_radial_3d": _damped_radial_3d_loops,
    "damped_radial_1d": _damped_radial_1d_loops,
    "evanescent_kappa": _evanescent_kappa_loops,
    "rotated_hankel": _rotated_hankel_loops,
    "i1_theta": _i1_theta_loops,
}


def _compile_numba():
    from numba import njit

    return {name: njit(fn, cache=True, fastmath=False) for name, fn in _LOOP_IMPL.items()}


def _resolve_backend():
    requested = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if requested not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_ENV_VAR} must be one of auto/numba/numpy, got {requested!r}")
    if requested == "numpy":
        return "numpy", _NUMPY_IMPL
    try:
        return "numba", _compile_numba()
    except ImportError:
        if requested == "numba":
            raise
        warnings.warn("numba unavailable, falling back to the pure-numpy kernels")
        return "numpy", _NUMPY_IMPL


_BACKEND_NAME, _IMPL = _resolve_backend()

damped_radial_3d = _IMPL["damped_radial_3d"]
damped_radial_1d = _IMPL["damped_radial_1d"]
evanescent_kappa = _IMPL["evanescent_kappa"]
rotated_hankel = _IMPL["rotated_hankel"]
i1_theta = _IMPL["i1_theta"]


def backend_name() -> str:
    """Name of the kernel backend selected at import ("numba" or "numpy")."""
    return _BACKEND_NAME


def numpy_impl() -> dict:
    """The pure-numpy kernel set (for benchmarks and equivalence tests)."""
    return dict(_NUMPY_IMPL)


def numba_impl() -> dict | None:
    """The jitted kernel set, or None when numba is not in use."""
    if _BACKEND_NAME == "numba":
        return dict(_IMPL)
    try:
        return _compile_numba()
    except ImportError:
        return None
