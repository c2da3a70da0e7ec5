"""Composite Gauss-Legendre panels and Richardson extrapolation helpers."""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=8)
def _leggauss(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def panel_nodes(a: float, b: float, n_panels: int, order: int = 16):
    """Nodes and weights of a composite Gauss-Legendre rule on [a, b].

    Returns flat arrays of length ``n_panels * order``; panels are uniform.
    """
    if not b > a:
        raise ValueError(f"need b > a, got [{a}, {b}]")
    if n_panels < 1:
        raise ValueError("need at least one panel")
    x, w = _leggauss(order)
    edges = np.linspace(a, b, n_panels + 1)
    half = 0.5 * (edges[1] - edges[0])
    mids = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mids[:, None] + half * x[None, :]).ravel()
    weights = np.tile(half * w, n_panels)
    return nodes, weights


def richardson(values) -> tuple[complex, float]:
    """Extrapolate a sequence f(eps0 / 2**k), k = 0..n-1, to eps -> 0.

    Assumes an expansion f(eps) = f(0) + c1*eps + c2*eps^2 + ...; each
    triangular pass cancels the next power.  Returns the extrapolated limit
    and the magnitude of the last diagonal step (a Cauchy-style error gauge).
    """
    vals = list(values)
    if len(vals) < 2:
        raise ValueError("need at least two values to extrapolate")
    diag = [vals[0]]
    row = vals
    for j in range(1, len(vals)):
        fac = 2.0**j
        row = [(fac * row[i + 1] - row[i]) / (fac - 1.0) for i in range(len(row) - 1)]
        diag.append(row[0])
    return diag[-1], abs(diag[-1] - diag[-2])
