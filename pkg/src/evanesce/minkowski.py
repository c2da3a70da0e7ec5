"""Minkowski four-vectors with metric signature (+, -, -, -).

Convention: contravariant components x = (t, x1, x2, x3); the invariant
interval is x.dot(x) = t^2 - |x_spatial|^2.  Natural units hbar = c = 1
throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class FourVector:
    """An event or momentum (t, x) with Minkowski dot product."""

    t: float
    spatial: np.ndarray = field(repr=False)

    def __init__(self, t: float, spatial) -> None:
        spatial = np.asarray(spatial, dtype=float)
        if spatial.shape != (3,):
            raise ValueError(f"spatial part must be a 3-vector, got shape {spatial.shape}")
        object.__setattr__(self, "t", float(t))
        object.__setattr__(self, "spatial", spatial)

    def dot(self, other: "FourVector") -> float:
        return self.t * other.t - float(self.spatial @ other.spatial)

    @property
    def interval(self) -> float:
        """Invariant interval t^2 - |x|^2 (sign carries the causal regime)."""
        return self.dot(self)

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t + other.t, self.spatial + other.spatial)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t - other.t, self.spatial - other.spatial)

    def __mul__(self, a: float) -> "FourVector":
        return FourVector(self.t * a, self.spatial * a)

    __rmul__ = __mul__

    def as_array(self) -> np.ndarray:
        return np.concatenate(([self.t], self.spatial))

    def isclose(self, other: "FourVector", atol: float = 0.0, rtol: float = 1e-12) -> bool:
        return bool(np.allclose(self.as_array(), other.as_array(), atol=atol, rtol=rtol))

    def __repr__(self) -> str:  # compact, round-trippable enough for logs
        x = ", ".join(f"{c:.12g}" for c in self.spatial)
        return f"FourVector(t={self.t:.12g}, spatial=[{x}])"
