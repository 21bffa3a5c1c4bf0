from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .gates import ry_matrix, rz_matrix


@dataclass(frozen=True)
class ZYDecomposition:
    """U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta)."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def matrix(self) -> np.ndarray:
        return (
            cmath.exp(1j * self.alpha)
            * rz_matrix(self.beta) @ ry_matrix(self.gamma) @ rz_matrix(self.delta)
        )


def zy_decompose(theta: float, phi: float, lam: float) -> ZYDecomposition:
    """Closed form for the U(theta, phi, lambda) gate."""
    return ZYDecomposition(alpha=(phi + lam) / 2, beta=phi, gamma=theta, delta=lam)


def zy_decompose_unitary(u) -> ZYDecomposition:
    """Z-Y Euler angles of an arbitrary 2x2 unitary."""
    u = np.asarray(u, dtype=complex)
    alpha = cmath.phase(np.linalg.det(u)) / 2
    v = u * cmath.exp(-1j * alpha)  # special unitary [[a, -b*], [b, a*]]
    a, b = v[0, 0], v[1, 0]
    gamma = 2 * math.atan2(abs(b), abs(a))
    # arg a = -(beta + delta)/2, arg b = (beta - delta)/2; an absent amplitude
    # leaves the corresponding combination free, so pin it to zero.
    s = -2 * cmath.phase(a) if abs(a) > 1e-14 else 0.0
    d = 2 * cmath.phase(b) if abs(b) > 1e-14 else 0.0
    return ZYDecomposition(alpha=alpha, beta=(s + d) / 2, gamma=gamma, delta=(s - d) / 2)
