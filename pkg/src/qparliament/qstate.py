"""Single-qubit pure states, density matrices and the trace distance."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

ATOL = 1e-10
_STRICT = 1e-12


@dataclass(frozen=True)
class PureState:
    """A qubit on the Bloch sphere: cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.

    |0> is the "yes" vote and |1> the "no" vote.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise ValidationError(f"theta={self.theta!r} outside [0, pi]")
        if not (0.0 <= self.phi < 2 * math.pi):
            raise ValidationError(f"phi={self.phi!r} outside [0, 2pi)")

    @property
    def a(self) -> complex:
        return complex(math.cos(self.theta / 2))

    @property
    def b(self) -> complex:
        return complex(np.exp(1j * self.phi) * math.sin(self.theta / 2))

    def ket(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=complex)


class DensityMatrix:
    """Validated 2x2 density matrix (Hermitian, unit trace, positive)."""

    __slots__ = ("_m",)

    def __init__(self, entries):
        m = np.array(entries, dtype=complex)
        if m.shape != (2, 2):
            raise ValidationError(f"density matrix must be 2x2, got {m.shape}")
        if not np.allclose(m, m.conj().T, atol=_STRICT, rtol=0):
            raise ValidationError("density matrix is not Hermitian")
        if abs(np.trace(m) - 1) > _STRICT:
            raise ValidationError(f"density matrix trace {np.trace(m).real:.3g} != 1")
        if np.linalg.eigvalsh(m).min() < -_STRICT:
            raise ValidationError("density matrix has a negative eigenvalue")
        m.setflags(write=False)
        self._m = m

    @property
    def entries(self) -> np.ndarray:
        return self._m

    def __array__(self, dtype=None, copy=None):
        return self._m if dtype is None else self._m.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix({self._m.tolist()!r})"


RHO_YES = DensityMatrix([[1, 0], [0, 0]])
RHO_NO = DensityMatrix([[0, 0], [0, 1]])


def density_of(state: PureState) -> DensityMatrix:
    a, b = state.a, state.b
    return DensityMatrix(
        [[abs(a) ** 2, a * b.conjugate()], [b * a.conjugate(), abs(b) ** 2]]
    )


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Half the sum of absolute eigenvalues of ``rho - sigma``."""
    for m in (rho, sigma):
        if not isinstance(m, DensityMatrix):
            raise ValidationError(f"expected DensityMatrix, got {type(m).__name__}")
    eig = np.linalg.eigvalsh(rho.entries - sigma.entries)
    return float(min(1.0, 0.5 * np.abs(eig).sum()))


def distance_to_yes(state: PureState) -> float:
    return math.sin(state.theta / 2)


def distance_to_no(state: PureState) -> float:
    # cos(theta/2) written so that theta = pi gives exactly 0
    return math.sin((math.pi - state.theta) / 2)
