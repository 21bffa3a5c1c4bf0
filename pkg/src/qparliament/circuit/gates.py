"""Gate descriptions and their matrices.

Qubits are little-endian: qubit ``q`` is bit ``q`` of the basis-state index.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError

_ARITY = {"u": (1, 3), "ry": (1, 1), "rz": (1, 1), "h": (1, 0), "cp": (2, 1), "swap": (2, 0)}


@dataclass(frozen=True)
class GateSpec:
    name: str
    targets: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self):
        if self.name not in _ARITY:
            raise ValidationError(f"unknown gate {self.name!r}")
        n_targets, n_params = _ARITY[self.name]
        if len(self.targets) != n_targets or len(self.params) != n_params:
            raise ValidationError(f"gate {self.name} takes {n_targets} qubit(s) and {n_params} parameter(s)")
        if len(set(self.targets)) != len(self.targets):
            raise ValidationError(f"gate {self.name} repeats a qubit: {self.targets}")
        if any(q < 0 for q in self.targets):
            raise ValidationError(f"negative qubit index in {self.targets}")

    def matrix(self) -> np.ndarray:
        """Unitary of the gate; two-qubit matrices use ``targets[0]`` as the low bit."""
        p = self.params
        if self.name == "u":
            return u_matrix(*p)
        if self.name == "ry":
            return ry_matrix(p[0])
        if self.name == "rz":
            return rz_matrix(p[0])
        if self.name == "h":
            return np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
        if self.name == "cp":
            return np.diag([1, 1, 1, cmath.exp(1j * p[0])])
        return np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)

    def inverse(self) -> GateSpec:
        if self.name == "u":
            theta, phi, lam = self.params
            return GateSpec("u", self.targets, (-theta, -lam, -phi))
        if self.name in ("ry", "rz", "cp"):
            return GateSpec(self.name, self.targets, (-self.params[0],))
        return self


def U(q: int, theta: float, phi: float, lam: float) -> GateSpec:
    return GateSpec("u", (q,), (float(theta), float(phi), float(lam)))


def RY(q: int, theta: float) -> GateSpec:
    return GateSpec("ry", (q,), (float(theta),))


def RZ(q: int, theta: float) -> GateSpec:
    return GateSpec("rz", (q,), (float(theta),))


def H(q: int) -> GateSpec:
    return GateSpec("h", (q,))


def CP(control: int, target: int, angle: float) -> GateSpec:
    return GateSpec("cp", (control, target), (float(angle),))


def SWAP(a: int, b: int) -> GateSpec:
    return GateSpec("swap", (a, b))


def X(q: int) -> GateSpec:
    """Bit flip, expressed as U(pi, 0, pi)."""
    return U(q, math.pi, 0.0, math.pi)


def u_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [
            [c, -cmath.exp(1j * lam) * s],
            [cmath.exp(1j * phi) * s, cmath.exp(1j * (phi + lam)) * c],
        ],
        dtype=complex,
    )


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[cmath.exp(-0.5j * theta), 0], [0, cmath.exp(0.5j * theta)]], dtype=complex)


def format_gate(gate: GateSpec) -> str:
    params = " ".join(repr(float(x)) for x in gate.params)
    targets = " ".join(f"q{q}" for q in gate.targets)
    return " ".join(part for part in (gate.name, params, targets) if part)


def parse_gate(line: str) -> GateSpec:
    tokens = line.split()
    if not tokens:
        raise ValidationError("empty gate line")
    targets = tuple(int(t[1:]) for t in tokens[1:] if t.startswith("q"))
    params = tuple(float(t) for t in tokens[1:] if not t.startswith("q"))
    return GateSpec(tokens[0], targets, params)
