"""Dense statevector simulation."""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np

from ..errors import CircuitBudgetError, ValidationError
from .gates import CP, H, SWAP, GateSpec

NORM_ATOL = 1e-9
DEFAULT_MAX_QUBITS = 26


class StateVector:
    """Amplitudes of an ``n``-qubit register, little-endian qubit order."""

    __slots__ = ("qubit_count", "amplitudes")

    def __init__(self, qubit_count: int, amplitudes=None, *, max_qubits: int = DEFAULT_MAX_QUBITS):
        if qubit_count < 1:
            raise ValidationError("a state vector needs at least one qubit")
        if qubit_count > max_qubits:
            raise CircuitBudgetError(
                f"{qubit_count} qubits exceed the statevector budget of {max_qubits}"
            )
        if amplitudes is None:
            amplitudes = np.zeros(1 << qubit_count, dtype=complex)
            amplitudes[0] = 1.0
        else:
            amplitudes = np.array(amplitudes, dtype=complex)
            if amplitudes.shape != (1 << qubit_count,):
                raise ValidationError(f"expected {1 << qubit_count} amplitudes, got {amplitudes.shape}")
            if abs(np.vdot(amplitudes, amplitudes).real - 1) > NORM_ATOL:
                raise ValidationError("amplitudes are not normalised")
        self.qubit_count = qubit_count
        self.amplitudes = amplitudes

    @classmethod
    def basis(cls, qubit_count: int, index: int, **kw) -> StateVector:
        sv = cls(qubit_count, **kw)
        if not 0 <= index < (1 << qubit_count):
            raise ValidationError(f"basis index {index} out of range")
        sv.amplitudes[0] = 0.0
        sv.amplitudes[index] = 1.0
        return sv

    def copy(self) -> StateVector:
        new = object.__new__(StateVector)
        new.qubit_count = self.qubit_count
        new.amplitudes = self.amplitudes.copy()
        return new

    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def register_distribution(self, register: Sequence[int]) -> np.ndarray:
        """Exact marginal law of the integer held in ``register`` (LSB first)."""
        _check_register(self, register)
        idx = np.arange(1 << self.qubit_count)
        value = np.zeros_like(idx)
        for k, q in enumerate(register):
            value |= ((idx >> q) & 1) << k
        return np.bincount(value, weights=self.probabilities(), minlength=1 << len(register))

    # in-place kernels; callers go through apply_gate / run

    def _tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.qubit_count)

    def _axis(self, q: int) -> int:
        return self.qubit_count - 1 - q

    def _apply_1q(self, m: np.ndarray, q: int):
        amps = self.amplitudes.reshape(1 << (self.qubit_count - 1 - q), 2, 1 << q)
        self.amplitudes = np.einsum("ij,ajb->aib", m, amps).reshape(-1)

    def _apply_phase(self, control: int, target: int, angle: float):
        t = self._tensor()
        index = [slice(None)] * self.qubit_count
        index[self._axis(control)] = 1
        index[self._axis(target)] = 1
        t[tuple(index)] *= np.exp(1j * angle)

    def _apply_swap(self, a: int, b: int):
        t = np.swapaxes(self._tensor(), self._axis(a), self._axis(b))
        self.amplitudes = np.ascontiguousarray(t).reshape(-1)

    def _apply(self, gate: GateSpec):
        if max(gate.targets) >= self.qubit_count:
            raise ValidationError(
                f"gate {gate.name} on qubits {gate.targets} but state has {self.qubit_count}"
            )
        if gate.name == "cp":
            self._apply_phase(*gate.targets, gate.params[0])
        elif gate.name == "swap":
            self._apply_swap(*gate.targets)
        else:
            self._apply_1q(gate.matrix(), gate.targets[0])


def _check_register(sv: StateVector, register: Sequence[int]):
    if len(set(register)) != len(register):
        raise ValidationError(f"register repeats a qubit: {list(register)}")
    if any(not 0 <= q < sv.qubit_count for q in register):
        raise ValidationError(f"register {list(register)} out of range for {sv.qubit_count} qubits")


def apply_gate(sv: StateVector, gate: GateSpec) -> StateVector:
    out = sv.copy()
    out._apply(gate)
    return out


def run(sv: StateVector, gates: Iterable[GateSpec], *, check_norm: bool = False) -> StateVector:
    """Apply ``gates`` in order to a copy of ``sv``."""
    out = sv.copy()
    for gate in gates:
        out._apply(gate)
        if check_norm and abs(out.norm() - 1) > NORM_ATOL:
            raise RuntimeError(f"norm drifted to {out.norm()!r} after {gate}")
    return out


def qft_gates(register: Sequence[int]) -> list[GateSpec]:
    """QFT on ``register`` (LSB first): |x> -> 2^{-m/2} sum_y e^{2 pi i x y / 2^m} |y>."""
    reg = list(register)
    m = len(reg)
    gates = []
    for j in reversed(range(m)):
        gates.append(H(reg[j]))
        for k in reversed(range(j)):
            gates.append(CP(reg[k], reg[j], math.pi / (1 << (j - k))))
    for i in range(m // 2):
        gates.append(SWAP(reg[i], reg[m - 1 - i]))
    return gates


def inverse_qft_gates(register: Sequence[int]) -> list[GateSpec]:
    return [g.inverse() for g in reversed(qft_gates(register))]


def qft(sv: StateVector, register: Sequence[int]) -> StateVector:
    _check_register(sv, register)
    return run(sv, qft_gates(register))


def inverse_qft(sv: StateVector, register: Sequence[int]) -> StateVector:
    _check_register(sv, register)
    return run(sv, inverse_qft_gates(register))


def draper_adder_gates(src: Sequence[int], dst: Sequence[int]) -> list[GateSpec]:
    """|a>|b> -> |a>|(a + b) mod 2^m> with m = len(dst).

    ``src`` may be narrower than ``dst``; it is then read as zero-extended.
    """
    src, dst = list(src), list(dst)
    if set(src) & set(dst):
        raise ValidationError(f"adder registers overlap: {src} and {dst}")
    if len(src) > len(dst):
        raise ValidationError(f"source width {len(src)} exceeds destination width {len(dst)}")
    if len(set(src)) != len(src) or len(set(dst)) != len(dst):
        raise ValidationError("adder register repeats a qubit")
    m = len(dst)
    ladder = [
        CP(src[s], dst[i], 2 * math.pi * 2.0 ** (i + s - m))
        for i in range(m)
        for s in range(len(src))
        if i + s < m
    ]
    return qft_gates(dst) + ladder + inverse_qft_gates(dst)


def draper_add(sv: StateVector, src: Sequence[int], dst: Sequence[int]) -> StateVector:
    gates = draper_adder_gates(src, dst)
    _check_register(sv, list(src) + list(dst))
    return run(sv, gates)


def sample_measurement(sv: StateVector, register: Sequence[int], shots: int,
                       rng: np.random.Generator) -> dict[int, int]:
    """Histogram of ``shots`` readouts of ``register``; the state is left untouched."""
    if shots < 1:
        raise ValidationError("shots must be >= 1")
    probs = sv.register_distribution(register)
    probs = np.clip(probs, 0.0, None)
    counts = rng.multinomial(shots, probs / probs.sum())
    return {int(v): int(c) for v, c in enumerate(counts) if c}
