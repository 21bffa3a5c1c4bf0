"""The vote-counting circuit.

Layout, for N voters on qubits 0..N-1:

1. voter initialisation: one U(theta, phi, lambda) per voter;
2. relabelling: a bit flip per voter so that |yes> = |0> reads as a 1;
3. pair adders: voters (2j, 2j+1) are summed into the 2-qubit register
   (voter 2j+1, carry) by a Draper adder whose source is voter 2j;
4. an adder tree: neighbouring registers are merged pairwise, the wider one
   (extended by a fresh carry qubit) absorbing the narrower via a Draper
   adder; an odd register out is carried to the next level unchanged.

Every adder uses exactly one ancilla (its carry), so a parliament of N
voters needs N - 1 ancillas and the final register holds the yes count.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from ..config import ParliamentConfig
from ..errors import CircuitBudgetError, ValidationError
from .gates import GateSpec, U, X, format_gate, parse_gate
from .statevector import DEFAULT_MAX_QUBITS, StateVector, draper_adder_gates, run, sample_measurement


@dataclass
class _Register:
    qubits: list[int]
    max_value: int


@dataclass
class ParliamentCircuit:
    n_qubits: int
    voter_qubits: list[int]
    ancilla_qubits: list[int]
    output_register: list[int]
    layers: list[tuple[str, list[GateSpec]]] = field(default_factory=list)

    @property
    def n_voters(self) -> int:
        return len(self.voter_qubits)

    @property
    def gates(self) -> list[GateSpec]:
        return [g for _, layer in self.layers for g in layer]

    def layer(self, name: str) -> list[GateSpec]:
        return [g for layer_name, layer in self.layers if layer_name == name for g in layer]

    def simulate(self, max_qubits: int = DEFAULT_MAX_QUBITS) -> StateVector:
        return run(StateVector(self.n_qubits, max_qubits=max_qubits), self.gates)

    def count_distribution(self, max_qubits: int = DEFAULT_MAX_QUBITS) -> np.ndarray:
        """Exact law of the yes count, read off the final state's amplitudes."""
        dist = self.simulate(max_qubits).register_distribution(self.output_register)
        return dist[: self.n_voters + 1]

    def sample_counts(self, shots: int, rng: np.random.Generator,
                      max_qubits: int = DEFAULT_MAX_QUBITS) -> dict[int, int]:
        return sample_measurement(self.simulate(max_qubits), self.output_register, shots, rng)

    def dump(self) -> str:
        lines = [
            f"# qubits {self.n_qubits}",
            "# voters " + " ".join(map(str, self.voter_qubits)),
            "# ancillas " + " ".join(map(str, self.ancilla_qubits)),
            "# output " + " ".join(map(str, self.output_register)),
        ]
        for name, layer in self.layers:
            lines.append(f"# layer {name}")
            lines.extend(format_gate(g) for g in layer)
        return "\n".join(lines) + "\n"


def parse_gate_list(text: str) -> list[GateSpec]:
    """Gates of a :meth:`ParliamentCircuit.dump`, comments skipped."""
    return [parse_gate(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def build_parliament_circuit(config: ParliamentConfig,
                             angles: Sequence[tuple[float, float, float]],
                             max_qubits: int | None = None) -> ParliamentCircuit:
    """Circuit for ``config`` with voter ``k`` initialised by U(*angles[k])."""
    n = config.n_total
    if len(angles) != n:
        raise ValidationError(f"expected {n} voter angle triples, got {len(angles)}")
    total = 2 * n - 1
    if max_qubits is not None and total > max_qubits:
        raise CircuitBudgetError(
            f"a {n}-voter circuit needs {total} qubits, budget is {max_qubits}"
        )

    voters = list(range(n))
    ancillas: list[int] = []

    def fresh() -> int:
        q = n + len(ancillas)
        ancillas.append(q)
        return q

    init = [U(q, *map(float, angles[q])) for q in voters]
    relabel = [X(q) for q in voters]

    pair_gates = []
    registers = []
    for j in range(0, n - 1, 2):
        dst = [voters[j + 1], fresh()]
        pair_gates += draper_adder_gates([voters[j]], dst)
        registers.append(_Register(dst, 2))
    if n % 2:
        registers.append(_Register([voters[-1]], 1))

    layers = [("init", init), ("relabel", relabel), ("pairs", pair_gates)]
    level = 0
    while len(registers) > 1:
        level += 1
        tree_gates = []
        merged = []
        for j in range(0, len(registers) - 1, 2):
            a, b = registers[j], registers[j + 1]
            dst, src = (a, b) if len(a.qubits) >= len(b.qubits) else (b, a)
            wide = dst.qubits + [fresh()]
            tree_gates += draper_adder_gates(src.qubits, wide)
            merged.append(_Register(wide, a.max_value + b.max_value))
        if len(registers) % 2:
            merged.append(registers[-1])
        registers = merged
        layers.append((f"tree{level}", tree_gates))

    out = registers[0]
    assert out.max_value == n and (1 << len(out.qubits)) > n
    return ParliamentCircuit(
        n_qubits=n + len(ancillas),
        voter_qubits=voters,
        ancilla_qubits=ancillas,
        output_register=out.qubits,
        layers=layers,
    )
