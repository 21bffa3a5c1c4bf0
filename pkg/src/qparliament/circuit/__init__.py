from .gates import CP, H, RY, RZ, SWAP, U, X, GateSpec, format_gate, parse_gate, u_matrix
from .parliament_circuit import ParliamentCircuit, build_parliament_circuit, parse_gate_list
from .statevector import (
    StateVector,
    apply_gate,
    draper_add,
    draper_adder_gates,
    inverse_qft,
    inverse_qft_gates,
    qft,
    qft_gates,
    run,
    sample_measurement,
)
from .zy import ZYDecomposition, zy_decompose, zy_decompose_unitary
